#include "qutrit/gates.hpp"

#include <cmath>
#include <stdexcept>

namespace qutrit {

Unitary3 chrestenson() {
  const cplx w = std::polar(1.0, 2.0 * kPi / 3.0);
  const cplx w2 = std::polar(1.0, 4.0 * kPi / 3.0);
  Mat3c m;
  m << 1.0, 1.0, 1.0,
       1.0, w, w2,
       1.0, w2, w;
  return Unitary3::from_matrix(m / std::sqrt(3.0));
}

Unitary3 swap(LevelPair levels) {
  levels = LevelPair::make(levels.r, levels.s);
  Mat3c m = Mat3c::Identity();
  const int r = levels.r - 1, s = levels.s - 1;
  m(r, r) = 0.0;
  m(s, s) = 0.0;
  m(r, s) = 1.0;
  m(s, r) = 1.0;
  return Unitary3::from_matrix(m);
}

Unitary3 phase_gate(PhaseAxis which, double theta) {
  Mat3c m = Mat3c::Identity();
  if (which == PhaseAxis::L3) {
    m(0, 0) = std::polar(1.0, theta);
    m(1, 1) = std::polar(1.0, -theta);
  } else {
    m(2, 2) = std::polar(1.0, std::sqrt(3.0) * theta);
  }
  return Unitary3::from_matrix(m);
}

double predict_phase_difference(PhaseAxis which, double theta) {
  return which == PhaseAxis::L3 ? 1.5 * theta : std::sqrt(3.0) * theta;
}

const std::vector<std::string>& gate_names() {
  static const std::vector<std::string> names{
      "chrestenson", "swap12", "swap23", "swap13", "phase_l3", "phase_l8"};
  return names;
}

GateSpec gate_by_name(std::string_view name, double theta) {
  if (name == "chrestenson") return {"chrestenson", chrestenson()};
  if (name == "swap12") return {"swap12", swap({1, 2})};
  if (name == "swap23") return {"swap23", swap({2, 3})};
  if (name == "swap13") return {"swap13", swap({1, 3})};
  if (name == "phase_l3") return {"phase_l3", phase_gate(PhaseAxis::L3, theta)};
  if (name == "phase_l8") return {"phase_l8", phase_gate(PhaseAxis::L8, theta)};
  throw std::invalid_argument("unknown gate '" + std::string(name) + "'");
}

}  // namespace qutrit
