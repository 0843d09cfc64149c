#include "qutrit/nmrsim.hpp"

#include <algorithm>
#include <cmath>
#include <type_traits>

namespace qutrit {

namespace {

int axis_index(Axis a) { return a == Axis::X ? 1 : a == Axis::Y ? 2 : 3; }

}  // namespace

HamiltonianParams HamiltonianParams::make(double omega0, double kappa) {
  if (!(omega0 > 0.0) || !(kappa >= 0.0) || !std::isfinite(omega0) || !std::isfinite(kappa))
    throw RangeError("hamiltonian needs omega0 > 0 and kappa >= 0");
  return {omega0, kappa};
}

Mat3 hamiltonian(const HamiltonianParams& p) {
  return Vec3(-p.omega0 + p.kappa, -2.0 * p.kappa, p.omega0 + p.kappa).asDiagonal();
}

LineFrequencies line_frequencies(const HamiltonianParams& p) {
  const Mat3 h = hamiltonian(p);
  const double f12 = h(1, 1) - h(0, 0);
  const double f23 = h(2, 2) - h(1, 1);
  return {f12, f23, std::abs(f23 - f12)};
}

ThermalParams ThermalParams::make(double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 1.0))
    throw RangeError("thermal polarization epsilon must lie in (0, 1)");
  return {epsilon};
}

DensityMatrix3 thermal_state(const ThermalParams& params) {
  Mat3c m = Mat3c::Identity() / 3.0;
  m(0, 0) += params.epsilon / 3.0;
  m(2, 2) -= params.epsilon / 3.0;
  return DensityMatrix3::from_matrix(m);
}

std::array<SpectralLine, 2> spectrum_lines(const Mat3c& rho) {
  const auto line = [&](int r, int s) {
    const cplx c = rho(r - 1, s - 1);
    return SpectralLine{LevelPair{r, s}, 2.0 * std::abs(c) * kDetectorGain, std::arg(c)};
  };
  return {line(1, 2), line(2, 3)};
}

TransitionPulse transition(int r, int s, Axis axis, double angle) {
  const LevelPair lp = LevelPair::make(r, s);
  if (lp.r == 1 && lp.s == 3)
    throw InvalidTransition("the 1-3 transition is not directly addressable");
  return {lp, axis, angle};
}

bool is_crush(const PulseEvent& ev) { return std::holds_alternative<Crush>(ev); }

Unitary3 event_unitary(const PulseEvent& ev) {
  return std::visit(
      [](const auto& e) -> Unitary3 {
        using T = std::decay_t<decltype(e)>;
        if constexpr (std::is_same_v<T, TransitionPulse>) {
          const LevelPair lp = LevelPair::make(e.levels.r, e.levels.s);
          if (lp.r == 1 && lp.s == 3)
            throw InvalidTransition("the 1-3 transition is not directly addressable");
          return transition_unitary(TransitionOp(lp, e.axis), e.angle);
        } else if constexpr (std::is_same_v<T, NonselectivePulse>) {
          return u_sigma(axis_index(e.axis), e.angle);
        } else if constexpr (std::is_same_v<T, ZCascade>) {
          Mat3c m = Mat3c::Zero();
          for (int k = 0; k < 3; ++k) m(k, k) = std::polar(1.0, e.angles[k]);
          return Unitary3::from_matrix(m);
        } else {
          throw CrushInSequence();
        }
      },
      ev);
}

DensityMatrix3 apply_event(const DensityMatrix3& state, const PulseEvent& ev) {
  if (is_crush(ev)) return state.dephased();
  return state.conjugated(event_unitary(ev));
}

bool PulseSequence::has_crush() const {
  return std::any_of(events.begin(), events.end(), is_crush);
}

Unitary3 PulseSequence::unitary() const {
  if (has_crush()) throw CrushInSequence();
  Unitary3 u = Unitary3::identity();
  for (const auto& ev : events) u = event_unitary(ev) * u;
  return u;
}

DensityMatrix3 run_sequence(const PulseSequence& seq, const DensityMatrix3& initial) {
  DensityMatrix3 rho = initial;
  for (const auto& ev : seq.events) rho = apply_event(rho, ev);
  return rho;
}

double verify_sequence(const PulseSequence& seq, const Unitary3& target) {
  return gate_fidelity(target.matrix(), seq.unitary().matrix());
}

// ---------------------------------------------------------------------------

double mixing_angle(double p_r, double p_s, double target) {
  const double gap = p_r - p_s;
  if (std::abs(gap) <= tol::kDegenerate) {
    if (std::abs(target - p_r) > tol::kInvariant)
      throw RangeError("populations are equal; target population unreachable");
    return 0.0;
  }
  const double c2 = (target - p_s) / gap;
  if (c2 < -tol::kInvariant || c2 > 1.0 + tol::kInvariant)
    throw RangeError("target population lies outside the mixing range");
  return 2.0 * std::acos(std::sqrt(std::clamp(c2, 0.0, 1.0)));
}

PulseSequence pseudopure_sequence(Level target, const Vec3& pops) {
  PulseSequence seq;
  Vec3 p = pops;
  // Population pi pulses: a y rotation by pi on an adjacent pair only
  // permutes diagonal states.
  const auto exchange = [&](int r, int s) {
    seq.events.push_back(transition(r, s, Axis::Y, kPi));
    std::swap(p(r - 1), p(s - 1));
  };

  int top = 1;
  p.maxCoeff(&top);
  ++top;
  // The two remaining levels must be adjacent to be mixed by one pulse.
  if (top == 2) {
    exchange(1, 2);
    top = 1;
  }
  const int r = top == 1 ? 2 : 1;
  const int s = top == 1 ? 3 : 2;
  seq.events.push_back(
      transition(r, s, Axis::Y, mixing_angle(p(r - 1), p(s - 1), 0.5 * (p(r - 1) + p(s - 1)))));
  seq.events.push_back(Crush{});
  p(r - 1) = p(s - 1) = 0.5 * (p(r - 1) + p(s - 1));

  // Carry the surviving excess to the target level.
  const int want = static_cast<int>(target) + 1;
  while (top != want) {
    const int next = top < want ? top + 1 : top - 1;
    exchange(std::min(top, next), std::max(top, next));
    top = next;
  }
  return seq;
}

DensityMatrix3 prepare_pseudopure(Level target, const ThermalParams& eps) {
  const DensityMatrix3 thermal = thermal_state(eps);
  const Vec3 pops = thermal.matrix().diagonal().real();
  return run_sequence(pseudopure_sequence(target, pops), thermal);
}

PseudopureForm pseudopure_form(const DensityMatrix3& rho, Level target) {
  const int t = static_cast<int>(target);
  const double a = 0.5 * (3.0 * rho(t, t).real() - 1.0);
  Mat3c model = Mat3c::Identity() * ((1.0 - a) / 3.0);
  model(t, t) += a;
  return {a, (rho.matrix() - model).cwiseAbs().maxCoeff()};
}

// ---------------------------------------------------------------------------

PulseSequence lambda_sequence(int i, double theta) {
  PulseSequence seq;
  const double r3 = std::sqrt(3.0);
  switch (i) {
    case 1: seq.events = {transition(1, 2, Axis::X, 2.0 * theta)}; break;
    case 2: seq.events = {transition(1, 2, Axis::Y, 2.0 * theta)}; break;
    case 3: seq.events = {ZCascade{{theta, -theta, 0.0}}}; break;
    case 4:
    case 5:
      // Conjugating a 2-3 rotation by a 1-2 pi pulse carries it onto 1-3.
      seq.events = {transition(1, 2, Axis::Y, -kPi),
                    transition(2, 3, i == 4 ? Axis::X : Axis::Y, 2.0 * theta),
                    transition(1, 2, Axis::Y, kPi)};
      break;
    case 6: seq.events = {transition(2, 3, Axis::X, 2.0 * theta)}; break;
    case 7: seq.events = {transition(2, 3, Axis::Y, 2.0 * theta)}; break;
    case 8: seq.events = {ZCascade{{theta / r3, theta / r3, -2.0 * theta / r3}}}; break;
    default: throw IndexOutOfRange("Gell-Mann index must lie in 1..8");
  }
  seq.target = u_lambda(i, theta);
  return seq;
}

PulseSequence double_quantum_cascade(double theta) {
  PulseSequence seq;
  seq.events = {transition(1, 2, Axis::Y, kPi), transition(2, 3, Axis::Y, -theta),
                transition(1, 2, Axis::Y, kPi)};
  return seq;
}

PulseSequence swap_sequence(LevelPair levels) {
  levels = LevelPair::make(levels.r, levels.s);
  PulseSequence seq;
  if (levels == LevelPair{1, 2}) {
    seq.events = {transition(1, 2, Axis::Y, kPi), ZCascade{{0.0, kPi, 0.0}}};
  } else if (levels == LevelPair{2, 3}) {
    seq.events = {transition(2, 3, Axis::Y, kPi), ZCascade{{0.0, 0.0, kPi}}};
  } else {
    seq = double_quantum_cascade(kPi);
    seq.events.push_back(ZCascade{{kPi, kPi, kPi}});
  }
  seq.target = swap(levels);
  return seq;
}

PulseSequence phase_gate_sequence(PhaseAxis which, double theta) {
  PulseSequence seq;
  if (which == PhaseAxis::L3) {
    seq.events = {transition(1, 2, Axis::Z, theta)};
    seq.target = phase_gate(PhaseAxis::L3, 0.5 * theta);
  } else {
    seq.events = {ZCascade{{0.0, 0.0, std::sqrt(3.0) * theta}}};
    seq.target = phase_gate(PhaseAxis::L8, theta);
  }
  return seq;
}

const PulseSequence& chrestenson_sequence() {
  static const PulseSequence seq = [] {
    PulseSequence s = synthesize_sequence(chrestenson()).sequence;
    s.target = chrestenson();
    return s;
  }();
  return seq;
}

// ---------------------------------------------------------------------------

double angle_difference(double a, double b) {
  double d = std::remainder(a - b, 2.0 * kPi);
  if (d <= -kPi) d += 2.0 * kPi;
  return d;
}

double measure_phase_difference(PhaseAxis which, double theta, const ThermalParams& eps) {
  PulseSequence seq;
  seq.events.push_back(NonselectivePulse{Axis::Y, 0.5 * kPi});
  for (const auto& ev : phase_gate_sequence(which, theta).events) seq.events.push_back(ev);
  const auto lines = spectrum_lines(run_sequence(seq, thermal_state(eps)));
  return angle_difference(lines[0].phase, lines[1].phase);
}

std::vector<Table1Row> reproduce_table1() {
  const auto to_unit_circle = [](double a) {
    a = std::fmod(a, 2.0 * kPi);
    if (a < 0.0) a += 2.0 * kPi;
    if (2.0 * kPi - a <= tol::kInvariant) a = 0.0;
    return a;
  };
  std::vector<Table1Row> rows;
  for (const double deg : {0.0, 30.0, 45.0, 60.0, 90.0, 120.0}) {
    const double th = radians(deg);
    rows.push_back({th, predict_phase_difference(PhaseAxis::L3, th),
                    to_unit_circle(measure_phase_difference(PhaseAxis::L3, th)),
                    predict_phase_difference(PhaseAxis::L8, th),
                    to_unit_circle(measure_phase_difference(PhaseAxis::L8, th))});
  }
  return rows;
}

}  // namespace qutrit
