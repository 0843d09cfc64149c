#pragma once

// Named ternary gates as exact closed-form matrices.

#include <string>
#include <string_view>
#include <vector>

#include "qutrit/algebra.hpp"
#include "qutrit/core.hpp"

namespace qutrit {

enum class PhaseAxis { L3, L8 };

struct GateSpec {
  std::string name;
  Unitary3 matrix;
};

/// (1/sqrt3) [[1,1,1],[1,w,w^2],[1,w^2,w]], w = e^{2 pi i/3}.
Unitary3 chrestenson();

/// Permutation exchanging the two levels.
Unitary3 swap(LevelPair levels);

/// L3: diag(e^{i theta}, e^{-i theta}, 1). L8: diag(1, 1, e^{i sqrt3 theta}).
Unitary3 phase_gate(PhaseAxis which, double theta);

/// phase_gate(L8, theta) equals u_lambda(8, kLambda8Sign * theta) up to a
/// global phase.
inline constexpr int kLambda8Sign = -1;

/// Phase difference arg(rho_12) - arg(rho_23) built between the two NMR
/// lines: 3 theta / 2 for L3, sqrt3 theta for L8. Angles follow the pulse
/// convention of the phase-gate experiments (see nmrsim::phase_gate_sequence).
double predict_phase_difference(PhaseAxis which, double theta);

/// Names: chrestenson, swap12, swap23, swap13, phase_l3, phase_l8.
/// theta is used by the phase gates only. Throws std::invalid_argument.
GateSpec gate_by_name(std::string_view name, double theta = 0.0);

const std::vector<std::string>& gate_names();

}  // namespace qutrit
