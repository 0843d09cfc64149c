#pragma once

// Canonical one-parameter family, SO(3) decomposition of arbitrary states
// onto it, and the magnetization vector with its Majorana-sphere geometry.

#include "qutrit/algebra.hpp"
#include "qutrit/core.hpp"
#include "qutrit/majorana.hpp"

namespace qutrit {

/// (sin alpha, 0, cos alpha), alpha in [0, pi/2]. Throws RangeError.
Ket3 canonical_state(double alpha);

/// Majorana points (0, +-y_c, z_c) of canonical_state(alpha) and the angle
/// eta = 2 asin(y_c) they subtend at the origin.
struct CanonicalPoints {
  double y_c;
  double z_c;
  double eta;
};
CanonicalPoints canonical_points(double alpha);

struct MagnetizationReport {
  Vec3 m_vector;
  double magnitude;
  /// Signed length of the chord bisector OO' in the canonical frame, where
  /// M points along -z; equals -|OO'|.
  double bisector_length;
  bool pointing;
};

MagnetizationReport magnetization(const Ket3& psi);

/// Angles of U_x(delta) U_z(gamma) U_y(beta), with U_j = u_sigma(j, .).
struct DecompositionAngles {
  double beta = 0.0;
  double gamma = 0.0;
  double delta = 0.0;
};

struct CanonicalDecomposition {
  /// In [0, pi/4]: the canonical frame has <Sigma_3> = -cos(2 alpha) <= 0.
  double alpha;
  DecompositionAngles angles;
  /// phase_invariant_distance(canonical_state(alpha), U psi).
  double residual;
};

Unitary3 decomposition_unitary(const DecompositionAngles& angles);

double decomposition_residual(const Ket3& psi, double alpha,
                              const DecompositionAngles& angles);

CanonicalDecomposition canonical_decompose(const Ket3& psi);

}  // namespace qutrit
