#pragma once

// Generator families of SU(3) and SO(3) for a spin-1 system, the NMR
// single-transition operators, and their exponentials.

#include <array>

#include "qutrit/core.hpp"
#include "qutrit/majorana.hpp"

namespace qutrit {

/// Gell-Mann matrices (lambda[0] is Lambda_1), spin-1 matrices Sigma_j and
/// the defining-representation SO(3) generators J_j.
///
/// J_j = i L_j with L_j the standard real antisymmetric rotation generators,
/// so [J_1, J_2] = i J_3 like the Sigma_j. With this choice exp(i xi J_j)
/// rotates a vector by -xi about axis j, which is exactly how
/// exp(i xi Sigma_j) moves the Majorana points.
struct GeneratorSet {
  std::array<Mat3c, 8> lambda;
  std::array<Mat3c, 3> sigma;
  std::array<Mat3c, 3> jdef;

  static const GeneratorSet& get();
};

/// Lambda_i, i in 1..8. Throws IndexOutOfRange.
const Mat3c& gell_mann(int i);
/// Sigma_j, j in 1..3. Throws IndexOutOfRange.
const Mat3c& spin_matrix(int j);
/// J_j, j in 1..3. Throws IndexOutOfRange.
const Mat3c& so3_generator(int j);

enum class Axis { X, Y, Z };

/// One pair of energy levels (1-based): (1,2), (2,3) or (1,3).
struct LevelPair {
  int r;
  int s;

  /// Throws InvalidTransition for anything but the three pairs above.
  static LevelPair make(int r, int s);
  friend bool operator==(const LevelPair&, const LevelPair&) = default;
};

/// Single-transition operator I_k^{rs}, assembled from Gell-Mann matrices.
class TransitionOp {
 public:
  TransitionOp(LevelPair levels, Axis axis);

  LevelPair levels() const { return levels_; }
  Axis axis() const { return axis_; }
  const Mat3c& matrix() const { return matrix_; }

 private:
  LevelPair levels_;
  Axis axis_;
  Mat3c matrix_;
};

/// I^{rs}: projector onto the two levels.
Mat3c transition_projector(LevelPair levels);

/// exp(A) by scaling and squaring of a truncated Taylor series.
Mat3c expm(const Mat3c& a);

/// exp(i theta Lambda_i).
Unitary3 u_lambda(int i, double theta);

/// exp(i xi Sigma_j) = I + (cos xi - 1) Sigma_j^2 + i sin xi Sigma_j.
Unitary3 u_sigma(int j, double xi);

/// exp(i xi J_j), a proper rotation.
Mat3 r_so3(int j, double xi);

/// exp(i xi I_k^{rs}) = I - I^{rs} + cos(xi/2) I^{rs} + 2i sin(xi/2) I_k^{rs}.
Unitary3 transition_unitary(const TransitionOp& op, double xi);

/// Sign s pairing u_sigma(j, xi) with r_so3(j, s xi).
inline constexpr int kRotationSign = +1;

/// Pair distance between the Majorana points of u_sigma(j, xi) psi and the
/// rigidly rotated points of psi.
double majorana_rotation_check(const Ket3& psi, int j, double xi);

}  // namespace qutrit
