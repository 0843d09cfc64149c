#pragma once

// Numeric foundation for a single spin-1 system: kets, density matrices,
// unitaries and the comparison metrics every other module relies on.
//
// Basis ordering is fixed everywhere as (|+1>, |0>, |-1>), i.e. NMR energy
// levels (1, 2, 3). Index 0 is |+1>.

#include <complex>
#include <random>

#include <Eigen/Dense>

#include "qutrit/errors.hpp"

namespace qutrit {

using cplx = std::complex<double>;
using Vec3c = Eigen::Matrix<cplx, 3, 1>;
using Mat3c = Eigen::Matrix<cplx, 3, 3>;
using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr cplx kI{0.0, 1.0};

namespace tol {
/// Hermiticity, trace, unitarity and normalization checks.
inline constexpr double kInvariant = 1e-9;
/// Zero-norm and degree-deficiency detection.
inline constexpr double kDegenerate = 1e-12;
}  // namespace tol

enum class Level : int { PlusOne = 0, Zero = 1, MinusOne = 2 };

class Ket3 {
 public:
  /// Throws ZeroVector when ||raw|| < tol::kDegenerate.
  static Ket3 normalize(const Vec3c& raw);
  static Ket3 basis(Level level);

  const Vec3c& amplitudes() const { return amp_; }
  cplx operator[](int i) const { return amp_(i); }
  cplx c_plus1() const { return amp_(0); }
  cplx c_zero() const { return amp_(1); }
  cplx c_minus1() const { return amp_(2); }

 private:
  explicit Ket3(const Vec3c& amp) : amp_(amp) {}
  Vec3c amp_;
};

class Unitary3 {
 public:
  /// Checks U^dagger U = I elementwise within tol::kInvariant.
  static Unitary3 from_matrix(const Mat3c& m);
  static Unitary3 identity() { return Unitary3(Mat3c::Identity()); }

  const Mat3c& matrix() const { return m_; }
  Unitary3 adjoint() const { return Unitary3(m_.adjoint()); }

  friend Unitary3 operator*(const Unitary3& a, const Unitary3& b) {
    return Unitary3(a.m_ * b.m_);
  }
  friend Ket3 operator*(const Unitary3& u, const Ket3& psi) {
    return Ket3::normalize(u.m_ * psi.amplitudes());
  }

 private:
  explicit Unitary3(const Mat3c& m) : m_(m) {}
  Mat3c m_;
};

class DensityMatrix3 {
 public:
  /// Checks hermiticity, unit trace and positivity (eigenvalues >= -tol).
  static DensityMatrix3 from_matrix(const Mat3c& m);
  static DensityMatrix3 maximally_mixed() {
    return DensityMatrix3(Mat3c::Identity() / 3.0);
  }

  const Mat3c& matrix() const { return m_; }
  cplx operator()(int r, int s) const { return m_(r, s); }
  double purity() const { return (m_ * m_).trace().real(); }

  /// U rho U^dagger.
  DensityMatrix3 conjugated(const Unitary3& u) const {
    return DensityMatrix3(u.matrix() * m_ * u.matrix().adjoint());
  }
  /// Zeroes every coherence and keeps the populations.
  DensityMatrix3 dephased() const {
    Mat3c d = Mat3c::Zero();
    d.diagonal() = m_.diagonal();
    return DensityMatrix3(d);
  }

 private:
  friend DensityMatrix3 dm_from_ket(const Ket3& psi);
  explicit DensityMatrix3(const Mat3c& m) : m_(m) {}
  Mat3c m_;
};

inline Ket3 normalize(const Vec3c& raw) { return Ket3::normalize(raw); }

DensityMatrix3 dm_from_ket(const Ket3& psi);

/// Tr(rho^dagger rho_e) / (sqrt(Tr rho^dagger rho) sqrt(Tr rho_e^dagger rho_e)).
double fidelity(const Mat3c& rho, const Mat3c& rho_e);
inline double fidelity(const DensityMatrix3& rho, const DensityMatrix3& rho_e) {
  return fidelity(rho.matrix(), rho_e.matrix());
}

cplx inner(const Ket3& a, const Ket3& b);

/// 1 - |<a|b>|, zero iff the kets agree up to a global phase.
double phase_invariant_distance(const Ket3& a, const Ket3& b);

/// |Tr(target^dagger actual)| / 3; equals 1 iff the gates agree up to phase.
double gate_fidelity(const Mat3c& target, const Mat3c& actual);

bool is_hermitian(const Mat3c& m, double tol = tol::kInvariant);
bool is_unitary(const Mat3c& m, double tol = tol::kInvariant);

/// Haar-random pure state: six standard normals as three complex amplitudes.
Ket3 random_ket(std::mt19937_64& rng);
/// Haar-random unitary via QR of a complex Ginibre matrix.
Unitary3 random_unitary(std::mt19937_64& rng);

inline double degrees(double radians) { return radians * 180.0 / kPi; }
inline double radians(double degrees) { return degrees * kPi / 180.0; }

}  // namespace qutrit
