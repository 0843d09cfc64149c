#include "qutrit/core.hpp"

#include <algorithm>
#include <cmath>

namespace qutrit {

Ket3 Ket3::normalize(const Vec3c& raw) {
  const double n = raw.norm();
  if (!(n >= tol::kDegenerate)) throw ZeroVector();
  return Ket3(raw / n);
}

Ket3 Ket3::basis(Level level) {
  Vec3c v = Vec3c::Zero();
  v(static_cast<int>(level)) = 1.0;
  return Ket3(v);
}

bool is_hermitian(const Mat3c& m, double tol) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

bool is_unitary(const Mat3c& m, double tol) {
  return (m.adjoint() * m - Mat3c::Identity()).cwiseAbs().maxCoeff() <= tol;
}

Unitary3 Unitary3::from_matrix(const Mat3c& m) {
  if (!is_unitary(m)) throw InvariantViolation("matrix is not unitary");
  return Unitary3(m);
}

DensityMatrix3 DensityMatrix3::from_matrix(const Mat3c& m) {
  if (!is_hermitian(m)) throw InvariantViolation("density matrix is not Hermitian");
  if (std::abs(m.trace() - 1.0) > tol::kInvariant)
    throw InvariantViolation("density matrix trace is not 1");
  const Mat3c h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<Mat3c> es(h, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -tol::kInvariant)
    throw InvariantViolation("density matrix is not positive semidefinite");
  return DensityMatrix3(h);
}

DensityMatrix3 dm_from_ket(const Ket3& psi) {
  const Vec3c& v = psi.amplitudes();
  return DensityMatrix3(v * v.adjoint());
}

double fidelity(const Mat3c& rho, const Mat3c& rho_e) {
  const double overlap = (rho.adjoint() * rho_e).trace().real();
  const double n1 = (rho.adjoint() * rho).trace().real();
  const double n2 = (rho_e.adjoint() * rho_e).trace().real();
  return overlap / (std::sqrt(n1) * std::sqrt(n2));
}

cplx inner(const Ket3& a, const Ket3& b) {
  return a.amplitudes().dot(b.amplitudes());  // Eigen's dot conjugates the left side
}

double phase_invariant_distance(const Ket3& a, const Ket3& b) {
  return std::clamp(1.0 - std::abs(inner(a, b)), 0.0, 1.0);
}

double gate_fidelity(const Mat3c& target, const Mat3c& actual) {
  return std::abs((target.adjoint() * actual).trace()) / 3.0;
}

Ket3 random_ket(std::mt19937_64& rng) {
  std::normal_distribution<double> n01(0.0, 1.0);
  for (;;) {
    Vec3c v;
    for (int i = 0; i < 3; ++i) {
      const double re = n01(rng);
      const double im = n01(rng);
      v(i) = cplx(re, im);
    }
    if (v.norm() >= tol::kDegenerate) return Ket3::normalize(v);
  }
}

Unitary3 random_unitary(std::mt19937_64& rng) {
  std::normal_distribution<double> n01(0.0, 1.0);
  Mat3c g;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) {
      const double re = n01(rng);
      const double im = n01(rng);
      g(r, c) = cplx(re, im);
    }
  Eigen::HouseholderQR<Mat3c> qr(g);
  Mat3c q = qr.householderQ();
  const Mat3c r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Fix the phases of R's diagonal so the distribution is Haar.
  for (int c = 0; c < 3; ++c) {
    const cplx d = r(c, c);
    if (std::abs(d) > 0.0) q.col(c) *= d / std::abs(d);
  }
  return Unitary3::from_matrix(q);
}

}  // namespace qutrit
