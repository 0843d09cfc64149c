#include "qutrit/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>
#include <vector>

namespace qutrit {

namespace {

double wrap_angle(double a) {
  a = std::remainder(a, 2.0 * kPi);  // [-pi, pi]
  if (a <= -kPi) a += 2.0 * kPi;
  return a;
}

/// Any unit vector orthogonal to n (n assumed unit).
Vec3 orthogonal_to(const Vec3& n) {
  const Vec3 trial = std::abs(n.x()) < 0.9 ? Vec3::UnitX() : Vec3::UnitY();
  return (trial - trial.dot(n) * n).normalized();
}

/// Rotation taking u to -z and v to +y (u, v orthonormal).
Mat3 frame_rotation(const Vec3& u, const Vec3& v) {
  Mat3 q;
  q.row(0) = u.cross(v);
  q.row(1) = v;
  q.row(2) = -u;
  return q;
}

/// Solves q = A_x(a) A_z(b) A_y(c) for counterclockwise rotations A_j and
/// converts to the sigma-rotation angles (R_j(xi) = A_j(-xi)).
DecompositionAngles angles_from_rotation(const Mat3& q) {
  const double b = std::atan2(-q(0, 1), std::hypot(q(0, 0), q(0, 2)));
  double a = 0.0;
  double c = 0.0;
  if (std::cos(b) > 1e-9) {
    c = std::atan2(q(0, 2), q(0, 0));
    a = std::atan2(q(2, 1), q(1, 1));
  } else {
    a = std::atan2(-q(1, 2), q(2, 2));
  }
  return {wrap_angle(-c), wrap_angle(-b), wrap_angle(-a)};
}

DecompositionAngles constructive_angles(const SpherePointPair& pair) {
  const Vec3 p1 = pair.p1.cartesian();
  const Vec3 p2 = pair.p2.cartesian();
  const Vec3 mid = 0.5 * (p1 + p2);

  Vec3 chord = p1 - p2;
  Vec3 u;
  if (mid.norm() > tol::kDegenerate) {
    u = mid.normalized();
  } else {
    u = orthogonal_to(chord.normalized());
  }
  chord -= chord.dot(u) * u;
  const Vec3 v = chord.norm() > tol::kDegenerate ? Vec3(chord.normalized())
                                                 : orthogonal_to(u);

  // The pair is unordered, so either chord orientation is valid; keep the
  // smaller rotation.
  const Mat3 qa = frame_rotation(u, v);
  const Mat3 qb = frame_rotation(u, -v);
  return angles_from_rotation(qa.trace() >= qb.trace() ? qa : qb);
}

/// Closed-form branch candidates; non-finite branches are skipped.
std::vector<DecompositionAngles> closed_form_candidates(const SpherePointPair& pair) {
  const double t1 = pair.p1.theta(), f1 = pair.p1.phi();
  const double t2 = pair.p2.theta(), f2 = pair.p2.phi();
  std::vector<DecompositionAngles> out;

  const double beta0 = std::atan((std::cos(f1) * std::tan(t1) - std::cos(f2) * std::tan(t2)) /
                                 (std::sin(f1) * std::tan(t1) - std::sin(f2) * std::tan(t2)));
  if (!std::isfinite(beta0)) return out;
  for (const double beta : {beta0, beta0 + kPi}) {
    const double s1 = std::sin(t1) * std::sin(beta + f1);
    const double s2 = std::sin(t2) * std::sin(beta + f2);
    const double ratio = (std::cos(t1) * std::cos(t1) - std::cos(t2) * std::cos(t2)) /
                         (s2 * s2 - s1 * s1);
    if (!std::isfinite(ratio) || ratio < 0.0 || ratio > 1.0) continue;
    const double gamma0 = std::acos(std::sqrt(ratio));
    for (const double gamma : {gamma0, -gamma0}) {
      const double delta0 =
          std::atan(std::cos(gamma) * (s1 + s2) / (std::cos(t1) + std::cos(t2)));
      if (!std::isfinite(delta0)) continue;
      for (const double delta : {delta0, delta0 + kPi})
        out.push_back({wrap_angle(beta), wrap_angle(gamma), wrap_angle(delta)});
    }
  }
  return out;
}

}  // namespace

Ket3 canonical_state(double alpha) {
  if (!(alpha >= 0.0 && alpha <= 0.5 * kPi))
    throw RangeError("canonical alpha must lie in [0, pi/2]");
  return Ket3::normalize(Vec3c(std::sin(alpha), 0.0, std::cos(alpha)));
}

CanonicalPoints canonical_points(double alpha) {
  const double s = std::sin(alpha), c = std::cos(alpha);
  const double y = std::sqrt(2.0 * std::sin(2.0 * alpha)) / (s + c);
  return {y, (s - c) / (s + c), 2.0 * std::asin(std::min(1.0, y))};
}

MagnetizationReport magnetization(const Ket3& psi) {
  const Vec3c& v = psi.amplitudes();
  Vec3 m;
  for (int k = 0; k < 3; ++k)
    m(k) = v.dot(spin_matrix(k + 1) * v).real();

  const SpherePointPair pair = state_to_points(psi);
  const double bisector = 0.5 * (pair.p1.cartesian() + pair.p2.cartesian()).norm();

  MagnetizationReport rep;
  rep.m_vector = m;
  rep.magnitude = m.norm();
  rep.bisector_length = -bisector;
  rep.pointing = rep.magnitude > tol::kInvariant;
  return rep;
}

Unitary3 decomposition_unitary(const DecompositionAngles& a) {
  return u_sigma(1, a.delta) * u_sigma(3, a.gamma) * u_sigma(2, a.beta);
}

double decomposition_residual(const Ket3& psi, double alpha,
                              const DecompositionAngles& angles) {
  return phase_invariant_distance(canonical_state(alpha),
                                  decomposition_unitary(angles) * psi);
}

CanonicalDecomposition canonical_decompose(const Ket3& psi) {
  const SpherePointPair pair = state_to_points(psi);
  // z_c = tan(alpha - pi/4) and z_c = -|OO'| in the canonical frame.
  const double bisector = 0.5 * (pair.p1.cartesian() + pair.p2.cartesian()).norm();
  const double alpha = std::clamp(0.25 * kPi - std::atan(bisector), 0.0, 0.25 * kPi);

  std::vector<DecompositionAngles> candidates = closed_form_candidates(pair);
  candidates.push_back(constructive_angles(pair));

  const auto key = [](const DecompositionAngles& a) {
    return std::make_tuple(std::abs(a.beta), std::abs(a.gamma), std::abs(a.delta));
  };
  CanonicalDecomposition best{alpha, {}, 2.0};
  for (const auto& c : candidates) {
    const double r = decomposition_residual(psi, alpha, c);
    const bool tie = std::abs(r - best.residual) <= tol::kDegenerate;
    if ((!tie && r < best.residual) || (tie && key(c) < key(best.angles))) {
      best.angles = c;
      best.residual = r;
    }
  }
  return best;
}

}  // namespace qutrit
