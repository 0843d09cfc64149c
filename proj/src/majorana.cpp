#include "qutrit/majorana.hpp"

#include <algorithm>
#include <cmath>

namespace qutrit {

namespace {

constexpr double kTwoPi = 2.0 * kPi;
const double kSqrt2 = std::sqrt(2.0);

}  // namespace

MajoranaPoly MajoranaPoly::from_ket(const Ket3& psi) {
  return {psi.c_plus1() / kSqrt2, -psi.c_zero(), psi.c_minus1() / kSqrt2};
}

double MajoranaPoly::max_coeff() const {
  return std::max({std::abs(a0), std::abs(a1), std::abs(a2)});
}

SpherePoint::SpherePoint(double theta, double phi) {
  theta = std::clamp(theta, 0.0, kPi);
  if (theta < tol::kDegenerate) theta = 0.0;
  if (kPi - theta < tol::kDegenerate) theta = kPi;
  theta_ = theta;
  if (theta == 0.0 || theta == kPi) {
    phi_ = 0.0;
  } else {
    phi = std::fmod(phi, kTwoPi);
    if (phi < 0.0) phi += kTwoPi;
    if (phi >= kTwoPi) phi = 0.0;
    phi_ = phi;
  }
}

SpherePoint SpherePoint::from_cartesian(const Vec3& v) {
  return {std::atan2(std::hypot(v.x(), v.y()), v.z()), std::atan2(v.y(), v.x())};
}

Vec3 SpherePoint::cartesian() const {
  const double s = std::sin(theta_);
  return {s * std::cos(phi_), s * std::sin(phi_), std::cos(theta_)};
}

double great_circle_distance(const Vec3& a, const Vec3& b) {
  return std::atan2(a.cross(b).norm(), a.dot(b));
}

double great_circle_distance(const SpherePoint& a, const SpherePoint& b) {
  return great_circle_distance(a.cartesian(), b.cartesian());
}

double pair_distance(const SpherePointPair& a, const SpherePointPair& b) {
  const double straight = std::max(great_circle_distance(a.p1, b.p1),
                                   great_circle_distance(a.p2, b.p2));
  const double crossed = std::max(great_circle_distance(a.p1, b.p2),
                                  great_circle_distance(a.p2, b.p1));
  return std::min(straight, crossed);
}

SpherePointPair rotate(const Mat3& r, const SpherePointPair& pair) {
  return {SpherePoint::from_cartesian(r * pair.p1.cartesian()),
          SpherePoint::from_cartesian(r * pair.p2.cartesian())};
}

std::array<std::optional<cplx>, 2> majorana_roots(const MajoranaPoly& poly) {
  const double scale = poly.max_coeff();
  const double cut = tol::kDegenerate * scale;
  if (std::abs(poly.a0) <= cut) {
    if (std::abs(poly.a1) <= cut) return {std::nullopt, std::nullopt};
    return {std::nullopt, -poly.a2 / poly.a1};
  }
  const cplx disc = std::sqrt(poly.a1 * poly.a1 - 4.0 * poly.a0 * poly.a2);
  // Pick the sign that avoids cancellation between a1 and the root of the
  // discriminant.
  const double sign = (std::conj(poly.a1) * disc).real() >= 0.0 ? 1.0 : -1.0;
  const cplx q = -0.5 * (poly.a1 + sign * disc);
  if (q == cplx(0.0)) return {cplx(0.0), cplx(0.0)};
  return {q / poly.a0, poly.a2 / q};
}

SpherePoint point_from_root(const std::optional<cplx>& root) {
  if (!root) return SpherePoint::south();
  return {2.0 * std::atan(std::abs(*root)), std::arg(*root)};
}

SpherePointPair state_to_points(const Ket3& psi) {
  const auto roots = majorana_roots(MajoranaPoly::from_ket(psi));
  return {point_from_root(roots[0]), point_from_root(roots[1])};
}

Ket3 points_to_state(const SpherePointPair& pair) {
  const double t1 = pair.p1.theta(), f1 = pair.p1.phi();
  const double t2 = pair.p2.theta(), f2 = pair.p2.phi();
  const double c1 = std::cos(0.5 * t1), s1 = std::sin(0.5 * t1);
  const double c2 = std::cos(0.5 * t2), s2 = std::sin(0.5 * t2);

  const double bracket = 3.0 + std::cos(t1) * std::cos(t2) +
                         std::sin(t1) * std::sin(t2) * std::cos(f1 - f2);
  if (!(bracket >= tol::kDegenerate))
    throw DegeneratePair("normalization bracket underflow for Majorana pair");
  const double gamma = kSqrt2 / std::sqrt(bracket);

  Vec3c v;
  v(0) = kSqrt2 * c1 * c2;
  v(1) = std::polar(s1 * c2, f1) + std::polar(c1 * s2, f2);
  v(2) = std::polar(kSqrt2 * s1 * s2, f1 + f2);
  return Ket3::normalize(gamma * v);
}

cplx stereographic(const SpherePoint& p) {
  if (p.is_south_pole()) throw SouthPole();
  return std::polar(std::tan(0.5 * p.theta()), p.phi());
}

}  // namespace qutrit
