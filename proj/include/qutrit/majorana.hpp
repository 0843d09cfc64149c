#pragma once

// Majorana representation of a spin-1 pure state: the quadratic
// a0 z^2 + a1 z + a2 built from the amplitudes, its two roots, and their
// inverse stereographic images on the unit sphere.

#include <array>
#include <optional>

#include "qutrit/core.hpp"

namespace qutrit {

/// a0 = C(+1)/sqrt2, a1 = -C(0), a2 = C(-1)/sqrt2.
struct MajoranaPoly {
  cplx a0, a1, a2;

  static MajoranaPoly from_ket(const Ket3& psi);
  cplx operator()(cplx z) const { return (a0 * z + a1) * z + a2; }
  double max_coeff() const;
};

class SpherePoint {
 public:
  /// theta is clamped to [0, pi], phi reduced into [0, 2pi); poles get phi = 0.
  SpherePoint(double theta, double phi);

  static SpherePoint north() { return {0.0, 0.0}; }
  static SpherePoint south() { return {kPi, 0.0}; }
  static SpherePoint from_cartesian(const Vec3& v);

  double theta() const { return theta_; }
  double phi() const { return phi_; }
  Vec3 cartesian() const;
  bool is_north_pole() const { return theta_ == 0.0; }
  bool is_south_pole() const { return theta_ == kPi; }

 private:
  double theta_;
  double phi_;
};

/// Unordered pair of sphere points.
struct SpherePointPair {
  SpherePoint p1;
  SpherePoint p2;
};

double great_circle_distance(const Vec3& a, const Vec3& b);
double great_circle_distance(const SpherePoint& a, const SpherePoint& b);

/// min over the two matchings of the larger pointwise great-circle distance.
double pair_distance(const SpherePointPair& a, const SpherePointPair& b);

/// Applies a rotation matrix to both points.
SpherePointPair rotate(const Mat3& r, const SpherePointPair& pair);

/// Roots of the Majorana quadratic; std::nullopt stands for the root at
/// infinity left by a vanishing leading coefficient.
std::array<std::optional<cplx>, 2> majorana_roots(const MajoranaPoly& poly);

SpherePoint point_from_root(const std::optional<cplx>& root);

SpherePointPair state_to_points(const Ket3& psi);

/// The general state with the given Majorana points, normalized.
/// Throws DegeneratePair if the normalization bracket underflows.
Ket3 points_to_state(const SpherePointPair& pair);

/// x' + i y' = e^{i phi} tan(theta/2). Throws SouthPole for theta = pi.
cplx stereographic(const SpherePoint& p);

}  // namespace qutrit
