#include <doctest.h>

#include <cmath>
#include <random>

#include <Eigen/Eigenvalues>

#include "oracles.hpp"
#include "qutrit/geometry.hpp"
#include "qutrit/majorana.hpp"

using namespace qutrit;
using doctest::Approx;

namespace {

oracle::P3 xyz(const SpherePoint& p) { return p.cartesian(); }

// Roots from the companion matrix eigenvalues; the polynomial is built by
// hand from the amplitudes.
std::vector<oracle::P3> companion_points(const Ket3& psi) {
  const cplx a0 = psi[0] / std::sqrt(2.0), a1 = -psi[1], a2 = psi[2] / std::sqrt(2.0);
  const double scale = std::max({std::abs(a0), std::abs(a1), std::abs(a2)});
  std::vector<oracle::P3> out;
  const oracle::P3 south(0, 0, -1);
  if (std::abs(a0) <= 1e-12 * scale) {
    out.push_back(south);
    if (std::abs(a1) <= 1e-12 * scale) out.push_back(south);
    else out.push_back(oracle::point_of_root(-a2 / a1));
    return out;
  }
  Eigen::Matrix2cd c;
  c << -a1 / a0, -a2 / a0, 1.0, 0.0;
  Eigen::ComplexEigenSolver<Eigen::Matrix2cd> es(c);
  for (int k = 0; k < 2; ++k) out.push_back(oracle::point_of_root(es.eigenvalues()(k)));
  return out;
}

}  // namespace

TEST_CASE("basis states sit at the poles") {
  const auto p = state_to_points(Ket3::basis(Level::PlusOne));
  CHECK(p.p1.is_north_pole());
  CHECK(p.p2.is_north_pole());

  const auto z = state_to_points(Ket3::basis(Level::Zero));
  CHECK(((z.p1.is_north_pole() && z.p2.is_south_pole()) ||
         (z.p2.is_north_pole() && z.p1.is_south_pole())));

  const auto m = state_to_points(Ket3::basis(Level::MinusOne));
  CHECK(m.p1.is_south_pole());
  CHECK(m.p2.is_south_pole());
}

TEST_CASE("quadratic with a root at the origin") {
  const double c = std::cos(kPi / 8), s = std::sin(kPi / 8);
  const auto pair = state_to_points(normalize(Vec3c(c, -s, 0)));
  // z (a0 z + a1) = 0 with a0 = c/sqrt2, a1 = s: roots 0 and -sqrt2 tan(pi/8).
  const SpherePoint expect(2.0 * std::atan(std::sqrt(2.0) * std::tan(kPi / 8)), kPi);
  const SpherePointPair want{SpherePoint::north(), expect};
  CHECK(pair_distance(pair, want) < 1e-14);
  const SpherePoint& other = pair.p1.is_north_pole() ? pair.p2 : pair.p1;
  CHECK(other.phi() == Approx(kPi).epsilon(1e-15));
}

TEST_CASE("points_to_state examples") {
  const Ket3 up = points_to_state({SpherePoint::north(), SpherePoint::north()});
  CHECK(phase_invariant_distance(up, Ket3::basis(Level::PlusOne)) < 1e-15);

  const Ket3 zero = points_to_state({SpherePoint::north(), SpherePoint::south()});
  CHECK(phase_invariant_distance(zero, Ket3::basis(Level::Zero)) < 1e-15);

  const Ket3 down = points_to_state({SpherePoint::south(), SpherePoint::south()});
  CHECK(phase_invariant_distance(down, Ket3::basis(Level::MinusOne)) < 1e-15);
}

TEST_CASE("points_to_state matches the explicit column") {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> th(0, kPi), ph(0, 2 * kPi);
  for (int n = 0; n < 200; ++n) {
    const double t1 = th(rng), f1 = ph(rng), t2 = th(rng), f2 = ph(rng);
    const oracle::V3c col(
        std::sqrt(2.0) * std::cos(t1 / 2) * std::cos(t2 / 2),
        std::polar(1.0, f1) * std::sin(t1 / 2) * std::cos(t2 / 2) +
            std::polar(1.0, f2) * std::cos(t1 / 2) * std::sin(t2 / 2),
        std::sqrt(2.0) * std::polar(1.0, f1 + f2) * std::sin(t1 / 2) * std::sin(t2 / 2));
    const Ket3 k = points_to_state({SpherePoint(t1, f1), SpherePoint(t2, f2)});
    REQUIRE(std::abs(k.amplitudes().norm() - 1.0) <= 1e-12);
    REQUIRE(oracle::ket_distance(col, k.amplitudes()) <= 1e-12);
  }
}

TEST_CASE("stereographic examples") {
  CHECK(std::abs(stereographic(SpherePoint::north())) == 0.0);
  CHECK(std::abs(stereographic(SpherePoint(kPi / 2, 0)) - cplx(1, 0)) < 1e-15);
  CHECK(std::abs(stereographic(SpherePoint(kPi / 2, kPi / 2)) - cplx(0, 1)) < 1e-15);
  CHECK_THROWS_AS(stereographic(SpherePoint::south()), SouthPole);
}

TEST_CASE("sphere point canonicalization") {
  const SpherePoint a(0.3, -0.5);
  CHECK(a.phi() == Approx(2 * kPi - 0.5));
  CHECK(SpherePoint(1e-14, 2.0).phi() == 0.0);
  CHECK(SpherePoint(kPi - 1e-14, 2.0).is_south_pole());
  const SpherePoint b(0.7, 7 * kPi);
  CHECK(b.phi() == Approx(kPi));
  std::mt19937_64 rng(22);
  std::uniform_real_distribution<double> u(-10, 10);
  for (int n = 0; n < 1000; ++n) {
    const SpherePoint p(std::abs(u(rng)), u(rng));
    REQUIRE(p.phi() >= 0.0);
    REQUIRE(p.phi() < 2 * kPi);
    REQUIRE(std::abs(p.cartesian().norm() - 1.0) <= 1e-12);
  }
}

TEST_CASE("property: state -> points -> state round trip") {
  std::mt19937_64 rng(23);
  double worst = 0.0;
  for (int n = 0; n < 10000; ++n) {
    const Ket3 psi = random_ket(rng);
    worst = std::max(worst, phase_invariant_distance(points_to_state(state_to_points(psi)), psi));
  }
  CHECK(worst <= 1e-9);
}

TEST_CASE("property: points agree with companion-matrix roots") {
  std::mt19937_64 rng(24);
  for (int n = 0; n < 2000; ++n) {
    const Ket3 psi = random_ket(rng);
    const auto pair = state_to_points(psi);
    const auto ref = companion_points(psi);
    REQUIRE(oracle::pair_dist(xyz(pair.p1), xyz(pair.p2), ref[0], ref[1]) <= 1e-8);
  }
}

TEST_CASE("property: finite points are roots of the polynomial") {
  std::mt19937_64 rng(25);
  for (int n = 0; n < 2000; ++n) {
    const Ket3 psi = random_ket(rng);
    const auto poly = MajoranaPoly::from_ket(psi);
    const auto pair = state_to_points(psi);
    for (const SpherePoint& p : {pair.p1, pair.p2}) {
      if (p.is_south_pole()) continue;
      REQUIRE(std::abs(poly(stereographic(p))) <= 1e-9 * poly.max_coeff());
    }
  }
}

TEST_CASE("property: pair order does not matter") {
  std::mt19937_64 rng(26);
  std::uniform_real_distribution<double> th(0, kPi), ph(0, 2 * kPi);
  for (int n = 0; n < 1000; ++n) {
    const SpherePoint a(th(rng), ph(rng)), b(th(rng), ph(rng));
    REQUIRE(phase_invariant_distance(points_to_state({a, b}), points_to_state({b, a})) <= 1e-12);
  }
}

TEST_CASE("property: antipodal pairs have zero magnetization") {
  std::mt19937_64 rng(27);
  std::uniform_real_distribution<double> th(0, kPi), ph(0, 2 * kPi);
  for (int n = 0; n < 1000; ++n) {
    const double t = th(rng), f = ph(rng);
    const Ket3 k = points_to_state({SpherePoint(t, f), SpherePoint(kPi - t, f + kPi)});
    const auto rep = magnetization(k);
    REQUIRE(rep.magnitude <= 1e-9);
    REQUIRE_FALSE(rep.pointing);
  }
}

TEST_CASE("degenerate polynomials map missing roots to the south pole") {
  // a0 = 0: one root at infinity.
  const auto one = majorana_roots(MajoranaPoly::from_ket(normalize(Vec3c(0, 1, 1))));
  CHECK_FALSE(one[0].has_value());
  REQUIRE(one[1].has_value());
  // a0 tiny relative to the rest also counts as missing.
  const auto tiny = majorana_roots(MajoranaPoly::from_ket(normalize(Vec3c(1e-14, 1, 0))));
  CHECK_FALSE(tiny[0].has_value());
  CHECK(point_from_root(std::nullopt).is_south_pole());
}

TEST_CASE("pair distance is matching-independent") {
  const SpherePoint a(0.3, 0.1), b(2.0, 4.0);
  CHECK(pair_distance({a, b}, {b, a}) == 0.0);
  CHECK(pair_distance({a, b}, {a, a}) == Approx(great_circle_distance(a, b)));
}
