#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "qutrit/gates.hpp"
#include "qutrit/geometry.hpp"
#include "qutrit/nmrsim.hpp"
#include "qutrit/tomography.hpp"

using namespace qutrit;
using doctest::Approx;

namespace {

double diff(const Mat3c& a, const Mat3c& b) { return (a - b).cwiseAbs().maxCoeff(); }

const Level kLevels[] = {Level::PlusOne, Level::Zero, Level::MinusOne};

}  // namespace

TEST_CASE("Chrestenson matrix") {
  const Mat3c ch = chrestenson().matrix();
  CHECK(diff(ch * ch.adjoint(), Mat3c::Identity()) < 1e-12);
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) CHECK(std::abs(ch(r, c)) == Approx(1 / std::sqrt(3.0)));

  const double r3 = 1 / std::sqrt(3.0);
  const oracle::V3c expect(r3, r3 * std::polar(1.0, 2 * kPi / 3), r3 * std::polar(1.0, 4 * kPi / 3));
  CHECK((ch * Ket3::basis(Level::Zero).amplitudes() - expect).norm() < 1e-15);
}

TEST_CASE("Chrestenson outputs: magnetization in the equator at 120 degrees") {
  std::vector<Vec3> m;
  for (Level l : kLevels) {
    const auto r = magnetization(chrestenson() * Ket3::basis(l));
    CHECK(r.magnitude == Approx(2 * std::sqrt(2.0) / 3).epsilon(1e-12));
    CHECK(std::abs(r.m_vector.z()) < 1e-12);
    m.push_back(r.m_vector);
  }
  for (int a = 0; a < 3; ++a)
    for (int b = a + 1; b < 3; ++b)
      CHECK(std::abs(oracle::arc(m[a], m[b]) - 2 * kPi / 3) < 1e-9);
}

TEST_CASE("Chrestenson is not an SO(3) image") {
  // |M| is SO(3)-invariant and Ch takes |M| = 0 to |M| = 2 sqrt2/3.
  CHECK_FALSE(magnetization(Ket3::basis(Level::Zero)).pointing);
  CHECK(magnetization(chrestenson() * Ket3::basis(Level::Zero)).pointing);
}

TEST_CASE("swap matrices are involutive permutations") {
  for (const auto& lp : {LevelPair{1, 2}, LevelPair{2, 3}, LevelPair{1, 3}}) {
    const Mat3c s = swap(lp).matrix();
    CHECK(diff(s * s, Mat3c::Identity()) == 0.0);
    CHECK(s.imag().cwiseAbs().maxCoeff() == 0.0);
    for (int r = 0; r < 3; ++r) CHECK(s.row(r).cwiseAbs().sum() == 1.0);
  }
  const Ket3 out = swap({1, 2}) * Ket3::basis(Level::PlusOne);
  CHECK(phase_invariant_distance(out, Ket3::basis(Level::Zero)) == 0.0);
}

TEST_CASE("swap13 and the double-quantum pi rotation") {
  // u_lambda(4, pi/2) exchanges levels 1 and 3 with an i on the exchanged
  // entries; it matches swap13 entrywise in modulus.
  const Mat3c u = u_lambda(4, kPi / 2).matrix();
  CHECK(diff(u.cwiseAbs().cast<cplx>(), swap({1, 3}).matrix()) < 1e-15);
  // swap13 = u_lambda(4, pi/2) followed by diag(-i, 1, -i).
  const Mat3c fix = Vec3c(-kI, 1, -kI).asDiagonal();
  CHECK(diff(fix * u, swap({1, 3}).matrix()) < 1e-15);
}

TEST_CASE("chained swaps walk the points of |+1>") {
  Ket3 k = Ket3::basis(Level::PlusOne);
  const auto poles = [](const Ket3& s) {
    const auto p = state_to_points(s);
    return int(p.p1.is_south_pole()) + int(p.p2.is_south_pole()) +
           10 * (int(p.p1.is_north_pole()) + int(p.p2.is_north_pole()));
  };
  CHECK(poles(k) == 20);  // N, N
  k = swap({1, 2}) * k;
  CHECK(poles(k) == 11);  // N, S
  k = swap({2, 3}) * k;
  CHECK(poles(k) == 2);  // S, S
  k = swap({1, 3}) * k;
  CHECK(poles(k) == 20);
}

TEST_CASE("phase gates") {
  CHECK(diff(phase_gate(PhaseAxis::L3, 0).matrix(), Mat3c::Identity()) == 0.0);
  for (double th : {0.1, 0.5, 1.3, -2.0}) {
    CHECK(diff(phase_gate(PhaseAxis::L3, th).matrix(), u_lambda(3, th).matrix()) < 1e-15);
    CHECK(oracle::up_to_phase(phase_gate(PhaseAxis::L8, th).matrix(),
                              u_lambda(8, kLambda8Sign * th).matrix()) < 1e-12);
    // The opposite sign does not work.
    CHECK(oracle::up_to_phase(phase_gate(PhaseAxis::L8, th).matrix(),
                              u_lambda(8, -kLambda8Sign * th).matrix()) > 1e-3);
  }
  const Mat3c l8 = phase_gate(PhaseAxis::L8, 0.4).matrix();
  CHECK(std::abs(l8(2, 2) - std::polar(1.0, std::sqrt(3.0) * 0.4)) < 1e-15);
}

TEST_CASE("predicted phase differences") {
  CHECK(degrees(predict_phase_difference(PhaseAxis::L3, radians(60))) == Approx(90));
  CHECK(degrees(predict_phase_difference(PhaseAxis::L3, radians(30))) == Approx(45));
  CHECK(degrees(predict_phase_difference(PhaseAxis::L3, radians(120))) == Approx(180));
  CHECK(degrees(predict_phase_difference(PhaseAxis::L8, radians(45))) ==
        Approx(45 * std::sqrt(3.0)));
  CHECK(degrees(predict_phase_difference(PhaseAxis::L8, radians(90))) ==
        Approx(90 * std::sqrt(3.0)));
}

TEST_CASE("gate lookup by name") {
  for (const auto& n : gate_names()) CHECK(gate_by_name(n, 0.3).name == n);
  CHECK_THROWS_AS(gate_by_name("hadamard"), std::invalid_argument);
}

TEST_CASE("every gate on every basis state survives tomography") {
  for (const auto& n : gate_names()) {
    const Unitary3 g = gate_by_name(n, 0.7).matrix;
    for (Level l : kLevels) {
      const auto rho = dm_from_ket(g * Ket3::basis(l));
      REQUIRE(tomo_fidelity(rho, run_tomo_experiments(rho)) >= 0.999);
    }
  }
}
