#include "qutrit/algebra.hpp"

#include <cmath>
#include <string>

namespace qutrit {

namespace {

GeneratorSet build_generators() {
  const double r2 = 1.0 / std::sqrt(2.0);
  const double r3 = 1.0 / std::sqrt(3.0);
  const cplx i = kI;
  GeneratorSet g;
  auto& l = g.lambda;
  l[0] << 0, 1, 0, 1, 0, 0, 0, 0, 0;
  l[1] << 0, -i, 0, i, 0, 0, 0, 0, 0;
  l[2] << 1, 0, 0, 0, -1, 0, 0, 0, 0;
  l[3] << 0, 0, 1, 0, 0, 0, 1, 0, 0;
  l[4] << 0, 0, -i, 0, 0, 0, i, 0, 0;
  l[5] << 0, 0, 0, 0, 0, 1, 0, 1, 0;
  l[6] << 0, 0, 0, 0, 0, -i, 0, i, 0;
  l[7] << r3, 0, 0, 0, r3, 0, 0, 0, -2.0 * r3;

  g.sigma[0] << 0, r2, 0, r2, 0, r2, 0, r2, 0;
  g.sigma[1] << 0, -i * r2, 0, i * r2, 0, -i * r2, 0, i * r2, 0;
  g.sigma[2] << 1, 0, 0, 0, 0, 0, 0, 0, -1;

  g.jdef[0] << 0, 0, 0, 0, 0, -i, 0, i, 0;
  g.jdef[1] << 0, 0, i, 0, 0, 0, -i, 0, 0;
  g.jdef[2] << 0, -i, 0, i, 0, 0, 0, 0, 0;
  return g;
}

void check_index(int i, int hi, const char* what) {
  if (i < 1 || i > hi)
    throw IndexOutOfRange(std::string(what) + " index " + std::to_string(i) +
                          " outside 1.." + std::to_string(hi));
}

int level_index(int level) { return level - 1; }

}  // namespace

const GeneratorSet& GeneratorSet::get() {
  static const GeneratorSet set = build_generators();
  return set;
}

const Mat3c& gell_mann(int i) {
  check_index(i, 8, "Gell-Mann");
  return GeneratorSet::get().lambda[i - 1];
}

const Mat3c& spin_matrix(int j) {
  check_index(j, 3, "Sigma");
  return GeneratorSet::get().sigma[j - 1];
}

const Mat3c& so3_generator(int j) {
  check_index(j, 3, "J");
  return GeneratorSet::get().jdef[j - 1];
}

LevelPair LevelPair::make(int r, int s) {
  if (r > s) std::swap(r, s);
  if ((r == 1 && s == 2) || (r == 2 && s == 3) || (r == 1 && s == 3))
    return {r, s};
  throw InvalidTransition("no transition between levels " + std::to_string(r) +
                          " and " + std::to_string(s));
}

TransitionOp::TransitionOp(LevelPair levels, Axis axis)
    : levels_(LevelPair::make(levels.r, levels.s)), axis_(axis) {
  const double root3 = std::sqrt(3.0);
  const auto l = [](int i) -> const Mat3c& { return gell_mann(i); };
  const int code = levels_.r * 10 + levels_.s;
  // The z operators for (2,3) and (1,3) carry 1/4 so that (2 I_z)^2 is the
  // subspace projector, like every other I_k^{rs}.
  switch (code) {
    case 12:
      matrix_ = axis == Axis::X ? 0.5 * l(1) : axis == Axis::Y ? 0.5 * l(2) : 0.5 * l(3);
      break;
    case 23:
      matrix_ = axis == Axis::X   ? Mat3c(0.5 * l(6))
                : axis == Axis::Y ? Mat3c(0.5 * l(7))
                                  : Mat3c(0.25 * (root3 * l(8) - l(3)));
      break;
    default:
      matrix_ = axis == Axis::X   ? Mat3c(0.5 * l(4))
                : axis == Axis::Y ? Mat3c(0.5 * l(5))
                                  : Mat3c(0.25 * (root3 * l(8) + l(3)));
      break;
  }
}

Mat3c transition_projector(LevelPair levels) {
  Mat3c p = Mat3c::Zero();
  p(level_index(levels.r), level_index(levels.r)) = 1.0;
  p(level_index(levels.s), level_index(levels.s)) = 1.0;
  return p;
}

Mat3c expm(const Mat3c& a) {
  const double norm = a.cwiseAbs().rowwise().sum().maxCoeff();
  int squarings = 0;
  if (norm > 0.5) squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
  const Mat3c scaled = a / std::ldexp(1.0, squarings);

  Mat3c result = Mat3c::Identity();
  Mat3c term = Mat3c::Identity();
  for (int k = 1; k <= 18; ++k) {
    term = term * scaled / static_cast<double>(k);
    result += term;
  }
  for (int k = 0; k < squarings; ++k) result = result * result;
  return result;
}

Unitary3 u_lambda(int i, double theta) {
  const Mat3c& l = gell_mann(i);
  if (i == 8) {
    // Diagonal: exponentiate the eigenvalues directly.
    Mat3c u = Mat3c::Zero();
    for (int k = 0; k < 3; ++k) u(k, k) = std::exp(kI * theta * l(k, k).real());
    return Unitary3::from_matrix(u);
  }
  // Lambda^3 = Lambda with Lambda^2 the projector on its two-level subspace.
  const Mat3c p = l * l;
  return Unitary3::from_matrix(Mat3c::Identity() + (std::cos(theta) - 1.0) * p +
                               kI * std::sin(theta) * l);
}

Unitary3 u_sigma(int j, double xi) {
  const Mat3c& s = spin_matrix(j);
  return Unitary3::from_matrix(Mat3c::Identity() + (std::cos(xi) - 1.0) * s * s +
                               kI * std::sin(xi) * s);
}

Mat3 r_so3(int j, double xi) {
  return expm(kI * xi * so3_generator(j)).real();
}

Unitary3 transition_unitary(const TransitionOp& op, double xi) {
  const Mat3c p = transition_projector(op.levels());
  return Unitary3::from_matrix(Mat3c::Identity() - p + std::cos(0.5 * xi) * p +
                               2.0 * kI * std::sin(0.5 * xi) * op.matrix());
}

double majorana_rotation_check(const Ket3& psi, int j, double xi) {
  const SpherePointPair moved = state_to_points(u_sigma(j, xi) * psi);
  const SpherePointPair rigid =
      rotate(r_so3(j, kRotationSign * xi), state_to_points(psi));
  return pair_distance(moved, rigid);
}

}  // namespace qutrit
