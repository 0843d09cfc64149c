#include <cmath>
#include <random>

#include <Eigen/Dense>
#include <unsupported/Eigen/NonLinearOptimization>
#include <unsupported/Eigen/NumericalDiff>

#include "qutrit/nmrsim.hpp"

namespace qutrit {

namespace {

constexpr int kParams = 12;

// Template TR23(y) ZC TR12(y) ZC TR23(y) ZC; the z-cascades also absorb the
// global phase, so the residual can compare matrices directly.
PulseSequence template_sequence(const Eigen::VectorXd& x) {
  PulseSequence seq;
  const auto zc = [&](int k) { return ZCascade{{x(k), x(k + 1), x(k + 2)}}; };
  seq.events = {transition(2, 3, Axis::Y, x(0)), zc(1),
                transition(1, 2, Axis::Y, x(4)), zc(5),
                transition(2, 3, Axis::Y, x(8)), zc(9)};
  return seq;
}

struct Residual {
  using Scalar = double;
  enum { InputsAtCompileTime = Eigen::Dynamic, ValuesAtCompileTime = Eigen::Dynamic };
  using InputType = Eigen::VectorXd;
  using ValueType = Eigen::VectorXd;
  using JacobianType = Eigen::MatrixXd;

  Mat3c target;

  int inputs() const { return kParams; }
  int values() const { return 18; }

  int operator()(const Eigen::VectorXd& x, Eigen::VectorXd& f) const {
    const Mat3c d = template_sequence(x).unitary().matrix() - target;
    for (int k = 0; k < 9; ++k) {
      f(2 * k) = d(k / 3, k % 3).real();
      f(2 * k + 1) = d(k / 3, k % 3).imag();
    }
    return 0;
  }
};

double wrap(double a) {
  a = std::remainder(a, 2.0 * kPi);
  return a <= -kPi ? a + 2.0 * kPi : a;
}

}  // namespace

SynthesisResult synthesize_sequence(const Unitary3& target, std::uint64_t seed,
                                    int max_starts) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(-kPi, kPi);

  Residual functor{target.matrix()};
  Eigen::NumericalDiff<Residual, Eigen::Central> diff(functor);

  SynthesisResult best{template_sequence(Eigen::VectorXd::Zero(kParams)), -1.0};
  for (int start = 0; start < max_starts; ++start) {
    Eigen::VectorXd x(kParams);
    for (int k = 0; k < kParams; ++k) x(k) = angle(rng);

    Eigen::LevenbergMarquardt<Eigen::NumericalDiff<Residual, Eigen::Central>> lm(diff);
    lm.parameters.maxfev = 4000;
    lm.parameters.xtol = 1e-15;
    lm.parameters.ftol = 1e-15;
    lm.minimize(x);

    for (int k = 0; k < kParams; ++k) x(k) = wrap(x(k));
    PulseSequence seq = template_sequence(x);
    const double f = verify_sequence(seq, target);
    if (f > best.fidelity) best = {std::move(seq), f};
    if (best.fidelity >= 1.0 - 1e-13) break;
  }
  best.sequence.target = target;
  return best;
}

}  // namespace qutrit
