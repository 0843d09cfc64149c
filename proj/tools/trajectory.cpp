#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "cli.hpp"
#include "qutrit/algebra.hpp"
#include "qutrit/geometry.hpp"

namespace qutrit::cli {

double tracking_bound(double step) {
  // Near a double root the points separate like sqrt(theta), hence the root.
  return std::min(0.5 * kPi, 4.0 * std::sqrt(std::abs(step)));
}

std::vector<TrajectorySample> trajectory(const std::string& generator, const Ket3& psi,
                                         int steps, double range) {
  bool lambda = false;
  int index = 0;
  if (generator.size() == 7 && generator.rfind("lambda", 0) == 0) {
    lambda = true;
    index = generator[6] - '0';
    if (index < 1 || index > 8) index = 0;
  } else if (generator.size() == 6 && generator.rfind("sigma", 0) == 0) {
    index = generator[5] - '0';
    if (index < 1 || index > 3) index = 0;
  }
  if (index == 0)
    throw std::invalid_argument("unknown generator '" + generator +
                                "' (expected lambda1..lambda8 or sigma1..sigma3)");
  if (steps < 2) throw std::invalid_argument("trajectory needs at least 2 steps");

  const double bound = tracking_bound(range / steps);
  std::vector<TrajectorySample> out;
  out.reserve(steps);
  for (int k = 0; k < steps; ++k) {
    const double theta = range * k / steps;
    const Unitary3 u = lambda ? u_lambda(index, 0.5 * theta) : u_sigma(index, theta);
    const Ket3 s = u * psi;
    const auto pair = state_to_points(s);
    Vec3 a = pair.p1.cartesian(), b = pair.p2.cartesian();
    if (!out.empty()) {
      const Vec3& pa = out.back().p1;
      const Vec3& pb = out.back().p2;
      const double straight =
          std::max(great_circle_distance(pa, a), great_circle_distance(pb, b));
      const double crossed =
          std::max(great_circle_distance(pa, b), great_circle_distance(pb, a));
      if (crossed < straight) std::swap(a, b);
      const double jump = std::min(straight, crossed);
      if (jump > bound)
        throw InvariantViolation("trajectory jumps " + std::to_string(jump) +
                                 " rad at theta = " + std::to_string(theta) +
                                 "; refine the step");
    }
    out.push_back({theta, a, b, magnetization(s).m_vector});
  }
  return out;
}

int output_precision() {
  if (const char* env = std::getenv("QUTRIT_PRECISION")) {
    char* end = nullptr;
    const long p = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && p >= 1 && p <= 17) return static_cast<int>(p);
  }
  return 12;
}

}  // namespace qutrit::cli
