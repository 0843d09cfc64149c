#pragma once

// Command-line front end: state descriptors, Majorana trajectories and the
// subcommand dispatcher. Everything writes to caller-supplied streams so the
// commands can be exercised in-process.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "qutrit/core.hpp"
#include "qutrit/majorana.hpp"

namespace qutrit::cli {

/// Parses `+1`, `0`, `-1`, `re,im re,im re,im`, `canon:alpha=<a>`,
/// `points:t1,p1,t2,p2` or `random`. Angles are radians unless `degrees`.
/// Throws ParseError with the 1-based column of the offending character.
Ket3 parse_state_spec(const std::string& text, bool degrees = false,
                      std::uint64_t seed = 1);

struct TrajectorySample {
  double theta;
  Vec3 p1;
  Vec3 p2;
  Vec3 m;
};

/// Samples theta_k = range k / steps, k = 0..steps-1, applying
/// u_lambda(i, theta/2) for "lambda<i>" or u_sigma(j, theta) for "sigma<j>".
/// Consecutive pairs are matched by nearest neighbour; a jump larger than
/// min(pi/2, 4 sqrt(step)) throws InvariantViolation. Unknown generators
/// throw std::invalid_argument.
std::vector<TrajectorySample> trajectory(const std::string& generator, const Ket3& psi,
                                         int steps, double range);

/// Largest per-point jump `trajectory` tolerates for a given angular step.
double tracking_bound(double step);

/// Significant digits for printed floats: QUTRIT_PRECISION or 12.
int output_precision();

/// Runs one command line (without the program name). Returns the exit code:
/// 0 success, 1 usage or parse error, 2 numerical contract violation.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qutrit::cli
