#pragma once

// Four-experiment state tomography from the two observable NMR lines.
//
//   1: no pulse                 -> c1, c2, c6, c7
//   2: TR 1 2 x -180            -> c4, c5 (rho_13 moved onto the 2-3 line)
//   3: CRUSH, TR 1 2 y 90       -> c3 from p2 - p1
//   4: CRUSH, TR 2 3 y 90       -> c8 from p3 - p2
//
// The reconstruction is rho = I/3 + 1/2 sum_i c_i Lambda_i.

#include <array>

#include "qutrit/core.hpp"
#include "qutrit/nmrsim.hpp"

namespace qutrit {

struct TomoExperimentResult {
  int experiment_id;  // 1..4
  cplx line12;
  cplx line23;
};

using TomoResults = std::array<TomoExperimentResult, 4>;

/// Throws IndexOutOfRange unless id is 1..4.
PulseSequence tomo_experiment_sequence(int id);

TomoResults run_tomo_experiments(const DensityMatrix3& rho);

/// Readout mismatch above this raises InconsistentReadouts.
inline constexpr double kReadoutTolerance = 1e-6;

struct TomoCoefficients {
  std::array<double, 8> c{};

  Mat3c density_matrix() const;
  double min_eigenvalue() const;
  bool is_positive(double tol = tol::kInvariant) const { return min_eigenvalue() >= -tol; }
};

/// c_i = Tr(rho Lambda_i).
TomoCoefficients coefficients_of(const Mat3c& rho);

/// Linear inversion. Redundant readouts (experiment 2's 1-2 line, the
/// imaginary parts in 3 and 4, and the silent lines there) must agree with
/// the model; otherwise InconsistentReadouts.
TomoCoefficients reconstruct(const TomoResults& results);

/// fidelity(rho, reconstructed) for the given readouts.
double tomo_fidelity(const DensityMatrix3& rho, const TomoResults& results);

}  // namespace qutrit
