#include "qutrit/tomography.hpp"

#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

namespace qutrit {

namespace {

void check(double mismatch, const char* what) {
  if (!(std::abs(mismatch) <= kReadoutTolerance))
    throw InconsistentReadouts(std::string(what) + " (mismatch " +
                               std::to_string(std::abs(mismatch)) + ")");
}

}  // namespace

PulseSequence tomo_experiment_sequence(int id) {
  PulseSequence seq;
  switch (id) {
    case 1: break;
    case 2: seq.events = {transition(1, 2, Axis::X, -kPi)}; break;
    case 3: seq.events = {Crush{}, transition(1, 2, Axis::Y, 0.5 * kPi)}; break;
    case 4: seq.events = {Crush{}, transition(2, 3, Axis::Y, 0.5 * kPi)}; break;
    default: throw IndexOutOfRange("tomography experiment must be 1..4");
  }
  return seq;
}

TomoResults run_tomo_experiments(const DensityMatrix3& rho) {
  TomoResults out;
  for (int id = 1; id <= 4; ++id) {
    const auto lines = spectrum_lines(run_sequence(tomo_experiment_sequence(id), rho));
    out[id - 1] = {id, lines[0].readout(), lines[1].readout()};
  }
  return out;
}

Mat3c TomoCoefficients::density_matrix() const {
  Mat3c m = Mat3c::Identity() / 3.0;
  for (int i = 0; i < 8; ++i) m += 0.5 * c[i] * gell_mann(i + 1);
  return m;
}

double TomoCoefficients::min_eigenvalue() const {
  Eigen::SelfAdjointEigenSolver<Mat3c> es(density_matrix(), Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

TomoCoefficients coefficients_of(const Mat3c& rho) {
  TomoCoefficients t;
  for (int i = 0; i < 8; ++i) t.c[i] = (rho * gell_mann(i + 1)).trace().real();
  return t;
}

TomoCoefficients reconstruct(const TomoResults& r) {
  for (int k = 0; k < 4; ++k)
    if (r[k].experiment_id != k + 1)
      throw InconsistentReadouts("readouts must be ordered by experiment 1..4");

  const cplx l12 = r[0].line12, l23 = r[0].line23;
  const cplx l23_2 = r[1].line23;
  const cplx l12_3 = r[2].line12;
  const cplx l23_4 = r[3].line23;

  check(std::abs(r[1].line12 - std::conj(l12)), "experiment 2 line 1-2 disagrees with experiment 1");
  check(l12_3.imag(), "experiment 3 line 1-2 has an imaginary part");
  check(std::abs(r[2].line23), "experiment 3 line 2-3 should be silent");
  check(l23_4.imag(), "experiment 4 line 2-3 has an imaginary part");
  check(std::abs(r[3].line12), "experiment 4 line 1-2 should be silent");

  TomoCoefficients t;
  t.c[0] = l12.real();
  t.c[1] = -l12.imag();
  t.c[2] = -l12_3.real();
  t.c[3] = -l23_2.imag();
  t.c[4] = -l23_2.real();
  t.c[5] = l23.real();
  t.c[6] = -l23.imag();
  t.c[7] = (0.5 * t.c[2] - l23_4.real()) * 2.0 / std::sqrt(3.0);
  return t;
}

double tomo_fidelity(const DensityMatrix3& rho, const TomoResults& results) {
  return fidelity(rho.matrix(), reconstruct(results).density_matrix());
}

}  // namespace qutrit
