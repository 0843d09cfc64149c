#pragma once

// Ideal spin-1 NMR: quadrupolar Hamiltonian and two-line spectrum, thermal
// and pseudopure states, instantaneous pulse events, and pulse sequences.
//
// Pulses are ideal rotations in the rotating frame; free evolution between
// pulses is not simulated. A gradient crush zeroes every coherence.

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qutrit/algebra.hpp"
#include "qutrit/core.hpp"
#include "qutrit/gates.hpp"

namespace qutrit {

struct HamiltonianParams {
  double omega0;  // Larmor frequency, Hz
  double kappa;   // effective quadrupolar coupling, Hz

  /// Throws RangeError unless omega0 > 0 and kappa >= 0.
  static HamiltonianParams make(double omega0, double kappa);
};

/// diag(-omega0 + kappa, -2 kappa, omega0 + kappa), in Hz.
Mat3 hamiltonian(const HamiltonianParams& params);

struct LineFrequencies {
  double f12;         // E2 - E1
  double f23;         // E3 - E2
  double separation;  // |f23 - f12| = 6 kappa
};
LineFrequencies line_frequencies(const HamiltonianParams& params);

struct ThermalParams {
  double epsilon;

  /// Throws RangeError unless 0 < epsilon < 1.
  static ThermalParams make(double epsilon);
};

/// I/3 + (epsilon/3) diag(1, 0, -1).
DensityMatrix3 thermal_state(const ThermalParams& params);

inline constexpr double kDetectorGain = 1.0;

struct SpectralLine {
  LevelPair levels;
  double amplitude;  // 2 |rho_rs| * gain
  double phase;      // arg(rho_rs)

  cplx readout() const { return std::polar(amplitude, phase); }
};

/// The two single-quantum lines (1-2 then 2-3). rho_13 is not observable.
std::array<SpectralLine, 2> spectrum_lines(const Mat3c& rho);
inline std::array<SpectralLine, 2> spectrum_lines(const DensityMatrix3& rho) {
  return spectrum_lines(rho.matrix());
}

// ---------------------------------------------------------------------------
// Pulse events

struct TransitionPulse {
  LevelPair levels;
  Axis axis;
  double angle;  // radians
};

struct NonselectivePulse {
  Axis axis;
  double angle;  // radians
};

/// diag(e^{i a1}, e^{i a2}, e^{i a3}).
struct ZCascade {
  std::array<double, 3> angles;  // radians
};

struct Crush {};

using PulseEvent = std::variant<TransitionPulse, NonselectivePulse, ZCascade, Crush>;

/// Single transition-selective event; throws InvalidTransition for (1,3),
/// which needs a three-pulse cascade.
TransitionPulse transition(int r, int s, Axis axis, double angle);

bool is_crush(const PulseEvent& ev);

/// Throws CrushInSequence for a crush and InvalidTransition for (1,3).
Unitary3 event_unitary(const PulseEvent& ev);

DensityMatrix3 apply_event(const DensityMatrix3& state, const PulseEvent& ev);

struct PulseSequence {
  std::vector<PulseEvent> events;
  std::optional<Unitary3> target;

  bool has_crush() const;
  /// Product of the event unitaries, first event rightmost.
  Unitary3 unitary() const;
};

DensityMatrix3 run_sequence(const PulseSequence& seq, const DensityMatrix3& initial);

/// |Tr(target^dagger U_seq)| / 3. Throws CrushInSequence.
double verify_sequence(const PulseSequence& seq, const Unitary3& target);

// ---------------------------------------------------------------------------
// Pseudopure preparation

/// Rotation angle xi for which a transition pulse followed by a crush takes
/// population p_r to `target`: p_r' = p_r cos^2(xi/2) + p_s sin^2(xi/2).
double mixing_angle(double p_r, double p_s, double target);

/// Transition pulses and crushes turning the diagonal state `populations`
/// into a pseudopure state on `target`.
PulseSequence pseudopure_sequence(Level target, const Vec3& populations);

/// (1 - a) I/3 + a |target><target| prepared from the thermal state.
DensityMatrix3 prepare_pseudopure(Level target, const ThermalParams& eps);

/// Weight a of rho = (1 - a) I/3 + a |target><target|, and the largest
/// elementwise deviation of rho from that form.
struct PseudopureForm {
  double weight;
  double deviation;
};
PseudopureForm pseudopure_form(const DensityMatrix3& rho, Level target);

// ---------------------------------------------------------------------------
// Shipped sequences

/// Exact realization of u_lambda(i, theta): single transition pulses for
/// Lambda 1, 2, 6, 7, a conjugated cascade for 4, 5, a z-cascade for 3, 8.
PulseSequence lambda_sequence(int i, double theta);

/// Three-pulse double-quantum cascade TR12(y, pi), TR23(y, -theta),
/// TR12(y, pi). At theta = pi it equals -swap13 and swaps populations 1, 3.
PulseSequence double_quantum_cascade(double theta);

/// Transition pi pulse plus z-cascade phase correction (three pulses for 1-3).
PulseSequence swap_sequence(LevelPair levels);

/// Phase-gate experiment for angle theta: L3 is a z rotation by theta
/// on the 1-2 transition (= phase_gate(L3, theta/2)); L8 is the z-cascade
/// for phase_gate(L8, theta).
PulseSequence phase_gate_sequence(PhaseAxis which, double theta);

/// Chrestenson gate from the six-event template, synthesized once.
const PulseSequence& chrestenson_sequence();

struct SynthesisResult {
  PulseSequence sequence;
  double fidelity;
};

/// Residual minimization over TR23(y) ZC TR12(y) ZC TR23(y) ZC, multi-start
/// from a seeded generator, until gate fidelity >= 1 - 1e-13 or starts run out.
SynthesisResult synthesize_sequence(const Unitary3& target, std::uint64_t seed = 7,
                                    int max_starts = 64);

// ---------------------------------------------------------------------------
// Phase-gate pipeline

/// thermal -> nonselective 90 deg (y) -> phase-gate experiment -> spectrum.
/// Returns arg(line12) - arg(line23) in (-pi, pi].
double measure_phase_difference(PhaseAxis which, double theta,
                                const ThermalParams& eps = ThermalParams{1e-5});

struct Table1Row {
  double theta;  // radians
  double l3_predicted;
  double l3_measured;
  double l8_predicted;
  double l8_measured;
};

/// Rows for theta = 0, 30, 45, 60, 90, 120 degrees. Measured values are
/// reported in [0, 2pi).
std::vector<Table1Row> reproduce_table1();

/// Circular difference a - b wrapped into (-pi, pi].
double angle_difference(double a, double b);

// ---------------------------------------------------------------------------
// Text format: one event per line,
//   TR r s axis angle_deg | NS axis angle_deg | ZC a1 a2 a3 (deg) | CRUSH
// '#' starts a comment; keywords and axes are case-insensitive.

PulseSequence parse_sequence(std::istream& in);
PulseSequence parse_sequence(const std::string& text);
void write_sequence(std::ostream& out, const PulseSequence& seq);
std::string format_sequence(const PulseSequence& seq);

}  // namespace qutrit
