#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "cli.hpp"
#include "qutrit/gates.hpp"
#include "qutrit/geometry.hpp"
#include "qutrit/nmrsim.hpp"
#include "qutrit/tomography.hpp"

namespace qutrit::cli {

namespace {

using json = nlohmann::ordered_json;

/// Raised when a numerical contract fails under --assert.
struct ContractFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Context {
  bool degrees = false;
  bool csv = false;
  bool check = false;
  std::uint64_t seed = 1;
  int precision = 12;

  /// Rounds to the output precision; noise below 5e-14 prints as 0.
  double num(double v) const {
    if (!std::isfinite(v)) return v;
    if (std::abs(v) < 5e-14) return 0.0;
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.*g", precision, v);
    return std::strtod(buf, nullptr);
  }
  std::string text(double v) const {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.*g", precision, num(v));
    return buf;
  }
  double angle_in(double v) const { return degrees ? radians(v) : v; }
  double angle_out(double v) const { return num(degrees ? qutrit::degrees(v) : v); }

  json vec(const Vec3& v) const { return json::array({num(v.x()), num(v.y()), num(v.z())}); }
  json complex(cplx c) const { return json::array({num(c.real()), num(c.imag())}); }
  json matrix(const Mat3c& m) const {
    json rows = json::array();
    for (int r = 0; r < 3; ++r) {
      json row = json::array();
      for (int c = 0; c < 3; ++c) row.push_back(complex(m(r, c)));
      rows.push_back(row);
    }
    return rows;
  }
};

/// Phase in [0, 2pi); values within 1e-9 of a full turn become 0.
double unit_circle(double a) {
  a = std::fmod(a, 2.0 * kPi);
  if (a < 0.0) a += 2.0 * kPi;
  if (2.0 * kPi - a <= 1e-9) a = 0.0;
  return a;
}

json point_json(const Context& cx, const SpherePoint& p) {
  json j;
  j["theta"] = cx.angle_out(p.theta());
  j["phi"] = cx.angle_out(p.phi());
  j["xyz"] = cx.vec(p.cartesian());
  return j;
}

json state_json(const Context& cx, const Ket3& psi) {
  json j;
  json amps = json::array();
  for (int k = 0; k < 3; ++k) amps.push_back(cx.complex(psi[k]));
  j["amplitudes"] = amps;

  const auto pair = state_to_points(psi);
  j["majorana"] = json::array({point_json(cx, pair.p1), point_json(cx, pair.p2)});

  const auto m = magnetization(psi);
  json mag;
  mag["vector"] = cx.vec(m.m_vector);
  mag["magnitude"] = cx.num(m.magnitude);
  mag["bisector_length"] = cx.num(m.bisector_length);
  mag["pointing"] = m.pointing;
  j["magnetization"] = mag;

  const auto d = canonical_decompose(psi);
  json can;
  can["alpha"] = cx.angle_out(d.alpha);
  can["beta"] = cx.angle_out(d.angles.beta);
  can["gamma"] = cx.angle_out(d.angles.gamma);
  can["delta"] = cx.angle_out(d.angles.delta);
  can["residual"] = cx.num(d.residual);
  j["canonical"] = can;
  return j;
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

// ---------------------------------------------------------------------------

int cmd_state(const Context& cx, const std::string& spec, std::ostream& out) {
  emit(out, state_json(cx, parse_state_spec(spec, cx.degrees, cx.seed)));
  return 0;
}

int cmd_trajectory(const Context& cx, const std::string& gen, const std::string& spec,
                   int steps, std::optional<double> range, std::ostream& out) {
  const double r = range ? cx.angle_in(*range) : 2.0 * kPi;
  const auto samples = trajectory(gen, parse_state_spec(spec, cx.degrees, cx.seed), steps, r);
  if (cx.csv) {
    out << "theta,p1x,p1y,p1z,p2x,p2y,p2z,mx,my,mz\n";
    for (const auto& s : samples) {
      out << cx.text(cx.degrees ? degrees(s.theta) : s.theta);
      for (const Vec3* v : {&s.p1, &s.p2, &s.m})
        for (int k = 0; k < 3; ++k) out << ',' << cx.text((*v)(k));
      out << '\n';
    }
    return 0;
  }
  json j;
  j["generator"] = gen;
  j["steps"] = steps;
  j["range"] = cx.angle_out(r);
  json rows = json::array();
  for (const auto& s : samples) {
    json row;
    row["theta"] = cx.angle_out(s.theta);
    row["p1"] = cx.vec(s.p1);
    row["p2"] = cx.vec(s.p2);
    row["m"] = cx.vec(s.m);
    rows.push_back(row);
  }
  j["samples"] = rows;
  emit(out, j);
  return 0;
}

int cmd_gate(const Context& cx, const std::string& name, const std::string& spec, double theta,
             std::ostream& out) {
  const GateSpec g = gate_by_name(name, cx.angle_in(theta));
  const Ket3 in = parse_state_spec(spec, cx.degrees, cx.seed);
  json j;
  j["gate"] = g.name;
  j["matrix"] = cx.matrix(g.matrix.matrix());
  j["input"] = state_json(cx, in);
  j["output"] = state_json(cx, g.matrix * in);
  emit(out, j);
  return 0;
}

int cmd_tomo(const Context& cx, const std::string& spec, const std::string& gate, double theta,
             bool pseudopure, double epsilon, std::ostream& out) {
  DensityMatrix3 rho = DensityMatrix3::maximally_mixed();
  if (pseudopure) {
    const Level levels[] = {Level::PlusOne, Level::Zero, Level::MinusOne};
    const char* names[] = {"+1", "0", "-1"};
    int found = -1;
    for (int k = 0; k < 3; ++k)
      if (spec == names[k]) found = k;
    if (found < 0) throw ParseError("pseudopure needs a basis level +1, 0 or -1", 0, 1);
    rho = prepare_pseudopure(levels[found], ThermalParams::make(epsilon));
  } else {
    rho = dm_from_ket(parse_state_spec(spec, cx.degrees, cx.seed));
  }
  if (!gate.empty()) rho = rho.conjugated(gate_by_name(gate, cx.angle_in(theta)).matrix);

  const auto results = run_tomo_experiments(rho);
  const auto coeffs = reconstruct(results);
  const double f = fidelity(rho.matrix(), coeffs.density_matrix());

  json j;
  json reads = json::array();
  for (const auto& r : results) {
    json e;
    e["experiment"] = r.experiment_id;
    e["line12"] = cx.complex(r.line12);
    e["line23"] = cx.complex(r.line23);
    reads.push_back(e);
  }
  j["readouts"] = reads;
  json c = json::array();
  for (double v : coeffs.c) c.push_back(cx.num(v));
  j["coefficients"] = c;
  json m = json::array();
  const Mat3c rec = coeffs.density_matrix();
  for (int r = 0; r < 3; ++r)
    for (int s = 0; s < 3; ++s) m.push_back(cx.complex(rec(r, s)));
  j["matrix"] = m;
  j["fidelity"] = cx.num(f);
  j["positive"] = coeffs.is_positive();
  emit(out, j);
  if (cx.check && std::abs(f - 1.0) > 1e-9)
    throw ContractFailure("tomography fidelity " + cx.text(f) + " differs from 1");
  return 0;
}

int cmd_spectrum(const Context& cx, double omega0, double kappa, const std::string& spec,
                 double epsilon, std::ostream& out) {
  const auto params = HamiltonianParams::make(omega0, kappa);
  const auto f = line_frequencies(params);
  DensityMatrix3 rho = DensityMatrix3::maximally_mixed();
  std::string source;
  if (spec.empty()) {
    rho = apply_event(thermal_state(ThermalParams::make(epsilon)),
                      NonselectivePulse{Axis::Y, 0.5 * kPi});
    source = "thermal, nonselective y 90";
  } else {
    rho = dm_from_ket(parse_state_spec(spec, cx.degrees, cx.seed));
    source = spec;
  }
  const auto lines = spectrum_lines(rho);
  json j;
  j["omega0"] = cx.num(omega0);
  j["kappa"] = cx.num(kappa);
  j["source"] = source;
  json arr = json::array();
  const double freqs[] = {f.f12, f.f23};
  for (int k = 0; k < 2; ++k) {
    json l;
    l["transition"] = k == 0 ? "1-2" : "2-3";
    l["frequency"] = cx.num(freqs[k]);
    l["amplitude"] = cx.num(lines[k].amplitude);
    l["phase"] = cx.angle_out(lines[k].phase);
    arr.push_back(l);
  }
  j["lines"] = arr;
  j["separation"] = cx.num(f.separation);
  emit(out, j);
  return 0;
}

int cmd_verify(const Context& cx, const std::string& file, const std::string& gate, double theta,
               double threshold, std::ostream& out) {
  PulseSequence seq;
  if (file == "-") {
    seq = parse_sequence(std::cin);
  } else {
    std::ifstream in(file);
    if (!in) throw ParseError("cannot open '" + file + "'", 0, 0);
    seq = parse_sequence(in);
  }
  if (seq.has_crush()) throw ParseError("sequence contains CRUSH and is not a gate", 0, 0);
  const GateSpec g = gate_by_name(gate, cx.angle_in(theta));
  const double f = verify_sequence(seq, g.matrix);
  const bool pass = f >= 1.0 - threshold;
  json j;
  j["file"] = file;
  j["gate"] = g.name;
  j["events"] = seq.events.size();
  j["fidelity"] = cx.num(f);
  j["threshold"] = threshold;
  j["pass"] = pass;
  emit(out, j);
  if (cx.check && !pass)
    throw ContractFailure("sequence fidelity " + cx.text(f) + " below 1 - " + cx.text(threshold));
  return 0;
}

int cmd_table1(const Context& cx, std::ostream& out) {
  const auto rows = reproduce_table1();
  const auto phase = [&](double a) { return cx.angle_out(unit_circle(a)); };
  bool ok = true;
  for (const auto& r : rows)
    ok = ok && std::abs(angle_difference(r.l3_measured, r.l3_predicted)) <= 1e-6 &&
         std::abs(angle_difference(r.l8_measured, r.l8_predicted)) <= 1e-6;

  if (cx.csv) {
    out << "theta,l3_predicted,l3_simulated,l8_predicted,l8_simulated\n";
    for (const auto& r : rows)
      out << cx.text(cx.degrees ? degrees(r.theta) : r.theta) << ','
          << cx.text(phase(r.l3_predicted)) << ',' << cx.text(phase(r.l3_measured)) << ','
          << cx.text(phase(r.l8_predicted)) << ',' << cx.text(phase(r.l8_measured)) << '\n';
  } else {
    json arr = json::array();
    for (const auto& r : rows) {
      json row;
      row["theta"] = cx.angle_out(r.theta);
      row["lambda3"] = {{"predicted", phase(r.l3_predicted)}, {"simulated", phase(r.l3_measured)}};
      row["lambda8"] = {{"predicted", phase(r.l8_predicted)}, {"simulated", phase(r.l8_measured)}};
      arr.push_back(row);
    }
    json j;
    j["units"] = cx.degrees ? "degrees" : "radians";
    j["rows"] = arr;
    emit(out, j);
  }
  if (cx.check && !ok) throw ContractFailure("simulated phases differ from the prediction");
  return 0;
}

int cmd_decompose(const Context& cx, const std::string& spec, std::ostream& out) {
  const Ket3 psi = parse_state_spec(spec, cx.degrees, cx.seed);
  const auto d = canonical_decompose(psi);
  const double mag = magnetization(psi).magnitude;
  json j;
  j["alpha"] = cx.angle_out(d.alpha);
  j["beta"] = cx.angle_out(d.angles.beta);
  j["gamma"] = cx.angle_out(d.angles.gamma);
  j["delta"] = cx.angle_out(d.angles.delta);
  j["residual"] = cx.num(d.residual);
  j["magnitude"] = cx.num(mag);
  j["cos2alpha"] = cx.num(std::abs(std::cos(2.0 * d.alpha)));
  emit(out, j);
  if (cx.check && d.residual > 1e-8)
    throw ContractFailure("decomposition residual " + cx.text(d.residual) + " above 1e-8");
  return 0;
}

PulseSequence named_sequence(const Context& cx, const std::string& name, double theta,
                             double epsilon) {
  const double th = cx.angle_in(theta);
  if (name == "chrestenson") return chrestenson_sequence();
  if (name == "swap12") return swap_sequence({1, 2});
  if (name == "swap23") return swap_sequence({2, 3});
  if (name == "swap13") return swap_sequence({1, 3});
  if (name == "cascade") return double_quantum_cascade(th);
  if (name == "phase_l3") return phase_gate_sequence(PhaseAxis::L3, th);
  if (name == "phase_l8") return phase_gate_sequence(PhaseAxis::L8, th);
  if (name.size() == 7 && name.rfind("lambda", 0) == 0 && name[6] >= '1' && name[6] <= '8')
    return lambda_sequence(name[6] - '0', th);
  if (name.size() == 5 && name.rfind("tomo", 0) == 0 && name[4] >= '1' && name[4] <= '4')
    return tomo_experiment_sequence(name[4] - '0');
  const std::string pp = "pseudopure";
  if (name.rfind(pp, 0) == 0) {
    const std::string lvl = name.substr(pp.size());
    const auto pops = thermal_state(ThermalParams::make(epsilon)).matrix().diagonal().real();
    if (lvl == "+1") return pseudopure_sequence(Level::PlusOne, pops);
    if (lvl == "0") return pseudopure_sequence(Level::Zero, pops);
    if (lvl == "-1") return pseudopure_sequence(Level::MinusOne, pops);
  }
  throw std::invalid_argument("unknown sequence '" + name + "'");
}

int cmd_sequence(const Context& cx, const std::string& name, double theta, double epsilon,
                 std::ostream& out) {
  const PulseSequence seq = named_sequence(cx, name, theta, epsilon);
  write_sequence(out, seq);
  if (cx.check && seq.target && verify_sequence(seq, *seq.target) < 1.0 - 1e-8)
    throw ContractFailure("sequence does not reach its target");
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Single-qutrit Majorana geometry and ideal spin-1 NMR simulator", "qutrit"};
  app.fallthrough();
  app.require_subcommand(1);

  Context cx;
  cx.precision = output_precision();
  app.add_flag("--degrees", cx.degrees, "Read and print angles in degrees");
  app.add_flag("--csv", cx.csv, "CSV output for trajectory and table1");
  app.add_option("--seed", cx.seed, "Seed for the `random` state");
  app.add_flag("--assert", cx.check, "Exit with code 2 when a numerical contract fails");

  std::string spec, gen, gate, file, name, state_opt;
  int steps = 100;
  double range = 0.0, theta = 0.0, epsilon = 1e-5, threshold = 1e-8;
  double omega0 = 91.108e6, kappa = 156.0;
  bool pseudopure = false;

  const char* spec_help = "+1 | 0 | -1 | 're,im re,im re,im' | canon:alpha=A | "
                          "points:t1,p1,t2,p2 | random";

  auto* st = app.add_subcommand("state", "Amplitudes, Majorana points, magnetization, canonical form");
  st->add_option("spec", spec, spec_help)->required();

  auto* tr = app.add_subcommand("trajectory", "Majorana points along a one-parameter family");
  tr->add_option("generator", gen, "lambda1..lambda8 (exp(i theta L/2)) or sigma1..sigma3")
      ->required();
  tr->add_option("spec", spec, spec_help)->required();
  tr->add_option("--steps", steps, "Number of samples")->capture_default_str();
  auto* range_opt = tr->add_option("--range", range, "Sweep length (default one full turn)");

  auto* ga = app.add_subcommand("gate", "Apply a named gate to a state");
  ga->add_option("name", name, "chrestenson | swap12 | swap23 | swap13 | phase_l3 | phase_l8")
      ->required();
  ga->add_option("spec", spec, spec_help)->required();
  ga->add_option("--theta", theta, "Phase-gate angle");

  auto* to = app.add_subcommand("tomo", "Four-experiment tomography of a state");
  to->add_option("spec", spec, spec_help)->required();
  to->add_option("--gate", gate, "Gate applied before the tomography");
  to->add_option("--theta", theta, "Phase-gate angle");
  to->add_flag("--pseudopure", pseudopure, "Prepare the pseudopure state of the basis level");
  to->add_option("--epsilon", epsilon, "Thermal polarization")->capture_default_str();

  auto* sp = app.add_subcommand("spectrum", "Line positions and intensities");
  sp->add_option("--omega0", omega0, "Larmor frequency, Hz")->capture_default_str();
  sp->add_option("--kappa", kappa, "Quadrupolar coupling, Hz")->capture_default_str();
  sp->add_option("--state", state_opt, "Pure state to read out (default: thermal after 90)");
  sp->add_option("--epsilon", epsilon, "Thermal polarization")->capture_default_str();

  auto* ve = app.add_subcommand("verify", "Gate fidelity of a pulse-sequence file");
  ve->add_option("file", file, "Sequence file, '-' for stdin")->required();
  ve->add_option("gate", gate, "Target gate name")->required();
  ve->add_option("--theta", theta, "Phase-gate angle");
  ve->add_option("--threshold", threshold, "Allowed 1 - fidelity")->capture_default_str();

  auto* tb = app.add_subcommand("table1", "Phase differences from the phase-gate pipeline");

  auto* de = app.add_subcommand("decompose", "Canonical decomposition of a state");
  de->add_option("spec", spec, spec_help)->required();

  auto* sq = app.add_subcommand("sequence", "Print a shipped pulse sequence");
  sq->add_option("name", name,
                 "chrestenson | swap12 | swap23 | swap13 | cascade | lambda1..8 | phase_l3 | "
                 "phase_l8 | pseudopure+1 | pseudopure0 | pseudopure-1 | tomo1..4")
      ->required();
  sq->add_option("--theta", theta, "Rotation angle");
  sq->add_option("--epsilon", epsilon, "Thermal polarization")->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (st->parsed()) return cmd_state(cx, spec, out);
    if (tr->parsed())
      return cmd_trajectory(cx, gen, spec, steps,
                            range_opt->count() ? std::optional<double>(range) : std::nullopt, out);
    if (ga->parsed()) return cmd_gate(cx, name, spec, theta, out);
    if (to->parsed()) return cmd_tomo(cx, spec, gate, theta, pseudopure, epsilon, out);
    if (sp->parsed()) return cmd_spectrum(cx, omega0, kappa, state_opt, epsilon, out);
    if (ve->parsed()) return cmd_verify(cx, file, gate, theta, threshold, out);
    if (tb->parsed()) return cmd_table1(cx, out);
    if (de->parsed()) return cmd_decompose(cx, spec, out);
    if (sq->parsed()) return cmd_sequence(cx, name, theta, epsilon, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const RangeError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const ContractFailure& e) {
    err << "contract violation: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "contract violation: " << e.what() << '\n';
    return 2;
  }
  return 1;
}

}  // namespace qutrit::cli
