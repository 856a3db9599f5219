// command line front end: solution tables, pulse program simulation and
// end-to-end verification of solved gate parameters.
//
// exit codes: 0 success, 1 no solution (or verification above tolerance),
// 2 bad input, 3 guard band violation.
#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "iongate/gates.hpp"
#include "iongate/program.hpp"
#include "iongate/solver.hpp"

namespace {

using iongate::TrapConfig;
using json = nlohmann::ordered_json;

constexpr double kVerifyTol = 1e-8;
constexpr int kExitOk = 0;
constexpr int kExitNoSolution = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitGuard = 3;

std::string format_double(double v) {
  char buf[40];
  auto [ptr, ec] =
      std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 6);
  return std::string(buf, ptr);
}

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw std::invalid_argument("cannot open output file " + out_path);
  f << text;
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::invalid_argument("cannot open input file " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

// physical pulse times from the dimensionless durations; the lab numbers are a
// resonant Rabi frequency and a first-sideband Rabi frequency eta * Omega
struct TimingSpec {
  double rabi_khz = 0.0;
  double sideband_khz = 0.0;
  bool given = false;
};

double carrier_seconds(double theta, const TimingSpec& t) {
  return theta / (2.0 * std::numbers::pi * t.rabi_khz * 1e3);
}

double sideband_seconds(double theta, double eta, const TimingSpec& t) {
  return theta * eta / (2.0 * std::numbers::pi * t.sideband_khz * 1e3);
}

void check_timing(const TimingSpec& t) {
  if (!t.given) return;
  if (!(t.rabi_khz > 0.0) || !(t.sideband_khz > 0.0))
    throw std::invalid_argument("timing needs positive --rabi-khz and --sideband-khz");
}

// complex matrix as nested [re, im] arrays for the JSON reports
json matrix_json(const Eigen::MatrixXcd& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c)
      row.push_back(json::array({m(r, c).real(), m(r, c).imag()}));
    rows.push_back(std::move(row));
  }
  return rows;
}

// ------------------------------------------------------------------- table

struct TableOpts {
  int k = 1;
  int max_p = 8;
  int max_prime = 4;
  std::string format = "csv";
  std::string out;
};

int run_table(const TableOpts& o) {
  const auto records = iongate::enumerate_solutions(o.k, o.max_p, o.max_prime);
  constexpr double pi = std::numbers::pi;
  std::string text;
  if (o.format == "json") {
    json j = json::array();
    for (const iongate::SolutionRecord& r : records) {
      json row;
      row["k"] = r.k;
      row["eta"] = r.eta;
      row["p"] = r.p;
      row["q"] = r.q;
      row["p_prime"] = r.p_prime;
      row["q_prime"] = r.q_prime;
      row["theta2_over_pi"] = r.theta2_over_pi;
      row["theta1_over_pi"] = r.theta1_over_pi;
      row["theta3_over_pi"] = r.theta3_over_pi;
      row["phi1_over_pi"] = r.phi1 / pi;
      row["phi3_over_pi"] = r.phi3 / pi;
      row["cn_error"] = r.cn_error;
      row["leakage"] = r.leakage;
      j.push_back(std::move(row));
    }
    text = j.dump(2) + "\n";
  } else {
    text =
        "k, eta, p, q, p_prime, q_prime, theta2_over_pi, theta1_over_pi, "
        "theta3_over_pi, phi1_over_pi, phi3_over_pi, cn_error, leakage\n";
    for (const iongate::SolutionRecord& r : records) {
      text += std::to_string(r.k) + ", " + format_double(r.eta) + ", " +
              std::to_string(r.p) + ", " + std::to_string(r.q) + ", " +
              std::to_string(r.p_prime) + ", " + std::to_string(r.q_prime) + ", " +
              format_double(r.theta2_over_pi) + ", " +
              format_double(r.theta1_over_pi) + ", " +
              format_double(r.theta3_over_pi) + ", " +
              format_double(r.phi1 / pi) + ", " + format_double(r.phi3 / pi) + ", " +
              format_double(r.cn_error) + ", " + format_double(r.leakage) + "\n";
    }
  }
  write_output(text, o.out);
  return kExitOk;
}

// ---------------------------------------------------------------- simulate

struct SimulateOpts {
  std::string file;
  double leak_tol = iongate::kDefaultLeakTol;
  std::string format = "json";
  std::string out;
};

int run_simulate(const SimulateOpts& o) {
  const iongate::PulseProgram prog = iongate::parse_pulse_program(read_file(o.file));
  const iongate::SimulationResult res = iongate::run_program(prog, o.leak_tol);

  constexpr double pi = std::numbers::pi;
  json j;
  j["eta"] = prog.eta;
  j["truncation"] = prog.truncation;
  j["guard"] = prog.guard;
  j["steps"] = json::array();
  for (const iongate::StepReport& s : res.steps) {
    json step;
    step["type"] = s.pulse.kind == iongate::PulseKind::carrier ? "carrier" : "sideband";
    step["k"] = s.pulse.k;
    step["phase_pi"] = s.pulse.phi / pi;
    step["theta_pi"] = s.pulse.theta / pi;
    step["norm"] = s.norm;
    step["guard_occupation"] = s.guard_occupation;
    j["steps"].push_back(std::move(step));
  }
  j["leakage"] = res.leakage;
  if (res.fidelity) j["fidelity"] = *res.fidelity;
  j["final_state"] = json::array();
  const TrapConfig cfg = res.final_state.config();
  for (int m = 0; m <= cfg.truncation; ++m) {
    for (iongate::Level s : {iongate::Level::g, iongate::Level::e}) {
      const iongate::Complex a = res.final_state.amplitude(m, s);
      if (std::abs(a) <= 1e-12) continue;
      j["final_state"].push_back(
          json::array({m, s == iongate::Level::g ? "g" : "e", a.real(), a.imag()}));
    }
  }
  write_output(j.dump(2) + "\n", o.out);
  return kExitOk;
}

// ------------------------------------------------------------------ verify

struct VerifyCommonOpts {
  std::string format = "text";
  std::string out;
};

int report_and_grade(json j, double error, const VerifyCommonOpts& c) {
  const bool ok = error < kVerifyTol;
  j["ok"] = ok;
  std::string text;
  if (c.format == "json") {
    text = j.dump(2) + "\n";
  } else {
    for (const auto& item : j.items()) {
      if (item.key() == "matrix") {
        int row_index = 0;
        for (const json& row : item.value()) {
          text += "matrix[" + std::to_string(row_index++) + "] =";
          for (const json& entry : row)
            text += " (" + format_double(entry[0].get<double>()) + ", " +
                    format_double(entry[1].get<double>()) + ")";
          text += "\n";
        }
      } else if (item.value().is_object()) {
        for (const auto& sub : item.value().items())
          text += item.key() + "." + sub.key() + " = " +
                  format_double(sub.value().get<double>()) + "\n";
      } else if (item.value().is_number_float()) {
        text += item.key() + " = " + format_double(item.value().get<double>()) + "\n";
      } else {
        text += item.key() + " = " + item.value().dump() + "\n";
      }
    }
  }
  write_output(text, c.out);
  return ok ? kExitOk : kExitNoSolution;
}

struct VerifyHOpts {
  double eta = 0.0;
  int k = 1;
  int m = 0;
  int branch_r = 0;
  int branch_f = 0;
  std::string order = "carrier-first";
  VerifyCommonOpts common;
};

int run_verify_h(const VerifyHOpts& o) {
  const TrapConfig cfg = TrapConfig::make(o.eta, o.k);
  const iongate::HadamardPulseSolution sol =
      iongate::solve_h_parameters(cfg, o.m, o.branch_r, o.branch_f);
  const iongate::HadamardOrder order = o.order == "carrier-first"
                                           ? iongate::HadamardOrder::carrier_then_sideband
                                           : iongate::HadamardOrder::sideband_then_carrier;
  const std::vector<iongate::PulseSpec> seq = iongate::h_pulse_sequence(sol, cfg, order);
  const iongate::UnitaryMatrix u = iongate::compose(seq, cfg);
  const iongate::BlockReport rep = iongate::restrict_to_fock_block(u, cfg, o.m);
  const double error = iongate::gate_distance(rep.block, iongate::ideal_hadamard());

  constexpr double pi = std::numbers::pi;
  json j;
  j["gate"] = "h";
  j["eta"] = o.eta;
  j["k"] = o.k;
  j["m"] = o.m;
  j["order"] = o.order;
  j["theta_r_over_pi"] = sol.theta_r / pi;
  j["theta_f_over_pi"] = sol.theta_f / pi;
  j["phi_r_over_pi"] = seq[order == iongate::HadamardOrder::carrier_then_sideband ? 0 : 1].phi / pi;
  j["h_error"] = error;
  j["leakage"] = rep.leakage;
  j["matrix"] = matrix_json(rep.block);
  return report_and_grade(std::move(j), error, o.common);
}

struct VerifyCzOpts {
  int k = 1;
  double eta = 0.0;
  bool eta_given = false;
  int p = 0;
  int q = 0;
  int max_p = 32;
  TimingSpec timing;
  VerifyCommonOpts common;
};

int run_verify_cz(const VerifyCzOpts& o) {
  check_timing(o.timing);
  int p = o.p;
  int q = o.q;
  if (o.eta_given) {
    const auto match = iongate::match_commensurate(o.eta, o.k, o.max_p);
    if (!match)
      throw iongate::NoSolutionError(
          "no commensurate (p, q) with p <= " + std::to_string(o.max_p) +
          " matches this Lamb-Dicke parameter");
    p = match->first;
    q = match->second;
  } else if (p < 1 || q < 1) {
    throw std::invalid_argument("need either --eta or both --p and --q");
  }
  const double eta = iongate::solve_cz_eta(o.k, p, q);
  const TrapConfig cfg = TrapConfig::make(eta, o.k);
  const double theta2 = iongate::cz_duration(cfg, p);
  const iongate::UnitaryMatrix u = iongate::sideband_unitary(cfg, 0.0, theta2);
  const iongate::RestrictionReport rep = iongate::restrict_to_gamma(u, cfg);
  const double error = iongate::gate_distance(rep.block, iongate::ideal_cz());

  constexpr double pi = std::numbers::pi;
  json j;
  j["gate"] = "cz";
  j["k"] = o.k;
  j["eta"] = eta;
  j["p"] = p;
  j["q"] = q;
  j["theta2_over_pi"] = theta2 / pi;
  j["cz_error"] = error;
  j["leakage"] = rep.leakage;
  j["matrix"] = matrix_json(rep.block);
  if (o.timing.given) {
    const double t2 = sideband_seconds(theta2, eta, o.timing);
    j["timing"] = {{"rabi_khz", o.timing.rabi_khz},
                   {"sideband_khz", o.timing.sideband_khz},
                   {"t2_s", t2},
                   {"shortest_s", t2},
                   {"total_s", t2}};
  }
  return report_and_grade(std::move(j), error, o.common);
}

struct VerifyCnOpts {
  int k = 1;
  double eta = 0.0;
  bool eta_given = false;
  int p = 0;
  int q = 0;
  int p_prime = 0;
  int q_prime = 0;
  int max_p = 32;
  std::string branch = "pi-half";
  TimingSpec timing;
  VerifyCommonOpts common;
};

int run_verify_cn(const VerifyCnOpts& o) {
  check_timing(o.timing);
  int p = o.p;
  int q = o.q;
  if (o.eta_given) {
    const auto match = iongate::match_commensurate(o.eta, o.k, o.max_p);
    if (!match)
      throw iongate::NoSolutionError(
          "no commensurate (p, q) with p <= " + std::to_string(o.max_p) +
          " matches this Lamb-Dicke parameter");
    p = match->first;
    q = match->second;
  } else if (p < 1 || q < 1) {
    throw std::invalid_argument("need either --eta or both --p and --q");
  }
  const iongate::CarrierPhase branch = o.branch == "pi-half"
                                           ? iongate::CarrierPhase::pi_half
                                           : iongate::CarrierPhase::three_pi_half;
  const double eta = iongate::solve_cz_eta(o.k, p, q);
  const TrapConfig cfg = TrapConfig::make(eta, o.k);
  const double theta2 = iongate::cz_duration(cfg, p);
  const iongate::CnDurations d =
      iongate::solve_cn_durations(cfg, branch, o.p_prime, o.q_prime);

  constexpr double pi = std::numbers::pi;
  iongate::SolutionRecord rec;
  rec.k = o.k;
  rec.eta = eta;
  rec.p = p;
  rec.q = q;
  rec.p_prime = o.p_prime;
  rec.q_prime = o.q_prime;
  rec.theta2_over_pi = theta2 / pi;
  rec.theta1_over_pi = d.theta1 / pi;
  rec.theta3_over_pi = d.theta3 / pi;
  rec.phi1 = iongate::carrier_phase_value(branch);
  rec.phi3 = iongate::carrier_phase_value(branch);

  const iongate::UnitaryMatrix u = iongate::compose(iongate::cn_pulse_sequence(rec), cfg);
  const iongate::RestrictionReport rep = iongate::restrict_to_gamma(u, cfg);
  rec.cn_error = iongate::gate_distance(rep.block, iongate::ideal_cn());
  rec.leakage = rep.leakage;

  json j;
  j["gate"] = "cn";
  j["k"] = rec.k;
  j["eta"] = rec.eta;
  j["p"] = rec.p;
  j["q"] = rec.q;
  j["p_prime"] = rec.p_prime;
  j["q_prime"] = rec.q_prime;
  j["branch"] = o.branch;
  j["theta1_over_pi"] = rec.theta1_over_pi;
  j["theta2_over_pi"] = rec.theta2_over_pi;
  j["theta3_over_pi"] = rec.theta3_over_pi;
  j["phi1_over_pi"] = rec.phi1 / pi;
  j["phi3_over_pi"] = rec.phi3 / pi;
  j["cn_error"] = rec.cn_error;
  j["leakage"] = rec.leakage;
  j["matrix"] = matrix_json(rep.block);
  if (o.timing.given) {
    const double t1 = carrier_seconds(d.theta1, o.timing);
    const double t2 = sideband_seconds(theta2, eta, o.timing);
    const double t3 = carrier_seconds(d.theta3, o.timing);
    j["timing"] = {{"rabi_khz", o.timing.rabi_khz},
                   {"sideband_khz", o.timing.sideband_khz},
                   {"t1_s", t1},
                   {"t2_s", t2},
                   {"t3_s", t3},
                   {"shortest_s", std::min({t1, t2, t3})},
                   {"total_s", t1 + t2 + t3}};
  }
  return report_and_grade(std::move(j), rec.cn_error, o.common);
}

void add_common(CLI::App* cmd, VerifyCommonOpts& c) {
  cmd->add_option("--format", c.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--out", c.out, "write the report to a file instead of stdout");
}

void add_timing(CLI::App* cmd, TimingSpec& t) {
  auto* r = cmd->add_option("--rabi-khz", t.rabi_khz,
                            "resonant Rabi frequency, kHz (enables timing output)");
  auto* s = cmd->add_option("--sideband-khz", t.sideband_khz,
                            "first-sideband Rabi frequency eta*Omega, kHz");
  r->needs(s);
  s->needs(r);
  cmd->callback([&t, r] { t.given = r->count() > 0; });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"single trapped-ion gate simulator and pulse parameter solver"};
  app.require_subcommand(1);

  TableOpts table;
  CLI::App* tb = app.add_subcommand(
      "table", "enumerate exact controlled-NOT operating points as CSV");
  tb->add_option("--k", table.k, "sideband order")->required();
  tb->add_option("--max-p", table.max_p, "largest sideband winding number p");
  tb->add_option("--max-prime", table.max_prime,
                 "largest carrier winding numbers p', q'");
  tb->add_option("--format", table.format, "output format")
      ->check(CLI::IsMember({"csv", "json"}));
  tb->add_option("--out", table.out, "write the table to a file instead of stdout");

  SimulateOpts sim;
  CLI::App* sm = app.add_subcommand("simulate", "run a pulse program file");
  sm->add_option("program", sim.file, "pulse program JSON file")->required();
  sm->add_option("--leak-tol", sim.leak_tol, "tolerated guard band occupation");
  sm->add_option("--format", sim.format, "output format")
      ->check(CLI::IsMember({"json"}));
  sm->add_option("--out", sim.out, "write the report to a file instead of stdout");

  CLI::App* verify =
      app.add_subcommand("verify", "solve gate parameters and check the composed gate");
  verify->require_subcommand(1);

  VerifyHOpts vh;
  CLI::App* h = verify->add_subcommand("h", "Hadamard on one Fock block");
  h->add_option("--eta", vh.eta, "Lamb-Dicke parameter")->required();
  h->add_option("--k", vh.k, "sideband order")->required();
  h->add_option("--m", vh.m, "Fock block index (m < k)");
  h->add_option("--branch-r", vh.branch_r, "carrier duration branch");
  h->add_option("--branch-f", vh.branch_f, "sideband duration branch");
  h->add_option("--order", vh.order, "pulse order")
      ->check(CLI::IsMember({"carrier-first", "sideband-first"}));
  add_common(h, vh.common);

  VerifyCzOpts vcz;
  CLI::App* cz = verify->add_subcommand("cz", "controlled-Z from one sideband pulse");
  cz->add_option("--k", vcz.k, "sideband order")->required();
  auto* cz_eta = cz->add_option("--eta", vcz.eta,
                                "Lamb-Dicke parameter (snapped to a commensurate point)");
  auto* cz_p = cz->add_option("--p", vcz.p, "sideband winding number");
  auto* cz_q = cz->add_option("--q", vcz.q, "sideband winding number");
  cz_eta->excludes(cz_p)->excludes(cz_q);
  cz->add_option("--max-p", vcz.max_p, "snap search bound on p");
  add_timing(cz, vcz.timing);
  add_common(cz, vcz.common);

  VerifyCnOpts vcn;
  CLI::App* cn = verify->add_subcommand("cn", "controlled-NOT from three pulses");
  cn->add_option("--k", vcn.k, "sideband order")->required();
  auto* cn_eta = cn->add_option("--eta", vcn.eta,
                                "Lamb-Dicke parameter (snapped to a commensurate point)");
  auto* cn_p = cn->add_option("--p", vcn.p, "sideband winding number");
  auto* cn_q = cn->add_option("--q", vcn.q, "sideband winding number");
  cn_eta->excludes(cn_p)->excludes(cn_q);
  cn->add_option("--pprime", vcn.p_prime, "carrier winding number p'");
  cn->add_option("--qprime", vcn.q_prime, "carrier winding number q'");
  cn->add_option("--branch", vcn.branch, "carrier phase branch")
      ->check(CLI::IsMember({"pi-half", "three-pi-half"}));
  cn->add_option("--max-p", vcn.max_p, "snap search bound on p");
  add_timing(cn, vcn.timing);
  add_common(cn, vcn.common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitBadInput;
  }

  vcz.eta_given = cz_eta->count() > 0;
  vcn.eta_given = cn_eta->count() > 0;

  try {
    if (tb->parsed()) return run_table(table);
    if (sm->parsed()) return run_simulate(sim);
    if (h->parsed()) return run_verify_h(vh);
    if (cz->parsed()) return run_verify_cz(vcz);
    if (cn->parsed()) return run_verify_cn(vcn);
  } catch (const iongate::GuardBandError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitGuard;
  } catch (const iongate::NoSolutionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNoSolution;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
  return kExitBadInput;
}
