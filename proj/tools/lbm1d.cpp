// Shock-tube driver: run the lattice solver, sample the exact solution,
// compare profiles, or print the closed-form equilibrium coefficients.
//
// Exit codes: 0 success, 1 usage or configuration error, 2 numerical
// failure, 3 comparison threshold exceeded.

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "lbm1d/lbm1d.hpp"

namespace {

using nlohmann::json;

std::vector<double> parse_number_list(const std::string& text, const char* what) {
  std::vector<double> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t next = text.find(',', pos);
    const std::string tok =
        text.substr(pos, next == std::string::npos ? next : next - pos);
    try {
      std::size_t used = 0;
      out.push_back(std::stod(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw std::invalid_argument(std::string(what) + ": bad number '" + tok + "' in '" +
                                  text + "'");
    }
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  return out;
}

lbm1d::MacroState parse_state(const std::string& text, const char* what) {
  const std::vector<double> v = parse_number_list(text, what);
  if (v.size() != 3)
    throw std::invalid_argument(std::string(what) + ": expected \"rho,u,e\", got '" + text +
                                "'");
  return lbm1d::MacroState(v[0], v[1], v[2]);
}

// Case selection shared by run, exact and compare.  Flags win over the JSON
// config file, which wins over the preset (or built-in) defaults.
struct CaseOptions {
  std::string case_name;
  std::string config_path;
  std::optional<double> gamma, tau, theta, zeta2, dt_factor, t_end;
  std::optional<int> cells;
  std::optional<std::string> left, right, snapshot_times;
  bool strict_zeta2 = false;

  void add_flags(CLI::App* cmd) {
    cmd->add_option("--case", case_name, "Preset case: sod or lax");
    cmd->add_option("--config", config_path, "JSON file with the same field names as the flags");
    cmd->add_option("--gamma", gamma, "Adiabatic exponent, in (1, 3]");
    cmd->add_option("--tau", tau, "Collision time");
    cmd->add_option("--theta", theta, "Implicitness weight in [0, 1]");
    cmd->add_option("--zeta2", zeta2, "Upper rest-energy level");
    cmd->add_option("--cells", cells, "Interior cell count");
    cmd->add_option("--dt-factor", dt_factor, "Time step as a fraction of tau");
    cmd->add_option("--t-end", t_end, "Final time");
    cmd->add_option("--left", left, "Left state \"rho,u,e\"");
    cmd->add_option("--right", right, "Right state \"rho,u,e\"");
    cmd->add_option("--snapshot-times", snapshot_times,
                    "Comma-separated output times within [0, t_end]");
    cmd->add_flag("--strict-zeta2", strict_zeta2,
                  "Abort instead of warning when zeta exceeds zeta2");
  }

  void merge_config_file() {
    if (config_path.empty()) return;
    std::ifstream is(config_path);
    if (!is) throw std::invalid_argument("config: cannot open '" + config_path + "'");
    json j;
    try {
      is >> j;
    } catch (const json::parse_error& e) {
      throw std::invalid_argument("config: " + std::string(e.what()));
    }
    const auto str_field = [&](const char* key) -> std::optional<std::string> {
      if (!j.contains(key)) return std::nullopt;
      const json& v = j.at(key);
      if (v.is_string()) return v.get<std::string>();
      if (v.is_array()) {
        std::string joined;
        for (const json& item : v) {
          if (!joined.empty()) joined += ",";
          joined += json(item).dump();
        }
        return joined;
      }
      throw std::invalid_argument(std::string("config: field '") + key +
                                  "' must be a string or array");
    };
    const auto num_field = [&](const char* key, std::optional<double>& slot) {
      if (slot) return;
      if (!j.contains(key)) return;
      if (!j.at(key).is_number())
        throw std::invalid_argument(std::string("config: field '") + key +
                                    "' must be a number");
      slot = j.at(key).get<double>();
    };

    if (case_name.empty() && j.contains("case")) case_name = j.at("case").get<std::string>();
    num_field("gamma", gamma);
    num_field("tau", tau);
    num_field("theta", theta);
    num_field("zeta2", zeta2);
    num_field("dt_factor", dt_factor);
    num_field("t_end", t_end);
    if (!cells && j.contains("cells")) cells = j.at("cells").get<int>();
    if (!left) left = str_field("left");
    if (!right) right = str_field("right");
    if (!snapshot_times) snapshot_times = str_field("snapshot_times");
    if (!strict_zeta2 && j.contains("strict_zeta2")) strict_zeta2 = j.at("strict_zeta2").get<bool>();
  }

  lbm1d::CaseSpec build() {
    merge_config_file();
    lbm1d::CaseSpec spec = [&] {
      if (!case_name.empty()) return lbm1d::preset(case_name);
      if (!left || !right)
        throw std::invalid_argument(
            "need --case, or both --left and --right for a custom case");
      return lbm1d::CaseSpec{
          "custom", lbm1d::SimulationConfig{.left = parse_state(*left, "--left"),
                                            .right = parse_state(*right, "--right")}};
    }();
    lbm1d::SimulationConfig& cfg = spec.config;
    if (left) cfg.left = parse_state(*left, "--left");
    if (right) cfg.right = parse_state(*right, "--right");
    if (gamma) cfg.gas = lbm1d::GasModel(*gamma, cfg.gas.r_gas);
    if (tau) cfg.tau = *tau;
    if (theta) cfg.theta = *theta;
    if (zeta2) cfg.zeta2 = *zeta2;
    if (cells) cfg.cells = *cells;
    if (dt_factor) cfg.dt_factor = *dt_factor;
    if (t_end) cfg.t_end = *t_end;
    cfg.strict_zeta2 = strict_zeta2;
    cfg.validate();
    return spec;
  }

  std::vector<double> snapshot_list(const lbm1d::SimulationConfig& cfg) const {
    if (!snapshot_times) return {cfg.t_end};
    std::vector<double> times = parse_number_list(*snapshot_times, "--snapshot-times");
    std::sort(times.begin(), times.end());
    times.erase(std::unique(times.begin(), times.end()), times.end());
    return times;
  }
};

std::string snapshot_path(const std::string& base, double time, bool single) {
  if (single) return base;
  char suffix[48];
  std::snprintf(suffix, sizeof(suffix), "_t%g", time);
  const std::size_t dot = base.find_last_of('.');
  if (dot == std::string::npos || base.find('/', dot) != std::string::npos)
    return base + suffix;
  return base.substr(0, dot) + suffix + base.substr(dot);
}

lbm1d::Profile oracle_profile(const lbm1d::SimulationConfig& cfg, double time) {
  std::vector<double> x(static_cast<std::size_t>(cfg.cells));
  for (int c = 0; c < cfg.cells; ++c) x[static_cast<std::size_t>(c)] = cfg.cell_center(c);
  const std::vector<lbm1d::MacroState> states =
      lbm1d::exact_profile(cfg.left, cfg.right, cfg.gas, x, time);
  return lbm1d::make_profile(x, states, cfg.gas, time);
}

int cmd_run(CaseOptions& opts, const std::string& out_flag) {
  const lbm1d::CaseSpec spec = opts.build();
  const std::vector<double> times = opts.snapshot_list(spec.config);
  const std::vector<lbm1d::Snapshot> snaps = lbm1d::run(spec.config, times);
  const std::string base = out_flag.empty() ? spec.name + ".csv" : out_flag;
  for (const lbm1d::Snapshot& snap : snaps) {
    const std::string path = snapshot_path(base, snap.time, snaps.size() == 1);
    lbm1d::write_csv(lbm1d::make_profile(snap, spec.config.gas), path);
    std::printf("wrote %s (t = %g, %d cells, %lld steps)\n", path.c_str(), snap.time,
                spec.config.cells, snap.step);
  }
  return 0;
}

int cmd_exact(CaseOptions& opts, const std::string& out_flag) {
  const lbm1d::CaseSpec spec = opts.build();
  const std::vector<double> times = opts.snapshot_list(spec.config);
  const std::string base = out_flag.empty() ? spec.name + "_exact.csv" : out_flag;
  for (double t : times) {
    const std::string path = snapshot_path(base, t, times.size() == 1);
    lbm1d::write_csv(oracle_profile(spec.config, t), path);
    std::printf("wrote %s (t = %g, %d cells, exact)\n", path.c_str(), t, spec.config.cells);
  }
  return 0;
}

int cmd_compare(CaseOptions& opts, const std::string& a_path, const std::string& b_path,
                const std::string& norms_flag, double assert_l1,
                const std::string& report_path) {
  std::vector<std::string> norms;
  for (const std::string& tok : {std::string("l1"), std::string("l2"), std::string("linf")})
    if (norms_flag.find(tok) != std::string::npos) norms.push_back(tok);
  if (!norms_flag.empty() && norms.empty())
    throw std::invalid_argument("--norms: expected a subset of l1,l2,linf");
  if (norms.empty()) norms = {"l1", "l2", "linf"};

  const lbm1d::Profile a = lbm1d::read_csv(a_path);
  lbm1d::Profile b;
  if (b_path == "exact") {
    const lbm1d::CaseSpec spec = opts.build();
    if (static_cast<int>(a.size()) != spec.config.cells)
      throw std::runtime_error("compare: profile has " + std::to_string(a.size()) +
                               " rows but the case has " + std::to_string(spec.config.cells) +
                               " cells");
    b = oracle_profile(spec.config, spec.config.t_end);
  } else {
    b = lbm1d::read_csv(b_path);
  }

  const lbm1d::NormReport rep = lbm1d::compare_profiles(a, b);
  const auto pick = [](const lbm1d::ErrorNorms& n, const std::string& which) {
    if (which == "l1") return n.l1;
    if (which == "l2") return n.l2;
    return n.linf;
  };

  std::printf("%-10s", "variable");
  for (const std::string& n : norms) std::printf("%14s", n.c_str());
  std::printf("\n");
  const std::pair<const char*, const lbm1d::ErrorNorms*> rows[] = {
      {"rho", &rep.rho}, {"u", &rep.u}, {"p", &rep.p}, {"e", &rep.e}};
  for (const auto& [name, n] : rows) {
    std::printf("%-10s", name);
    for (const std::string& which : norms) std::printf("%14.6e", pick(*n, which));
    std::printf("\n");
  }

  if (!report_path.empty()) {
    json j;
    j["a"] = a_path;
    j["b"] = b_path;
    for (const auto& [name, n] : rows)
      j["norms"][name] = {{"l1", n->l1}, {"l2", n->l2}, {"linf", n->linf}};
    std::ofstream os(report_path);
    if (!os) throw std::runtime_error("compare: cannot open report '" + report_path + "'");
    os << j.dump(2) << "\n";
  }

  if (assert_l1 >= 0.0 && rep.rho.l1 > assert_l1) {
    std::fprintf(stderr, "density l1 = %.6e exceeds threshold %.6e\n", rep.rho.l1, assert_l1);
    return 3;
  }
  return 0;
}

int cmd_coeffs(const std::string& velocities) {
  lbm1d::RationalVec4 xi;
  std::size_t pos = 0;
  int count = 0;
  while (pos <= velocities.size() && count < 5) {
    const std::size_t next = velocities.find(',', pos);
    const std::string tok =
        velocities.substr(pos, next == std::string::npos ? next : next - pos);
    if (count == 4)
      throw std::invalid_argument("--velocities: expected exactly 4 values");
    xi[static_cast<std::size_t>(count++)] = lbm1d::parse_rational(tok);
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  if (count != 4) throw std::invalid_argument("--velocities: expected exactly 4 values");
  std::printf("%s", lbm1d::print_coefficients(xi).c_str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"1D shock-tube lattice Boltzmann solver with exact Riemann reference"};
  app.require_subcommand(1);

  CaseOptions run_opts, exact_opts, compare_opts;
  std::string run_out, exact_out;
  std::string cmp_a, cmp_b = "exact", cmp_norms, cmp_report;
  double cmp_assert_l1 = -1.0;
  std::string velocities = "1,-1,2,-2";

  CLI::App* run_cmd = app.add_subcommand("run", "Integrate a case and write CSV profiles");
  run_opts.add_flags(run_cmd);
  run_cmd->add_option("--out", run_out, "Output CSV path (default <case>.csv)");

  CLI::App* exact_cmd =
      app.add_subcommand("exact", "Sample the exact solution on the case grid");
  exact_opts.add_flags(exact_cmd);
  exact_cmd->add_option("--out", exact_out, "Output CSV path (default <case>_exact.csv)");

  CLI::App* cmp_cmd = app.add_subcommand("compare", "Error norms between two profiles");
  compare_opts.add_flags(cmp_cmd);
  cmp_cmd->add_option("--a", cmp_a, "First profile (CSV)")->required();
  cmp_cmd->add_option("--b", cmp_b, "Second profile: CSV path or 'exact'");
  cmp_cmd->add_option("--norms", cmp_norms, "Subset of l1,l2,linf (default all)");
  cmp_cmd->add_option("--assert-l1", cmp_assert_l1,
                      "Exit 3 if the density l1 error exceeds this");
  cmp_cmd->add_option("--report", cmp_report, "Write the norms as JSON to this path");

  CLI::App* coeffs_cmd =
      app.add_subcommand("coeffs", "Print closed-form equilibrium coefficients");
  coeffs_cmd->add_option("--velocities", velocities, "Four distinct speeds (default 1,-1,2,-2)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (run_cmd->parsed()) return cmd_run(run_opts, run_out);
    if (exact_cmd->parsed()) return cmd_exact(exact_opts, exact_out);
    if (cmp_cmd->parsed())
      return cmd_compare(compare_opts, cmp_a, cmp_b, cmp_norms, cmp_assert_l1, cmp_report);
    return cmd_coeffs(velocities);
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
}
