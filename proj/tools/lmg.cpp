// Command-line front end: parameter sweeps, finite-size scaling runs,
// critical-coefficient tables, and the cross-validation suites.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "lmg/log.hpp"
#include "lmg/runner.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitSolver = 3;
constexpr int kExitConfig = 4;

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot open output file: " + path);
  out << content;
}

std::vector<double> make_h_grid(double h, bool h_set, double h_min, double h_max, double h_step) {
  std::vector<double> grid;
  if (h_set) {
    grid.push_back(h);
    return grid;
  }
  if (h_step <= 0.0) throw std::invalid_argument("--h-step must be positive");
  for (int k = 0;; ++k) {
    const double v = h_min + k * h_step;
    if (v > h_max + 1e-12) break;
    grid.push_back(v);
  }
  if (grid.empty()) throw std::invalid_argument("empty h grid");
  return grid;
}

std::vector<long> parse_n_list(const std::string& csv) {
  std::vector<long> ns;
  std::stringstream ss(csv);
  std::string token;
  while (std::getline(ss, token, ',')) {
    if (!token.empty()) ns.push_back(lmg::parse_n_token(token));
  }
  return ns;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lmg - coherence and steered coherence of the LMG model"};
  app.set_help_flag("--help", "print help and exit");
  app.require_subcommand(1);

  double gamma = 0.5;
  double h = 1.0;
  bool h_set = false;
  double h_min = 0.0, h_max = 2.0, h_step = 0.05;
  std::string n_list = "2^12";
  std::string out_path;
  std::string report_path;
  std::string format = "csv";
  int jobs = 0;
  double tolerance = 0.0;

  auto add_common = [&](CLI::App* cmd, bool wants_h_grid) {
    cmd->set_help_flag("--help", "print help and exit");
    cmd->add_option("--gamma", gamma, "anisotropy in [0, 1]")->capture_default_str();
    if (wants_h_grid) {
      cmd->add_option("--h", h, "single field value")->each([&](const std::string&) { h_set = true; });
      cmd->add_option("--h-min", h_min, "grid start")->capture_default_str();
      cmd->add_option("--h-max", h_max, "grid end")->capture_default_str();
      cmd->add_option("--h-step", h_step, "grid step")->capture_default_str();
    }
    cmd->add_option("--n-list", n_list, "comma-separated sizes; powers like 2^12 allowed")
        ->capture_default_str();
    cmd->add_option("--out", out_path, "output file (default: stdout)");
    cmd->add_option("--format", format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--jobs", jobs, "worker threads (default: all cores)");
    cmd->add_option("--tolerance", tolerance, "override the per-suite tolerances");
    return cmd;
  };

  CLI::App* sweep = add_common(app.add_subcommand("sweep", "h sweep of all indicators at fixed N"), true);
  bool no_correlations = false;
  sweep->add_flag("--no-correlations", no_correlations, "skip the eof/discord columns");

  CLI::App* scaling = add_common(
      app.add_subcommand("scaling", "finite-size scaling run at fixed h with slope report"), true);
  std::size_t window = 4;
  scaling->add_option("--window", window, "fit window (last k points)")->capture_default_str();
  scaling->add_option("--report", report_path, "write the JSON slope report here");

  CLI::App* table1 = add_common(
      app.add_subcommand("table1", "critical-point coefficient table at h = 1"), false);
  table1->add_option("--report", report_path, "write the JSON table report here");

  CLI::App* validate =
      add_common(app.add_subcommand("validate", "run the oracle cross-validation suites"), false);
  bool inject_fault = false;
  int msc_theta = 361, msc_phi = 720;
  std::size_t random_states = 200;
  validate->add_flag("--inject-fault", inject_fault, "perturb one matrix element (negative control)");
  validate->add_option("--msc-grid-theta", msc_theta, "grid points in theta")->capture_default_str();
  validate->add_option("--msc-grid-phi", msc_phi, "grid points in phi")->capture_default_str();
  validate->add_option("--random-states", random_states, "random X states per oracle suite")
      ->capture_default_str();
  validate->add_option("--report", report_path, "write the JSON validation report here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (sweep->parsed()) {
      lmg::SweepConfig config;
      config.gamma = gamma;
      const std::vector<long> ns = parse_n_list(n_list);
      if (ns.size() != 1) throw std::invalid_argument("sweep expects exactly one N");
      config.n = ns.front();
      config.h_values = make_h_grid(h, h_set, h_min, h_max, h_step);
      config.jobs = jobs;
      config.with_correlations = !no_correlations;
      const std::string csv = lmg::sweep_csv(config);
      if (out_path.empty())
        std::cout << csv;
      else
        write_file(out_path, csv);
      return kExitOk;
    }

    if (scaling->parsed()) {
      lmg::ScalingConfig config;
      config.gamma = gamma;
      config.h = h_set ? h : 1.0;
      config.n_values = parse_n_list(n_list == "2^12" ? "2^8,2^9,2^10,2^11,2^12,2^13,2^14,2^15,2^16"
                                                      : n_list);
      config.window = window;
      config.jobs = jobs;
      if (tolerance > 0.0) config.slope_tol = tolerance;
      const lmg::ScalingOutput result = lmg::scaling_run(config);
      if (out_path.empty())
        std::cout << result.csv;
      else
        write_file(out_path, result.csv);
      if (!report_path.empty()) write_file(report_path, result.report.dump(2) + "\n");
      lmg::log::info(std::string("scaling slopes ") + (result.pass ? "match" : "DEVIATE"));
      return result.pass ? kExitOk : kExitValidation;
    }

    if (table1->parsed()) {
      lmg::Table1Config config;
      const std::vector<long> ns = parse_n_list(n_list);
      config.n = n_list == "2^12" ? (1L << 16) : ns.front();  // table default is the largest size
      if (tolerance > 0.0) config.tolerance = tolerance;
      config.jobs = jobs;
      const lmg::Table1Output result = lmg::table1_run(config);
      if (out_path.empty())
        std::cout << result.text;
      else
        write_file(out_path, result.text);
      if (!report_path.empty()) write_file(report_path, result.report.dump(2) + "\n");
      return result.pass ? kExitOk : kExitValidation;
    }

    if (validate->parsed()) {
      lmg::ValidateConfig config;
      config.tolerance = tolerance;
      config.msc_theta_points = msc_theta;
      config.msc_phi_points = msc_phi;
      config.random_states = random_states;
      config.inject_fault = inject_fault;
      config.jobs = jobs;
      const lmg::ValidateOutput result = lmg::validate_run(config);
      const std::string dump = result.report.dump(2) + "\n";
      if (out_path.empty())
        std::cout << dump;
      else
        write_file(out_path, dump);
      if (!report_path.empty()) write_file(report_path, dump);
      return result.pass ? kExitOk : kExitValidation;
    }
  } catch (const lmg::SolverError& e) {
    lmg::log::error(std::string("solver failure: ") + e.what());
    return kExitSolver;
  } catch (const std::invalid_argument& e) {
    lmg::log::error(std::string("configuration error: ") + e.what());
    return kExitConfig;
  } catch (const std::exception& e) {
    lmg::log::error(e.what());
    return kExitValidation;
  }
  return kExitOk;
}
