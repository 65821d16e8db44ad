#include "bpcg/bench/experiment.hpp"
#include "bpcg/core/errors.hpp"

#include "CLI11.hpp"

#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace {

using bpcg::bench::ExperimentSpec;

struct RunOptions {
  std::string name;
  std::string config;
  std::optional<std::string> out;
  std::optional<std::uint64_t> seed;
  std::optional<int> iters;
  std::optional<double> ksc;
  std::optional<double> lazy_j;
  std::optional<std::string> step;
  bool timing = false;
};

int list_experiments() {
  for (const ExperimentSpec& s : bpcg::bench::registry()) {
    std::cout << s.name << "\t" << s.description << "\n  solvers:";
    for (const auto& solver : s.solvers) std::cout << ' ' << solver;
    std::cout << "\n  figures:";
    for (auto f : s.figures) std::cout << ' ' << bpcg::bench::to_string(f);
    std::cout << '\n';
  }
  return 0;
}

int run(const RunOptions& opt) {
  ExperimentSpec spec = bpcg::bench::find_experiment(opt.name);
  if (!opt.config.empty()) bpcg::bench::apply_config(spec, bpcg::bench::parse_config_file(opt.config));
  std::map<std::string, std::string> flags;
  if (opt.out) flags["out"] = *opt.out;
  if (opt.seed) flags["seed"] = std::to_string(*opt.seed);
  if (opt.iters) flags["iterations"] = std::to_string(*opt.iters);
  if (opt.ksc) flags["ksc"] = bpcg::format_double(*opt.ksc);
  if (opt.lazy_j) flags["lazy_j"] = bpcg::format_double(*opt.lazy_j);
  if (opt.step) flags["step"] = *opt.step;
  if (opt.timing) flags["timing"] = "true";
  bpcg::bench::apply_config(spec, flags);
  const auto files = bpcg::bench::run_experiment(spec);
  for (const auto& p : files.csv) std::cout << p.string() << '\n';
  for (const auto& p : files.svg) std::cout << p.string() << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Conditional-gradient benchmark harness"};
  app.require_subcommand(1);

  auto* list_cmd = app.add_subcommand("list", "List the named experiments");

  RunOptions run_opt;
  auto* run_cmd = app.add_subcommand("run", "Run a named experiment");
  run_cmd->add_option("name", run_opt.name, "Experiment name")->required();
  run_cmd->add_option("--config", run_opt.config, "key = value configuration file");
  run_cmd->add_option("--out", run_opt.out, "Output directory");
  run_cmd->add_option("--seed", run_opt.seed, "Random seed");
  run_cmd->add_option("--iters", run_opt.iters, "Iteration budget");
  run_cmd->add_option("--ksc", run_opt.ksc, "Sparsity-control factor K_sc >= 1");
  run_cmd->add_option("--lazy-j", run_opt.lazy_j, "Lazy accuracy J >= 1");
  run_cmd->add_option("--step", run_opt.step, "Step rule: linesearch, shortstep or adaptive");
  run_cmd->add_flag("--timing", run_opt.timing, "Record elapsed_ns in the CSV files");

  std::vector<std::string> plot_files;
  std::string plot_out = "plot.svg";
  auto* plot_cmd = app.add_subcommand("plot", "Plot trace CSV files");
  plot_cmd->add_option("csv", plot_files, "Trace files")->required();
  plot_cmd->add_option("--out", plot_out, "Output SVG file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*list_cmd) return list_experiments();
    if (*run_cmd) return run(run_opt);
    if (*plot_cmd) {
      bpcg::bench::plot_trace_files({plot_files.begin(), plot_files.end()}, plot_out);
      std::cout << plot_out << '\n';
      return 0;
    }
  } catch (const bpcg::ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
