#include "bpcg/bench/experiment.hpp"

#include "bpcg/bench/instances.hpp"
#include "bpcg/bench/movielens.hpp"
#include "bpcg/bench/svg.hpp"
#include "bpcg/core/errors.hpp"
#include "bpcg/herding/herding.hpp"
#include "bpcg/solvers/solvers.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

namespace bpcg::bench {

namespace {

const std::vector<std::string> kVectorSolvers = {"fw", "afw", "pcg", "bpcg", "lazy-bpcg"};
const std::vector<std::string> kHerdingSolvers = {"linesearch", "equal-weight", "afw",         "pcg",
                                                  "bpcg",       "lazy-bpcg",    "sbq",         "monte-carlo"};

ExperimentSpec vector_spec(std::string name, std::string description, ProblemKind kind, int n, int iterations,
                           std::vector<Figure> figures) {
  ExperimentSpec s;
  s.name = std::move(name);
  s.description = std::move(description);
  s.problem = kind;
  s.n = n;
  s.solvers = kVectorSolvers;
  s.figures = std::move(figures);
  s.config.max_iterations = iterations;
  return s;
}

ExperimentSpec herding_spec(std::string name, std::string description, KernelKind kernel, MeasureKind measure) {
  ExperimentSpec s;
  s.name = std::move(name);
  s.description = std::move(description);
  s.problem = ProblemKind::Herding;
  s.kernel = kernel;
  s.measure = measure;
  s.dimension = 2;
  s.nodes = 100;
  s.solvers = kHerdingSolvers;
  s.figures = {Figure::Iterations, Figure::Time, Figure::Nodes};
  s.config.max_iterations = 200;
  return s;
}

std::vector<ExperimentSpec> build_registry() {
  std::vector<ExperimentSpec> r;
  r.push_back(vector_spec("simplex-200", "distance to an interior point over the probability simplex, n = 200",
                          ProblemKind::Simplex, 200, 1000, {Figure::Iterations, Figure::Time}));
  r.push_back(vector_spec("simplex-sparsity-500", "support size against primal gap on the simplex, n = 500",
                          ProblemKind::Simplex, 500, 1000, {Figure::Sparsity}));
  r.push_back(vector_spec("birkhoff-50", "distance to a mixture of permutations over the Birkhoff polytope, n = 50",
                          ProblemKind::Birkhoff, 50, 1000, {Figure::Iterations, Figure::Time}));
  r.push_back(vector_spec("birkhoff-sparsity-50", "support size against primal gap on the Birkhoff polytope, n = 50",
                          ProblemKind::Birkhoff, 50, 1000, {Figure::Sparsity}));
  {
    auto s = vector_spec("matrix-completion", "synthetic rank-3 matrix completion over the spectrahedron, n = 40",
                         ProblemKind::MatrixCompletion, 40, 500, {Figure::Iterations, Figure::Sparsity});
    s.rank = 3;
    r.push_back(std::move(s));
  }
  {
    auto s = vector_spec("lp-ball-5", "distance to an interior point over the l_5 unit ball, n = 1000",
                         ProblemKind::LpBall, 1000, 300, {Figure::Iterations, Figure::Sparsity});
    s.p = 5.0;
    r.push_back(std::move(s));
  }
  r.push_back(herding_spec("matern32-d2", "kernel herding, Matern nu = 3/2, uniform measure on [-1,1]^2",
                           KernelKind::Matern32, MeasureKind::UniformBox));
  r.push_back(herding_spec("matern52-d2", "kernel herding, Matern nu = 5/2, uniform measure on [-1,1]^2",
                           KernelKind::Matern52, MeasureKind::UniformBox));
  r.push_back(herding_spec("gaussian-d2", "kernel herding, Gaussian kernel, truncated Gaussian measure on [-1,1]^2",
                           KernelKind::Gaussian, MeasureKind::TruncatedGaussian));
  r.push_back(herding_spec("mixture-d2", "kernel herding, Gaussian kernel, Gaussian mixture on [-1,1]^2",
                           KernelKind::Gaussian, MeasureKind::GaussianMixture));
  return r;
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

template <typename T>
T parse_value(const std::string& key, const std::string& text) {
  T value{};
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty())
    throw ConfigError("invalid value '" + text + "' for " + key);
  return value;
}

bool parse_bool(const std::string& key, const std::string& text) {
  if (text == "true" || text == "1" || text == "yes") return true;
  if (text == "false" || text == "0" || text == "no") return false;
  throw ConfigError("invalid value '" + text + "' for " + key);
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

Measure make_measure(MeasureKind kind, int d) {
  switch (kind) {
    case MeasureKind::UniformBox: return Measure::uniform_box(d);
    case MeasureKind::TruncatedGaussian: return Measure::truncated_gaussian(d);
    case MeasureKind::GaussianMixture: return Measure::default_mixture(d);
  }
  throw ConfigError("unknown measure");
}

VectorInstance make_instance(const ExperimentSpec& spec) {
  switch (spec.problem) {
    case ProblemKind::Simplex: return make_simplex_instance(spec.n, spec.seed);
    case ProblemKind::Birkhoff: return make_birkhoff_instance(spec.n, spec.seed);
    case ProblemKind::LpBall: return make_lp_ball_instance(spec.n, spec.p, spec.seed);
    case ProblemKind::MatrixCompletion: {
      if (!spec.ratings.empty()) {
        RatingsData data = ingest_movielens(spec.ratings, spec.top_m);
        return make_matrix_completion_instance(data.n, std::move(data.entries), std::nullopt);
      }
      LowRankData data = synthetic_lowrank(spec.n, spec.rank, spec.noise, spec.seed, spec.observed_fraction);
      const std::optional<double> f_star = spec.noise == 0.0 ? std::optional<double>(0.0) : std::nullopt;
      return make_matrix_completion_instance(data.n, std::move(data.entries), f_star);
    }
    case ProblemKind::Herding: break;
  }
  throw ConfigError("not a finite-dimensional problem");
}

void execute_vector(const ExperimentSpec& spec, ExperimentResult& result) {
  const VectorInstance inst = make_instance(spec);
  result.f_star = inst.f_star;
  result.smoothness = inst.objective->smoothness().value_or(0.0);
  result.diameter = inst.lmo->diameter();
  const Objective& f = *inst.objective;
  const LinearMinimizationOracle& lmo = *inst.lmo;
  for (const std::string& name : spec.solvers) {
    SolverResult r = [&] {
      if (name == "fw") return run_vanilla_fw(f, lmo, inst.start, spec.config);
      if (name == "afw") return run_afw(f, lmo, inst.start, spec.config);
      if (name == "pcg") return run_pcg(f, lmo, inst.start, spec.config);
      if (name == "bpcg") return run_bpcg(f, lmo, inst.start, spec.config);
      return run_lazy_bpcg(f, lmo, inst.start, spec.config);
    }();
    result.runs.push_back({name, std::move(r.trace), std::nullopt, 0.0});
  }
}

RunTrace prefix_trace(const std::vector<double>& mmd_by_nodes, bool equal_weights) {
  RunTrace trace;
  for (std::size_t i = 0; i < mmd_by_nodes.size(); ++i) {
    StepRecord rec;
    rec.kind = StepKind::FWStep;
    rec.lambda = equal_weights ? 1.0 / static_cast<double>(i + 1) : 0.0;
    rec.primal = mmd_by_nodes[i];
    rec.support_size = i + 1;
    trace.push(rec, 0);
  }
  return trace;
}

void execute_herding(const ExperimentSpec& spec, ExperimentResult& result) {
  const EmbeddingCache cache(Kernel(spec.kernel), make_measure(spec.measure, spec.dimension));
  result.f_star = 0.0;
  result.smoothness = 2.0;
  result.diameter = std::sqrt(2.0);
  const Eigen::VectorXd x0 = Eigen::VectorXd::Zero(spec.dimension);
  for (const std::string& name : spec.solvers) {
    if (name == "sbq") {
      SbqResult r = run_sbq(cache, spec.nodes);
      result.runs.push_back({name, prefix_trace(r.mmd_by_nodes, false), std::move(r.measure), 0.0});
      continue;
    }
    if (name == "monte-carlo") {
      DiscreteMeasure xi = run_monte_carlo(cache.measure(), spec.nodes, spec.seed);
      result.runs.push_back({name, prefix_trace(equal_weight_prefix_mmd(cache, xi.nodes), true), std::move(xi), 0.0});
      continue;
    }
    HerdingResult r = [&] {
      if (name == "linesearch") return run_vanilla_herding(cache, x0, VanillaRule::LineSearch, spec.config);
      if (name == "equal-weight") return run_vanilla_herding(cache, x0, VanillaRule::EqualWeight, spec.config);
      if (name == "afw") return run_afw_herding(cache, x0, spec.config);
      if (name == "pcg") return run_pcg_herding(cache, x0, spec.config);
      if (name == "bpcg") return run_bpcg_herding(cache, x0, spec.config);
      return run_lazy_bpcg_herding(cache, x0, spec.config);
    }();
    result.runs.push_back({name, std::move(r.trace), std::move(r.measure), r.max_mmd_drift});
  }
}

std::filesystem::path csv_path(const ExperimentSpec& spec, const std::string& solver, const char* suffix = "") {
  return spec.output_dir / (spec.name + "_" + solver + suffix + ".csv");
}

void write_file(const std::filesystem::path& path, const std::function<void(std::ostream&)>& body) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  body(out);
  out.flush();
  if (!out) throw std::runtime_error("failed writing " + path.string());
}

// Objective values shifted by f* when it is known; MMD for herding.
double plotted_value(const ExperimentResult& result, double primal) {
  if (result.spec.problem == ProblemKind::Herding) return std::sqrt(std::max(primal, 0.0));
  return result.f_star ? primal - *result.f_star : primal;
}

std::string value_label(const ExperimentResult& result) {
  if (result.spec.problem == ProblemKind::Herding) return "MMD";
  return result.f_star ? "primal gap" : "primal value";
}

bool is_prefix_run(const std::string& solver) { return solver == "sbq" || solver == "monte-carlo"; }

Plot make_plot(const ExperimentResult& result, Figure figure) {
  Plot plot;
  plot.title = result.spec.name + ": " + std::string(to_string(figure));
  plot.y_label = value_label(result);
  const bool herding = result.spec.problem == ProblemKind::Herding;
  for (const SolverRun& run : result.runs) {
    if (figure != Figure::Nodes && is_prefix_run(run.solver)) continue;
    PlotSeries primal{run.solver, {}, {}, false};
    PlotSeries gap{run.solver + " FW gap", {}, {}, true};
    const auto& recs = run.trace.records();
    for (std::size_t i = 0; i < recs.size(); ++i) {
      double x = 0.0;
      switch (figure) {
        case Figure::Iterations: x = static_cast<double>(i + 1); break;
        case Figure::Time: x = static_cast<double>(run.trace.wall_times()[i]) * 1e-9; break;
        case Figure::Sparsity:
        case Figure::Nodes: x = static_cast<double>(recs[i].support_size); break;
      }
      primal.x.push_back(x);
      primal.y.push_back(plotted_value(result, recs[i].primal));
      if (recs[i].fw_gap && !herding && figure != Figure::Sparsity) {
        gap.x.push_back(x);
        gap.y.push_back(*recs[i].fw_gap);
      }
    }
    plot.series.push_back(std::move(primal));
    if (!gap.x.empty()) plot.series.push_back(std::move(gap));
  }
  switch (figure) {
    case Figure::Iterations:
      plot.x_label = "iteration";
      plot.log_x = true;
      break;
    case Figure::Time: plot.x_label = "wall time [s]"; break;
    case Figure::Sparsity: plot.x_label = "support size"; break;
    case Figure::Nodes: {
      plot.x_label = "number of nodes";
      plot.log_x = true;
      const std::size_t n_max = std::max<std::size_t>(result.spec.nodes, 2);
      // Guide line anchored at the first Monte Carlo / SBQ value when present.
      double anchor = 1.0;
      for (const SolverRun& run : result.runs)
        if (is_prefix_run(run.solver) && !run.trace.empty()) {
          anchor = plotted_value(result, run.trace.records().front().primal);
          break;
        }
      PlotSeries guide;
      guide.dashed = true;
      std::function<double(double)> rate;
      switch (result.spec.kernel) {
        case KernelKind::Matern32:
          guide.label = "n^-5/4";
          rate = [](double n) { return std::pow(n, -1.25); };
          break;
        case KernelKind::Matern52:
          guide.label = "n^-7/4";
          rate = [](double n) { return std::pow(n, -1.75); };
          break;
        case KernelKind::Gaussian:
          guide.label = "exp(-sqrt n)";
          rate = [](double n) { return std::exp(-std::sqrt(n)); };
          break;
      }
      for (std::size_t n = 1; n <= n_max; ++n) {
        guide.x.push_back(static_cast<double>(n));
        guide.y.push_back(anchor * rate(static_cast<double>(n)) / rate(1.0));
      }
      plot.series.push_back(std::move(guide));
      break;
    }
  }
  return plot;
}

}  // namespace

std::string_view to_string(ProblemKind kind) {
  switch (kind) {
    case ProblemKind::Simplex: return "simplex";
    case ProblemKind::Birkhoff: return "birkhoff";
    case ProblemKind::LpBall: return "lp-ball";
    case ProblemKind::MatrixCompletion: return "matrix-completion";
    case ProblemKind::Herding: return "herding";
  }
  return "?";
}

std::string_view to_string(Figure figure) {
  switch (figure) {
    case Figure::Iterations: return "iterations";
    case Figure::Time: return "time";
    case Figure::Sparsity: return "sparsity";
    case Figure::Nodes: return "nodes";
  }
  return "?";
}

const std::vector<ExperimentSpec>& registry() {
  static const std::vector<ExperimentSpec> r = build_registry();
  return r;
}

ExperimentSpec find_experiment(const std::string& name) {
  for (const ExperimentSpec& s : registry())
    if (s.name == name) return s;
  throw ConfigError("unknown experiment '" + name + "' (see `bench list`)");
}

std::vector<std::string> known_solvers(ProblemKind problem) {
  return problem == ProblemKind::Herding ? kHerdingSolvers : kVectorSolvers;
}

std::map<std::string, std::string> parse_config(std::istream& in) {
  std::map<std::string, std::string> values;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (trim(line).empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError("expected 'key = value'", line_no);
    const std::string key = trim(std::string_view(line).substr(0, eq));
    const std::string value = trim(std::string_view(line).substr(eq + 1));
    if (key.empty()) throw ParseError("empty key", line_no);
    if (!values.emplace(key, value).second) throw ParseError("repeated key '" + key + "'", line_no);
  }
  return values;
}

std::map<std::string, std::string> parse_config_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path.string());
  return parse_config(in);
}

void apply_config(ExperimentSpec& spec, const std::map<std::string, std::string>& values) {
  for (const auto& [key, value] : values) {
    if (key == "iterations") spec.config.max_iterations = parse_value<int>(key, value);
    else if (key == "tolerance") spec.config.dual_gap_tolerance = parse_value<double>(key, value);
    else if (key == "ksc") spec.config.k_sc = parse_value<double>(key, value);
    else if (key == "lazy_j") spec.config.lazy_accuracy = parse_value<double>(key, value);
    else if (key == "step") spec.config.step_size = step_size_rule_from_string(value);
    else if (key == "seed") spec.seed = spec.config.seed = parse_value<std::uint64_t>(key, value);
    else if (key == "out") spec.output_dir = value;
    else if (key == "timing") spec.timing = parse_bool(key, value);
    else if (key == "n") spec.n = parse_value<int>(key, value);
    else if (key == "p") spec.p = parse_value<double>(key, value);
    else if (key == "rank") spec.rank = parse_value<int>(key, value);
    else if (key == "noise") spec.noise = parse_value<double>(key, value);
    else if (key == "observed_fraction") spec.observed_fraction = parse_value<double>(key, value);
    else if (key == "ratings") spec.ratings = value;
    else if (key == "top_m") spec.top_m = parse_value<int>(key, value);
    else if (key == "dimension") spec.dimension = parse_value<int>(key, value);
    else if (key == "nodes") spec.nodes = parse_value<std::size_t>(key, value);
    else if (key == "solvers") spec.solvers = split_list(value);
    else throw ConfigError("unknown configuration key '" + key + "'");
  }
}

void validate(const ExperimentSpec& spec) {
  spec.config.validate();
  if (spec.solvers.empty()) throw ConfigError("no solvers selected");
  const auto known = known_solvers(spec.problem);
  std::set<std::string> seen;
  for (const std::string& s : spec.solvers) {
    if (std::find(known.begin(), known.end(), s) == known.end())
      throw ConfigError("solver '" + s + "' does not apply to " + std::string(to_string(spec.problem)));
    if (!seen.insert(s).second) throw ConfigError("solver '" + s + "' listed twice");
  }
  if (spec.problem == ProblemKind::Herding) {
    if (spec.dimension < 1 || spec.dimension > 3) throw ConfigError("herding dimension must be 1, 2 or 3");
    if (spec.nodes < 1) throw ConfigError("node budget must be positive");
  } else {
    if (spec.n < 1) throw ConfigError("problem size n must be positive");
    if (spec.problem == ProblemKind::LpBall && !(spec.p > 1.0 && std::isfinite(spec.p)))
      throw ConfigError("l_p ball needs 1 < p < infinity");
    if (spec.top_m < 1) throw ConfigError("top_m must be positive");
  }
}

ExperimentResult execute_experiment(const ExperimentSpec& spec) {
  validate(spec);
  ExperimentResult result;
  result.spec = spec;
  if (spec.problem == ProblemKind::Herding)
    execute_herding(spec, result);
  else
    execute_vector(spec, result);
  return result;
}

WrittenFiles write_experiment(const ExperimentResult& result) {
  const ExperimentSpec& spec = result.spec;
  std::filesystem::create_directories(spec.output_dir);
  WrittenFiles files;
  for (const SolverRun& run : result.runs) {
    const auto path = csv_path(spec, run.solver);
    write_file(path, [&](std::ostream& out) { write_trace_csv(out, run.trace, spec.timing); });
    files.csv.push_back(path);
    if (run.rule) {
      const auto nodes = csv_path(spec, run.solver, "_nodes");
      write_file(nodes, [&](std::ostream& out) { write_quadrature_csv(out, *run.rule); });
      files.csv.push_back(nodes);
    }
  }
  for (Figure figure : spec.figures) {
    const auto path = spec.output_dir / (spec.name + "_" + std::string(to_string(figure)) + ".svg");
    write_file(path, [&](std::ostream& out) { write_svg(out, make_plot(result, figure)); });
    files.svg.push_back(path);
  }
  return files;
}

WrittenFiles run_experiment(const ExperimentSpec& spec) { return write_experiment(execute_experiment(spec)); }

void plot_trace_files(const std::vector<std::filesystem::path>& csv_files, const std::filesystem::path& svg_out) {
  if (csv_files.empty()) throw ConfigError("no trace files given");
  Plot plot;
  plot.title = "objective against iteration";
  plot.x_label = "iteration";
  plot.y_label = "primal";
  plot.log_x = true;
  for (const auto& path : csv_files) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open " + path.string());
    const auto rows = read_trace_csv(in);
    PlotSeries s{path.stem().string(), {}, {}, false};
    for (const TraceCsvRow& row : rows) {
      s.x.push_back(static_cast<double>(row.iteration));
      s.y.push_back(row.primal);
    }
    plot.series.push_back(std::move(s));
  }
  write_file(svg_out, [&](std::ostream& out) { write_svg(out, plot); });
}

}  // namespace bpcg::bench
