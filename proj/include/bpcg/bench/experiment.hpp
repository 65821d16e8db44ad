#ifndef BPCG_BENCH_EXPERIMENT_HPP
#define BPCG_BENCH_EXPERIMENT_HPP

#include "bpcg/core/trace.hpp"
#include "bpcg/herding/discrete_measure.hpp"
#include "bpcg/herding/kernel.hpp"
#include "bpcg/herding/measure.hpp"
#include "bpcg/solvers/config.hpp"

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace bpcg::bench {

enum class ProblemKind { Simplex, Birkhoff, LpBall, MatrixCompletion, Herding };

/// Figure families: objective against iterations, against wall time,
/// support size against objective, MMD against node count.
enum class Figure { Iterations, Time, Sparsity, Nodes };

struct ExperimentSpec {
  std::string name;
  std::string description;
  ProblemKind problem = ProblemKind::Simplex;

  /// Dimension n of the finite-dimensional problem.
  int n = 0;
  /// Exponent of the l_p ball.
  double p = 2.0;

  /// Matrix completion: ratings file (empty selects synthetic data).
  std::filesystem::path ratings;
  int top_m = 300;
  int rank = 3;
  double noise = 0.0;
  double observed_fraction = 0.3;

  /// Herding.
  KernelKind kernel = KernelKind::Matern32;
  MeasureKind measure = MeasureKind::UniformBox;
  int dimension = 2;
  /// Node budget of the SBQ and Monte Carlo baselines.
  std::size_t nodes = 100;

  std::vector<std::string> solvers;
  std::vector<Figure> figures;
  SolverConfig config;
  std::uint64_t seed = 0;
  std::filesystem::path output_dir = "results";
  /// Fill the elapsed_ns CSV column (makes reruns differ byte-wise).
  bool timing = false;
};

/// All named experiments, in listing order.
const std::vector<ExperimentSpec>& registry();

/// Throws ConfigError for an unknown name.
ExperimentSpec find_experiment(const std::string& name);

/// Solver names accepted for a problem kind.
std::vector<std::string> known_solvers(ProblemKind problem);

/// `key = value` lines; `#` starts a comment. Throws ParseError on a line
/// without '=' and on repeated keys.
std::map<std::string, std::string> parse_config(std::istream& in);
std::map<std::string, std::string> parse_config_file(const std::filesystem::path& path);

/// Applies configuration keys to a spec. Throws ConfigError on unknown keys
/// or invalid values. Recognised keys: iterations, tolerance, ksc, lazy_j,
/// step, seed, out, timing, n, p, rank, noise, observed_fraction, ratings,
/// top_m, dimension, nodes, solvers.
void apply_config(ExperimentSpec& spec, const std::map<std::string, std::string>& values);

/// Validates an experiment as a whole (solver names, sizes, solver config).
void validate(const ExperimentSpec& spec);

struct SolverRun {
  std::string solver;
  RunTrace trace;
  /// Quadrature rule of herding, SBQ and Monte Carlo runs.
  std::optional<DiscreteMeasure> rule;
  /// Largest incremental MMD drift (herding runs).
  double mmd_drift = 0.0;
};

struct ExperimentResult {
  ExperimentSpec spec;
  std::vector<SolverRun> runs;
  std::optional<double> f_star;
  /// Smoothness L and diameter D of the instance (progress checks).
  double smoothness = 0.0;
  double diameter = 0.0;
};

/// Runs every solver of the experiment in memory.
ExperimentResult execute_experiment(const ExperimentSpec& spec);

struct WrittenFiles {
  std::vector<std::filesystem::path> csv;
  std::vector<std::filesystem::path> svg;
};

/// Writes <out>/<name>_<solver>.csv for every run, <out>/<name>_<solver>_nodes.csv
/// for quadrature rules and one SVG per figure family. Throws
/// std::runtime_error when the directory cannot be created or written.
WrittenFiles write_experiment(const ExperimentResult& result);

/// execute_experiment followed by write_experiment.
WrittenFiles run_experiment(const ExperimentSpec& spec);

/// Objective against iteration for the given trace files.
void plot_trace_files(const std::vector<std::filesystem::path>& csv_files, const std::filesystem::path& svg_out);

std::string_view to_string(ProblemKind kind);
std::string_view to_string(Figure figure);

}  // namespace bpcg::bench

#endif
