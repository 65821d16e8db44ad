#include "doctest.h"

#include "bpcg/bench/experiment.hpp"
#include "bpcg/bench/instances.hpp"
#include "bpcg/bench/movielens.hpp"
#include "bpcg/bench/svg.hpp"
#include "bpcg/core/errors.hpp"
#include "bpcg/solvers/solvers.hpp"

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

using namespace bpcg;
using namespace bpcg::bench;

namespace {

const std::filesystem::path kFixtures = BPCG_FIXTURE_DIR;

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("MovieLens ingestion") {
  const RatingsData small = ingest_movielens(kFixtures / "ratings_small.csv");
  CHECK(small.entries.size() == 3);
  CHECK(small.n == 2);
  CHECK(small.user_ids == std::vector<long long>{1, 7});
  CHECK(small.movie_ids == std::vector<long long>{31, 1029});

  const RatingsData dup = ingest_movielens(kFixtures / "ratings_duplicates.csv");
  REQUIRE(dup.entries.size() == 2);
  bool found = false;
  for (const auto& e : dup.entries)
    if (dup.user_ids[e.row] == 1 && dup.movie_ids[e.col] == 31) {
      CHECK(e.target == 4.5);
      found = true;
    }
  CHECK(found);

  try {
    ingest_movielens(kFixtures / "ratings_bad_row.csv");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
  std::istringstream bad_header("user,movie,rating,timestamp\n1,2,3,4\n");
  CHECK_THROWS_AS(ingest_movielens(bad_header), ParseError);
  std::istringstream short_row("userId,movieId,rating,timestamp\n1,2,3\n");
  CHECK_THROWS_AS(ingest_movielens(short_row), ParseError);

  // Re-export round trip.
  std::ostringstream out;
  write_movielens(out, small);
  std::istringstream back(out.str());
  const RatingsData again = ingest_movielens(back);
  REQUIRE(again.entries.size() == small.entries.size());
  for (std::size_t i = 0; i < again.entries.size(); ++i) {
    CHECK(again.entries[i].row == small.entries[i].row);
    CHECK(again.entries[i].col == small.entries[i].col);
    CHECK(again.entries[i].target == small.entries[i].target);
  }
}

TEST_CASE("MovieLens top-m truncation") {
  std::ostringstream csv;
  csv << kMovieLensHeader << '\n';
  for (int u = 1; u <= 5; ++u)
    for (int m = 1; m <= u; ++m) csv << u << ',' << m << ",3.0,0\n";
  std::istringstream in(csv.str());
  const RatingsData d = ingest_movielens(in, 2);
  CHECK(d.user_ids == std::vector<long long>{4, 5});
  CHECK(d.movie_ids == std::vector<long long>{1, 2});
  CHECK(d.entries.size() == 4);
}

TEST_CASE("synthetic low-rank data") {
  const LowRankData a = synthetic_lowrank(20, 2, 0.01, 5);
  const LowRankData b = synthetic_lowrank(20, 2, 0.01, 5);
  CHECK(std::abs(a.ground_truth.trace() - 1.0) <= 1e-12);
  REQUIRE(a.entries.size() == b.entries.size());
  for (std::size_t i = 0; i < a.entries.size(); ++i) {
    CHECK(a.entries[i].row == b.entries[i].row);
    CHECK(a.entries[i].col == b.entries[i].col);
    CHECK(a.entries[i].target == b.entries[i].target);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a.ground_truth);
  CHECK(es.eigenvalues().minCoeff() >= -1e-12);
  const double frac = static_cast<double>(a.entries.size()) / 400.0;
  CHECK(frac > 0.15);
  CHECK(frac < 0.45);

  // Exact rank-one data with every entry observed is recovered.
  const LowRankData full = synthetic_lowrank(8, 1, 0.0, 3, 1.0);
  CHECK(full.entries.size() == 64);
  const VectorInstance inst = make_matrix_completion_instance(full.n, full.entries, 0.0);
  SolverConfig cfg;
  cfg.max_iterations = 2000;
  cfg.dual_gap_tolerance = 1e-9;
  const auto r = run_bpcg(*inst.objective, *inst.lmo, inst.start, cfg);
  CHECK(r.trace.records().back().primal <= 1e-6);
}

TEST_CASE("instances are feasible by construction") {
  const VectorInstance s = make_simplex_instance(30, 1);
  const auto& c = static_cast<const QuadraticDistance&>(*s.objective).center();
  CHECK(c.minCoeff() > 0.0);
  CHECK(c.sum() == doctest::Approx(1.0).epsilon(1e-14));
  const VectorInstance b = make_birkhoff_instance(6, 2);
  const auto& x = static_cast<const QuadraticDistance&>(*b.objective).center();
  const Eigen::Map<const Eigen::MatrixXd> m(x.data(), 6, 6);
  for (int i = 0; i < 6; ++i) {
    CHECK(m.row(i).sum() == doctest::Approx(1.0));
    CHECK(m.col(i).sum() == doctest::Approx(1.0));
  }
  const VectorInstance l = make_lp_ball_instance(50, 5.0, 3);
  const auto& y = static_cast<const QuadraticDistance&>(*l.objective).center();
  CHECK(y.array().abs().pow(5.0).sum() == doctest::Approx(std::pow(0.9, 5.0)));
}

TEST_CASE("config parsing") {
  const auto values = parse_config_file(kFixtures / "example.cfg");
  CHECK(values.at("iterations") == "50");
  CHECK(values.at("step") == "shortstep");
  ExperimentSpec spec = find_experiment("simplex-200");
  apply_config(spec, values);
  CHECK(spec.config.max_iterations == 50);
  CHECK(spec.config.k_sc == 2.0);
  CHECK(spec.config.step_size == StepSizeRule::ShortStep);
  CHECK(spec.solvers == std::vector<std::string>{"bpcg", "lazy-bpcg"});
  // Flags applied afterwards win.
  apply_config(spec, {{"iterations", "7"}});
  CHECK(spec.config.max_iterations == 7);

  std::istringstream no_eq("iterations 5\n");
  CHECK_THROWS_AS(parse_config(no_eq), ParseError);
  std::istringstream repeated("a = 1\na = 2\n");
  CHECK_THROWS_AS(parse_config(repeated), ParseError);
  CHECK_THROWS_AS(apply_config(spec, {{"bogus", "1"}}), ConfigError);
  CHECK_THROWS_AS(apply_config(spec, {{"iterations", "x"}}), ConfigError);
  CHECK_THROWS_AS(apply_config(spec, {{"step", "newton"}}), ConfigError);
  spec.solvers = {"sbq"};
  CHECK_THROWS_AS(validate(spec), ConfigError);
}

TEST_CASE("registry") {
  CHECK_THROWS_AS(find_experiment("nope"), ConfigError);
  std::set<std::string> names;
  bool sparsity = false, nodes = false, time = false;
  for (const auto& s : registry()) {
    CHECK(names.insert(s.name).second);
    CHECK_NOTHROW(validate(s));
    for (Figure f : s.figures) {
      sparsity |= f == Figure::Sparsity;
      nodes |= f == Figure::Nodes;
      time |= f == Figure::Time;
    }
  }
  CHECK(sparsity);
  CHECK(nodes);
  CHECK(time);
  for (const char* n : {"simplex-200", "simplex-sparsity-500", "birkhoff-50", "birkhoff-sparsity-50",
                        "matrix-completion", "lp-ball-5", "matern32-d2", "matern52-d2", "gaussian-d2", "mixture-d2"})
    CHECK(names.count(n) == 1);
}

TEST_CASE("run_experiment writes CSV and SVG files deterministically") {
  const auto dir = std::filesystem::temp_directory_path() / "bpcg_bench_test";
  std::filesystem::remove_all(dir);
  ExperimentSpec spec = find_experiment("simplex-200");
  spec.config.max_iterations = 100;
  spec.output_dir = dir / "a";
  const auto first = run_experiment(spec);
  CHECK(first.csv.size() == 5);
  CHECK(first.svg.size() == 2);
  spec.output_dir = dir / "b";
  const auto second = run_experiment(spec);
  for (std::size_t i = 0; i < first.csv.size(); ++i) CHECK(slurp(first.csv[i]) == slurp(second.csv[i]));
  CHECK(slurp(first.svg.front()).rfind("<svg", 0) == 0);

  plot_trace_files(first.csv, dir / "plot.svg");
  CHECK(std::filesystem::exists(dir / "plot.svg"));
  std::filesystem::remove_all(dir);
}

TEST_CASE("SVG writer") {
  Plot p;
  p.title = "a < b";
  p.series.push_back({"s", {1, 10, 100}, {1, 0.1, 0.0}, false});
  std::ostringstream out;
  write_svg(out, p);
  const std::string svg = out.str();
  CHECK(svg.find("a &lt; b") != std::string::npos);
  CHECK(svg.find("<polyline") != std::string::npos);
  std::ostringstream again;
  write_svg(again, p);
  CHECK(svg == again.str());
}
