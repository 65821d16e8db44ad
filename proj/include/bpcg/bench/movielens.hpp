#ifndef BPCG_BENCH_MOVIELENS_HPP
#define BPCG_BENCH_MOVIELENS_HPP

#include "bpcg/objectives/objective.hpp"

#include <filesystem>
#include <iosfwd>
#include <vector>

namespace bpcg::bench {

/// Ratings remapped to a dense square index space: row = user, column =
/// movie. `n` is the larger of the kept user and movie counts.
struct RatingsData {
  int n = 0;
  std::vector<ObservedEntry> entries;  ///< sorted by (row, col)
  std::vector<long long> user_ids;     ///< original id of each row
  std::vector<long long> movie_ids;    ///< original id of each column
};

inline constexpr const char* kMovieLensHeader = "userId,movieId,rating,timestamp";

/// Parses a MovieLens ratings CSV. Keeps the `top_m` users and movies with
/// the most ratings (ties to the smaller id); for repeated (user, movie)
/// pairs the last rating wins. Throws ParseError on a malformed header or row.
RatingsData ingest_movielens(std::istream& in, int top_m = 300);
RatingsData ingest_movielens(const std::filesystem::path& path, int top_m = 300);

/// Writes the observed set back in MovieLens format (timestamp 0).
void write_movielens(std::ostream& out, const RatingsData& data);

}  // namespace bpcg::bench

#endif
