#include "bpcg/bench/movielens.hpp"

#include "bpcg/core/errors.hpp"
#include "bpcg/core/trace.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <ostream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>

namespace bpcg::bench {

namespace {

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    fields.push_back(line.substr(start, comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return fields;
}

template <typename T>
T parse_number(std::string_view field, const char* what, std::size_t line) {
  T value{};
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size() || field.empty())
    throw ParseError(std::string("invalid ") + what + " '" + std::string(field) + "'", line);
  return value;
}

std::string_view strip_cr(std::string_view s) {
  if (!s.empty() && s.back() == '\r') s.remove_suffix(1);
  return s;
}

// Ids with the most ratings, ties to the smaller id, returned in id order.
std::vector<long long> top_ids(const std::map<long long, int>& counts, int top_m) {
  std::vector<std::pair<long long, int>> v(counts.begin(), counts.end());
  std::stable_sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.second > b.second; });
  if (static_cast<int>(v.size()) > top_m) v.resize(top_m);
  std::vector<long long> ids;
  for (const auto& [id, c] : v) ids.push_back(id);
  std::sort(ids.begin(), ids.end());
  return ids;
}

}  // namespace

RatingsData ingest_movielens(std::istream& in, int top_m) {
  if (top_m < 1) throw ConfigError("top_m must be positive");
  std::string line;
  if (!std::getline(in, line)) throw ParseError("missing header", 1);
  if (strip_cr(line) != kMovieLensHeader)
    throw ParseError("expected header '" + std::string(kMovieLensHeader) + "'", 1);

  std::map<std::pair<long long, long long>, double> ratings;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view row = strip_cr(line);
    if (row.empty()) continue;
    const auto fields = split(row);
    if (fields.size() != 4) throw ParseError("expected 4 fields", line_no);
    const auto user = parse_number<long long>(fields[0], "userId", line_no);
    const auto movie = parse_number<long long>(fields[1], "movieId", line_no);
    const auto rating = parse_number<double>(fields[2], "rating", line_no);
    parse_number<long long>(fields[3], "timestamp", line_no);
    ratings[{user, movie}] = rating;
  }

  std::map<long long, int> user_counts, movie_counts;
  for (const auto& [key, r] : ratings) {
    ++user_counts[key.first];
    ++movie_counts[key.second];
  }
  RatingsData data;
  data.user_ids = top_ids(user_counts, top_m);
  data.movie_ids = top_ids(movie_counts, top_m);
  std::unordered_map<long long, int> user_index, movie_index;
  for (std::size_t i = 0; i < data.user_ids.size(); ++i) user_index[data.user_ids[i]] = static_cast<int>(i);
  for (std::size_t i = 0; i < data.movie_ids.size(); ++i) movie_index[data.movie_ids[i]] = static_cast<int>(i);
  data.n = static_cast<int>(std::max(data.user_ids.size(), data.movie_ids.size()));
  for (const auto& [key, r] : ratings) {
    const auto u = user_index.find(key.first);
    const auto m = movie_index.find(key.second);
    if (u == user_index.end() || m == movie_index.end()) continue;
    data.entries.push_back({u->second, m->second, r});
  }
  std::sort(data.entries.begin(), data.entries.end(),
            [](const ObservedEntry& a, const ObservedEntry& b) { return std::pair(a.row, a.col) < std::pair(b.row, b.col); });
  return data;
}

RatingsData ingest_movielens(const std::filesystem::path& path, int top_m) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open ratings file " + path.string());
  return ingest_movielens(in, top_m);
}

void write_movielens(std::ostream& out, const RatingsData& data) {
  out << kMovieLensHeader << '\n';
  for (const ObservedEntry& e : data.entries)
    out << data.user_ids.at(e.row) << ',' << data.movie_ids.at(e.col) << ',' << format_double(e.target) << ",0\n";
}

}  // namespace bpcg::bench
