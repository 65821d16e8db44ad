#ifndef BPCG_BENCH_SVG_HPP
#define BPCG_BENCH_SVG_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace bpcg::bench {

struct PlotSeries {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
  bool dashed = false;
};

/// A 2-D line chart. Non-positive values are skipped on log axes and
/// non-finite values are always skipped.
struct Plot {
  std::string title;
  std::string x_label;
  std::string y_label;
  bool log_x = false;
  bool log_y = true;
  std::vector<PlotSeries> series;
};

/// Self-contained SVG document; output depends only on the plot contents.
void write_svg(std::ostream& out, const Plot& plot);

}  // namespace bpcg::bench

#endif
