#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace vlcopt {

struct Series {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
};

struct Chart {
  std::string x_label;
  std::string y_label;
  std::vector<Series> series;
};

// Builds the chart for a sweep CSV (R_total, R_d_term and R_u_term against
// alpha) or a converge CSV (alpha against iteration, one series per B_v
// block). Any other all-numeric CSV plots columns 2..n against column 1.
// Throws CsvError on empty or malformed input.
Chart chart_from_csv(std::string_view csv_text);

// Standalone SVG with one <polyline> per series, axes and labels.
std::string render_svg(const Chart& chart);

// Reads csv_path, writes out_svg_path. Throws IoError or CsvError.
Chart cmd_chart(const std::string& csv_path, const std::string& out_svg_path);

}  // namespace vlcopt
