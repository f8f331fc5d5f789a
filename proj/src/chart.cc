#include "vlcopt/chart.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "vlcopt/errors.hpp"
#include "vlcopt/report.hpp"

namespace vlcopt {

namespace {

using Row = std::vector<std::string>;

std::vector<Row> parse_csv(std::string_view text) {
  std::vector<Row> rows;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    pos = end + 1;
    if (line.empty()) continue;
    Row row;
    std::size_t start = 0;
    while (true) {
      const std::size_t comma = line.find(',', start);
      row.emplace_back(line.substr(start, comma - start));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

double to_number(const std::string& cell, std::size_t line) {
  double v = 0.0;
  const auto res = std::from_chars(cell.data(), cell.data() + cell.size(), v);
  if (res.ec != std::errc() || res.ptr != cell.data() + cell.size() ||
      !std::isfinite(v)) {
    throw CsvError("line " + std::to_string(line) + ": non-numeric cell '" +
                   cell + "'");
  }
  return v;
}

std::size_t column(const Row& header, const std::string& name) {
  auto it = std::find(header.begin(), header.end(), name);
  if (it == header.end()) throw CsvError("missing column " + name);
  return static_cast<std::size_t>(it - header.begin());
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

Chart chart_from_csv(std::string_view csv_text) {
  const std::vector<Row> rows = parse_csv(csv_text);
  if (rows.empty()) throw CsvError("empty CSV");
  if (rows.size() < 2) throw CsvError("CSV has a header but no data rows");
  const Row& header = rows.front();
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (rows[i].size() != header.size()) {
      throw CsvError("line " + std::to_string(i + 1) + ": expected " +
                     std::to_string(header.size()) + " cells");
    }
  }

  Chart chart;
  if (header.size() >= 4 && header[0] == "B_v" && header[1] == "iteration") {
    chart.x_label = "iteration";
    chart.y_label = "alpha";
    const std::size_t bw = 0;
    const std::size_t it = 1;
    const std::size_t al = column(header, "alpha");
    for (std::size_t i = 1; i < rows.size(); ++i) {
      const std::string& key = rows[i][bw];
      to_number(key, i + 1);
      if (chart.series.empty() || chart.series.back().label != "B_v=" + key) {
        chart.series.push_back({"B_v=" + key, {}, {}});
      }
      chart.series.back().x.push_back(to_number(rows[i][it], i + 1));
      chart.series.back().y.push_back(to_number(rows[i][al], i + 1));
    }
    return chart;
  }

  chart.x_label = header[0];
  std::vector<std::size_t> ys;
  if (header[0] == "alpha" &&
      std::find(header.begin(), header.end(), "R_total") != header.end()) {
    chart.y_label = "rate (bit/s)";
    for (const char* name : {"R_total", "R_d_term", "R_u_term"}) {
      ys.push_back(column(header, name));
    }
  } else {
    if (header.size() < 2) throw CsvError("CSV needs at least two columns");
    chart.y_label = "value";
    for (std::size_t c = 1; c < header.size(); ++c) ys.push_back(c);
  }
  for (std::size_t c : ys) chart.series.push_back({header[c], {}, {}});
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const double x = to_number(rows[i][0], i + 1);
    for (std::size_t s = 0; s < ys.size(); ++s) {
      chart.series[s].x.push_back(x);
      chart.series[s].y.push_back(to_number(rows[i][ys[s]], i + 1));
    }
  }
  return chart;
}

std::string render_svg(const Chart& chart) {
  constexpr double kWidth = 720.0;
  constexpr double kHeight = 440.0;
  constexpr double kLeft = 90.0;
  constexpr double kRight = 170.0;
  constexpr double kTop = 20.0;
  constexpr double kBottom = 60.0;
  static const char* const kColors[] = {"#1f77b4", "#d62728", "#2ca02c",
                                        "#ff7f0e", "#9467bd", "#8c564b"};

  double x_min = std::numeric_limits<double>::infinity();
  double x_max = -x_min;
  double y_min = x_min;
  double y_max = -x_min;
  for (const Series& s : chart.series) {
    for (double v : s.x) x_min = std::min(x_min, v), x_max = std::max(x_max, v);
    for (double v : s.y) y_min = std::min(y_min, v), y_max = std::max(y_max, v);
  }
  if (!(x_max >= x_min)) x_min = 0.0, x_max = 1.0;
  if (!(y_max >= y_min)) y_min = 0.0, y_max = 1.0;
  if (x_max == x_min) x_max = x_min + 1.0;
  if (y_max == y_min) y_max = y_min + 1.0;

  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;
  auto px = [&](double x) { return kLeft + (x - x_min) / (x_max - x_min) * plot_w; };
  auto py = [&](double y) {
    return kTop + plot_h - (y - y_min) / (y_max - y_min) * plot_h;
  };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
      << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << ' '
      << kHeight << "\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg << "<line x1=\"" << kLeft << "\" y1=\"" << kTop + plot_h << "\" x2=\""
      << kLeft + plot_w << "\" y2=\"" << kTop + plot_h
      << "\" stroke=\"black\"/>\n";
  svg << "<line x1=\"" << kLeft << "\" y1=\"" << kTop << "\" x2=\"" << kLeft
      << "\" y2=\"" << kTop + plot_h << "\" stroke=\"black\"/>\n";
  svg << "<text x=\"" << kLeft + plot_w / 2 << "\" y=\"" << kHeight - 15
      << "\" text-anchor=\"middle\" font-size=\"14\">" << escape(chart.x_label)
      << "</text>\n";
  svg << "<text x=\"20\" y=\"" << kTop + plot_h / 2
      << "\" text-anchor=\"middle\" font-size=\"14\" transform=\"rotate(-90 20 "
      << kTop + plot_h / 2 << ")\">" << escape(chart.y_label) << "</text>\n";
  // Axis extents.
  svg << "<text x=\"" << kLeft << "\" y=\"" << kTop + plot_h + 18
      << "\" font-size=\"11\" text-anchor=\"middle\">"
      << format_number(x_min) << "</text>\n";
  svg << "<text x=\"" << kLeft + plot_w << "\" y=\"" << kTop + plot_h + 18
      << "\" font-size=\"11\" text-anchor=\"middle\">"
      << format_number(x_max) << "</text>\n";
  svg << "<text x=\"" << kLeft - 5 << "\" y=\"" << kTop + plot_h
      << "\" font-size=\"11\" text-anchor=\"end\">" << format_number(y_min)
      << "</text>\n";
  svg << "<text x=\"" << kLeft - 5 << "\" y=\"" << kTop + 10
      << "\" font-size=\"11\" text-anchor=\"end\">" << format_number(y_max)
      << "</text>\n";

  for (std::size_t s = 0; s < chart.series.size(); ++s) {
    const Series& series = chart.series[s];
    const char* color = kColors[s % std::size(kColors)];
    svg << "<polyline fill=\"none\" stroke=\"" << color
        << "\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < series.x.size(); ++i) {
      if (i) svg << ' ';
      svg << px(series.x[i]) << ',' << py(series.y[i]);
    }
    svg << "\"/>\n";
    svg << "<text x=\"" << kWidth - kRight + 10 << "\" y=\""
        << kTop + 16 * (s + 1) << "\" font-size=\"12\" fill=\"" << color
        << "\">" << escape(series.label) << "</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

Chart cmd_chart(const std::string& csv_path, const std::string& out_svg_path) {
  std::ifstream in(csv_path, std::ios::binary);
  if (!in) throw IoError("cannot open CSV file: " + csv_path);
  std::ostringstream buf;
  buf << in.rdbuf();
  Chart chart = chart_from_csv(buf.str());
  std::ofstream out(out_svg_path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open output file: " + out_svg_path);
  out << render_svg(chart);
  if (!out) throw IoError("cannot write output file: " + out_svg_path);
  return chart;
}

}  // namespace vlcopt
