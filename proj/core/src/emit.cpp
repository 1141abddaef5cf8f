#include <kepler/emit.hpp>

#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include <kepler/errors.hpp>

namespace kepler::bench {

std::string format_real(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

void write_row(const SampleRow& row, std::ostream& out) {
  out << row.n << ',' << format_real(row.t) << ',' << format_real(row.q.x) << ','
      << format_real(row.q.y) << ',' << format_real(row.q.z) << ','
      << format_real(row.p.x) << ',' << format_real(row.p.y) << ','
      << format_real(row.p.z) << ',' << format_real(row.h) << ','
      << format_real(row.e_E) << ',' << format_real(row.e_L) << ','
      << format_real(row.e_dirL) << ',' << format_real(row.e_A) << ','
      << format_real(row.e_dirA) << ',' << format_real(row.e_q) << '\n';
}

}  // namespace

void emit_csv(const RunResult& result, std::ostream& out) {
  out << kCsvHeader << '\n';
  for (const SampleRow& row : result.samples) {
    write_row(row, out);
  }
  if (!out) {
    throw IoError("emit_csv: stream write failed");
  }
}

void emit_jsonl(const RunResult& result, std::ostream& out) {
  for (const SampleRow& row : result.samples) {
    out << "{\"n\":" << row.n << ",\"t\":" << format_real(row.t)
        << ",\"qx\":" << format_real(row.q.x) << ",\"qy\":" << format_real(row.q.y)
        << ",\"qz\":" << format_real(row.q.z) << ",\"px\":" << format_real(row.p.x)
        << ",\"py\":" << format_real(row.p.y) << ",\"pz\":" << format_real(row.p.z)
        << ",\"h\":" << format_real(row.h) << ",\"e_E\":" << format_real(row.e_E)
        << ",\"e_L\":" << format_real(row.e_L)
        << ",\"e_dirL\":" << format_real(row.e_dirL)
        << ",\"e_A\":" << format_real(row.e_A)
        << ",\"e_dirA\":" << format_real(row.e_dirA)
        << ",\"e_q\":" << format_real(row.e_q) << "}\n";
  }
  if (!out) {
    throw IoError("emit_jsonl: stream write failed");
  }
}

namespace {

double parse_field(const std::string& field, std::size_t line_no) {
  errno = 0;
  char* end = nullptr;
  const double value = std::strtod(field.c_str(), &end);
  if (field.empty() || end != field.c_str() + field.size()) {
    throw IoError("parse_csv: bad numeric field '" + field + "' on line " +
                  std::to_string(line_no));
  }
  return value;
}

}  // namespace

std::vector<SampleRow> parse_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader) {
    throw IoError("parse_csv: missing or unexpected header");
  }
  std::vector<SampleRow> rows;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) {
      continue;
    }
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
      const std::size_t comma = line.find(',', start);
      fields.push_back(line.substr(start, comma - start));
      if (comma == std::string::npos) {
        break;
      }
      start = comma + 1;
    }
    if (fields.size() != 15) {
      throw IoError("parse_csv: expected 15 fields on line " + std::to_string(line_no) +
                    ", got " + std::to_string(fields.size()));
    }
    SampleRow row;
    errno = 0;
    char* end = nullptr;
    row.n = std::strtoull(fields[0].c_str(), &end, 10);
    if (end != fields[0].c_str() + fields[0].size() || errno == ERANGE) {
      throw IoError("parse_csv: bad step index on line " + std::to_string(line_no));
    }
    row.t = parse_field(fields[1], line_no);
    row.q = {parse_field(fields[2], line_no), parse_field(fields[3], line_no),
             parse_field(fields[4], line_no)};
    row.p = {parse_field(fields[5], line_no), parse_field(fields[6], line_no),
             parse_field(fields[7], line_no)};
    row.h = parse_field(fields[8], line_no);
    row.e_E = parse_field(fields[9], line_no);
    row.e_L = parse_field(fields[10], line_no);
    row.e_dirL = parse_field(fields[11], line_no);
    row.e_A = parse_field(fields[12], line_no);
    row.e_dirA = parse_field(fields[13], line_no);
    row.e_q = parse_field(fields[14], line_no);
    rows.push_back(row);
  }
  return rows;
}

namespace {

constexpr double kLogFloor = 1e-18;

// Fixed palette, assigned by input order.
constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                    "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};

std::string coord(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string tick_label(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

}  // namespace

std::string render_plot_svg(const std::vector<RunResult>& results,
                            diag::Metric metric) {
  if (results.empty()) {
    throw DomainError("render_plot_svg: no results");
  }
  for (const RunResult& r : results) {
    if (r.samples.empty()) {
      throw DomainError("render_plot_svg: run '" + std::string(r.scenario.effective_label()) +
                        "' has no samples");
    }
    if (!r.summary.enabled[static_cast<std::size_t>(metric)]) {
      throw EmptyMetricError("render_plot_svg: metric " +
                             std::string(diag::metric_name(metric)) +
                             " is disabled for run '" +
                             std::string(r.scenario.effective_label()) + "'");
    }
  }

  const auto row_metric = [metric](const SampleRow& row) {
    switch (metric) {
      case diag::Metric::e_E: return row.e_E;
      case diag::Metric::e_L: return row.e_L;
      case diag::Metric::e_dirL: return row.e_dirL;
      case diag::Metric::e_A: return row.e_A;
      case diag::Metric::e_dirA: return row.e_dirA;
      case diag::Metric::e_q: return row.e_q;
    }
    return 0.0;
  };

  double t_min = results[0].samples.front().t;
  double t_max = t_min;
  double log_min = 0.0;
  double log_max = 0.0;
  bool first_value = true;
  for (const RunResult& r : results) {
    for (const SampleRow& row : r.samples) {
      t_min = std::min(t_min, row.t);
      t_max = std::max(t_max, row.t);
      const double lg = std::log10(std::max(row_metric(row), kLogFloor));
      if (first_value) {
        log_min = log_max = lg;
        first_value = false;
      } else {
        log_min = std::min(log_min, lg);
        log_max = std::max(log_max, lg);
      }
    }
  }
  if (t_max == t_min) {
    t_max = t_min + 1.0;
  }
  double y_lo = std::floor(log_min);
  double y_hi = std::ceil(log_max);
  if (y_hi == y_lo) {
    y_hi += 1.0;
  }

  constexpr double kLeft = 70.0, kTop = 20.0, kPlotW = 710.0, kPlotH = 530.0;
  const auto x_of = [&](double t) {
    return kLeft + kPlotW * (t - t_min) / (t_max - t_min);
  };
  const auto y_of = [&](double v) {
    const double lg = std::log10(std::max(v, kLogFloor));
    return kTop + kPlotH * (y_hi - lg) / (y_hi - y_lo);
  };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 960 600\" "
         "font-family=\"monospace\" font-size=\"13\">\n";
  svg << "<rect x=\"0\" y=\"0\" width=\"960\" height=\"600\" fill=\"#ffffff\"/>\n";
  svg << "<rect x=\"" << coord(kLeft) << "\" y=\"" << coord(kTop) << "\" width=\""
      << coord(kPlotW) << "\" height=\"" << coord(kPlotH)
      << "\" fill=\"none\" stroke=\"#000000\"/>\n";
  svg << "<text x=\"" << coord(kLeft) << "\" y=\"14\">"
      << diag::metric_name(metric) << "</text>\n";
  svg << "<text x=\"" << coord(kLeft + kPlotW / 2.0) << "\" y=\"592\">t</text>\n";

  const int decades = static_cast<int>(y_hi - y_lo);
  const int y_stride = std::max(1, (decades + 9) / 10);
  for (int d = 0; d <= decades; d += y_stride) {
    const double lg = y_lo + d;
    const double y = kTop + kPlotH * (y_hi - lg) / (y_hi - y_lo);
    svg << "<line x1=\"" << coord(kLeft - 5.0) << "\" y1=\"" << coord(y)
        << "\" x2=\"" << coord(kLeft) << "\" y2=\"" << coord(y)
        << "\" stroke=\"#000000\"/>\n";
    svg << "<text x=\"4\" y=\"" << coord(y + 4.0) << "\">1e" << static_cast<int>(lg)
        << "</text>\n";
  }
  for (int i = 0; i <= 4; ++i) {
    const double t = t_min + (t_max - t_min) * i / 4.0;
    const double x = x_of(t);
    svg << "<line x1=\"" << coord(x) << "\" y1=\"" << coord(kTop + kPlotH)
        << "\" x2=\"" << coord(x) << "\" y2=\"" << coord(kTop + kPlotH + 5.0)
        << "\" stroke=\"#000000\"/>\n";
    svg << "<text x=\"" << coord(x - 10.0) << "\" y=\"" << coord(kTop + kPlotH + 20.0)
        << "\">" << tick_label(t) << "</text>\n";
  }

  for (std::size_t i = 0; i < results.size(); ++i) {
    const char* color = kPalette[i % (sizeof kPalette / sizeof kPalette[0])];
    svg << "<polyline fill=\"none\" stroke=\"" << color
        << "\" stroke-width=\"1.5\" points=\"";
    bool first = true;
    for (const SampleRow& row : results[i].samples) {
      if (!first) {
        svg << ' ';
      }
      first = false;
      svg << coord(x_of(row.t)) << ',' << coord(y_of(row_metric(row)));
    }
    svg << "\"/>\n";
    const double ly = kTop + 20.0 + 22.0 * static_cast<double>(i);
    svg << "<line x1=\"" << coord(kLeft + kPlotW + 10.0) << "\" y1=\"" << coord(ly)
        << "\" x2=\"" << coord(kLeft + kPlotW + 34.0) << "\" y2=\"" << coord(ly)
        << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n";
    svg << "<text x=\"" << coord(kLeft + kPlotW + 40.0) << "\" y=\"" << coord(ly + 4.0)
        << "\">" << results[i].scenario.effective_label() << "</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

void emit_plot(const std::vector<RunResult>& results, diag::Metric metric,
               const std::filesystem::path& destination) {
  const std::string svg = render_plot_svg(results, metric);
  std::ofstream out(destination, std::ios::binary);
  if (!out) {
    throw IoError("emit_plot: cannot open '" + destination.string() + "'");
  }
  out << svg;
  if (!out) {
    throw IoError("emit_plot: write failed for '" + destination.string() + "'");
  }
}

}  // namespace kepler::bench
