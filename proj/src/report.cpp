#include "zforce/report.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>

#include "zforce/errors.hpp"

namespace zforce {
namespace {

std::string shortest(double x) {
  std::array<char, 64> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  return std::string(buf.data(), ptr);
}

std::string sig6(double x) {
  std::array<char, 64> buf{};
  std::snprintf(buf.data(), buf.size(), "%.6g", x);
  return buf.data();
}

std::string cell(const std::optional<double>& x) { return x ? sig6(*x) : std::string(); }

void stat_cells(std::ostream& out, const std::optional<Stat>& s) {
  if (s) {
    out << ',' << sig6(s->mean) << ',' << sig6(s->std_error);
  } else {
    out << ",,";
  }
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

double to_double(const std::string& s, std::size_t line_no) {
  double x = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw IoError("CSV line " + std::to_string(line_no) + ": bad number '" + s + "'");
  }
  return x;
}

std::uint64_t to_u64(const std::string& s, std::size_t line_no) {
  std::uint64_t x = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw IoError("CSV line " + std::to_string(line_no) + ": bad integer '" + s + "'");
  }
  return x;
}

std::optional<double> opt_double(const std::string& s, std::size_t line_no) {
  if (s.empty()) return std::nullopt;
  return to_double(s, line_no);
}

std::optional<Stat> opt_stat(const std::string& mean, const std::string& se, std::size_t count,
                             std::size_t line_no) {
  if (mean.empty()) return std::nullopt;
  return Stat{to_double(mean, line_no), se.empty() ? 0.0 : to_double(se, line_no), count};
}

Model model_cell(const std::string& s, std::size_t line_no) {
  try {
    return parse_model(s);
  } catch (const InvalidArgument&) {
    throw IoError("CSV line " + std::to_string(line_no) + ": unknown model '" + s + "'");
  }
}

template <typename Row, typename Parse>
std::vector<Row> read_rows(std::istream& in, std::string_view header, std::size_t columns,
                           Parse parse) {
  std::string line;
  if (!std::getline(in, line)) throw IoError("CSV is empty");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != header) throw IoError("CSV header does not match the expected columns");
  std::vector<Row> out;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line == "\r") continue;
    auto cells = split(line);
    if (cells.size() != columns) {
      throw IoError("CSV line " + std::to_string(line_no) + ": expected " +
                    std::to_string(columns) + " columns");
    }
    out.push_back(parse(cells, line_no));
  }
  return out;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  return out;
}

void finish(std::ofstream& out, const std::string& path) {
  out.flush();
  if (!out) throw IoError("failed writing '" + path + "'");
}

}  // namespace

void write_records_csv(std::ostream& out, const std::vector<RunRecord>& records) {
  out << kRecordHeader << '\n';
  for (const auto& r : records) {
    out << to_string(r.model) << ',' << shortest(r.a) << ',' << shortest(r.gamma_target) << ','
        << r.replica << ',' << r.seed << ',' << cell(r.z_lm_frac) << ',' << cell(r.delta_z_frac)
        << ',' << cell(r.v_lm_frac) << ',' << cell(r.delta_v_frac) << ',' << cell(r.diameter)
        << ',' << sig6(r.walltime_ms) << '\n';
  }
}

void write_summary_csv(std::ostream& out, const std::vector<SummaryRow>& rows) {
  out << kSummaryHeader << '\n';
  for (const auto& r : rows) {
    out << to_string(r.model) << ',' << shortest(r.a) << ',' << shortest(r.gamma) << ','
        << r.replicas;
    stat_cells(out, r.z_lm);
    stat_cells(out, r.delta_z);
    stat_cells(out, r.v_lm);
    stat_cells(out, r.delta_v);
    stat_cells(out, r.diameter);
    stat_cells(out, r.gamma_hat);
    out << '\n';
  }
}

void emit_csv(const std::string& path, const std::vector<RunRecord>& records) {
  auto out = open_out(path);
  write_records_csv(out, records);
  finish(out, path);
}

void emit_csv(const std::string& path, const std::vector<SummaryRow>& rows) {
  auto out = open_out(path);
  write_summary_csv(out, rows);
  finish(out, path);
}

std::vector<RunRecord> read_records_csv(std::istream& in) {
  return read_rows<RunRecord>(in, kRecordHeader, 11, [](const auto& c, std::size_t ln) {
    RunRecord r;
    r.model = model_cell(c[0], ln);
    r.a = to_double(c[1], ln);
    r.gamma_target = to_double(c[2], ln);
    r.replica = to_u64(c[3], ln);
    r.seed = to_u64(c[4], ln);
    r.z_lm_frac = opt_double(c[5], ln);
    r.delta_z_frac = opt_double(c[6], ln);
    r.v_lm_frac = opt_double(c[7], ln);
    r.delta_v_frac = opt_double(c[8], ln);
    r.diameter = opt_double(c[9], ln);
    r.walltime_ms = to_double(c[10], ln);
    return r;
  });
}

std::vector<SummaryRow> read_summary_csv(std::istream& in) {
  return read_rows<SummaryRow>(in, kSummaryHeader, 16, [](const auto& c, std::size_t ln) {
    SummaryRow r;
    r.model = model_cell(c[0], ln);
    r.a = to_double(c[1], ln);
    r.gamma = to_double(c[2], ln);
    r.replicas = to_u64(c[3], ln);
    r.z_lm = opt_stat(c[4], c[5], r.replicas, ln);
    r.delta_z = opt_stat(c[6], c[7], r.replicas, ln);
    r.v_lm = opt_stat(c[8], c[9], r.replicas, ln);
    r.delta_v = opt_stat(c[10], c[11], r.replicas, ln);
    r.diameter = opt_stat(c[12], c[13], r.replicas, ln);
    r.gamma_hat = opt_stat(c[14], c[15], r.replicas, ln);
    return r;
  });
}

std::vector<SummaryRow> load_rows(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  std::string header;
  std::getline(in, header);
  if (!header.empty() && header.back() == '\r') header.pop_back();
  in.clear();
  in.seekg(0);
  if (header == kRecordHeader) return aggregate(read_records_csv(in));
  if (header == kSummaryHeader) return read_summary_csv(in);
  throw IoError("'" + path + "' is neither a record nor a summary CSV");
}

PlotQuantity parse_plot_quantity(std::string_view text) {
  if (text == "z") return PlotQuantity::z;
  if (text == "v") return PlotQuantity::v;
  if (text == "delta_z") return PlotQuantity::delta_z;
  if (text == "delta_v") return PlotQuantity::delta_v;
  throw InvalidArgument("unknown plot quantity '" + std::string(text) + "'");
}

namespace {

const std::optional<Stat>& pick(const SummaryRow& row, PlotQuantity q) {
  switch (q) {
    case PlotQuantity::z: return row.z_lm;
    case PlotQuantity::v: return row.v_lm;
    case PlotQuantity::delta_z: return row.delta_z;
    case PlotQuantity::delta_v: return row.delta_v;
  }
  return row.z_lm;
}

std::string_view axis_label(PlotQuantity q) {
  switch (q) {
    case PlotQuantity::z: return "z = Z_LM / N";
    case PlotQuantity::v: return "v = V_LM / N";
    case PlotQuantity::delta_z: return "&#916;Z / N";
    case PlotQuantity::delta_v: return "&#916;V / N";
  }
  return "";
}

std::string_view series_label(Model m) {
  return m == Model::pa ? "preferential attachment" : "deactivation";
}

constexpr std::array<std::string_view, 2> kColours{"#1f77b4", "#d62728"};

}  // namespace

void write_plot_svg(std::ostream& out, const std::vector<SummaryRow>& rows, PlotQuantity q) {
  if (rows.empty()) throw InvalidArgument("plot: no rows");
  std::map<Model, std::vector<std::pair<double, Stat>>> series;
  for (const auto& r : rows) {
    if (const auto& s = pick(r, q)) series[r.model].emplace_back(r.gamma, *s);
  }
  if (series.empty()) throw InvalidArgument("plot: rows carry no values for this quantity");

  double x_min = std::numeric_limits<double>::max();
  double x_max = std::numeric_limits<double>::lowest();
  for (auto& [model, pts] : series) {
    std::ranges::sort(pts, {}, &std::pair<double, Stat>::first);
    for (auto& [x, s] : pts) {
      x_min = std::min(x_min, x);
      x_max = std::max(x_max, x);
    }
  }
  if (x_max - x_min < 1e-9) {
    x_min -= 0.5;
    x_max += 0.5;
  }
  const double pad = 0.04 * (x_max - x_min);
  x_min -= pad;
  x_max += pad;
  constexpr double kYMax = 1.05;

  constexpr double W = 640, H = 420, L = 70, R = 20, T = 30, B = 55;
  auto sx = [&](double x) { return L + (x - x_min) / (x_max - x_min) * (W - L - R); };
  auto sy = [&](double y) {
    return T + (1.0 - std::clamp(y, 0.0, kYMax) / kYMax) * (H - T - B);
  };
  auto num = [](double v) { return sig6(v); };

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H
      << "\" viewBox=\"0 0 " << W << ' ' << H << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<g class=\"axes\" stroke=\"black\">\n";
  out << "<line x1=\"" << L << "\" y1=\"" << H - B << "\" x2=\"" << W - R << "\" y2=\"" << H - B
      << "\"/>\n";
  out << "<line x1=\"" << L << "\" y1=\"" << T << "\" x2=\"" << L << "\" y2=\"" << H - B
      << "\"/>\n";
  out << "</g>\n";

  out << "<g class=\"ticks\">\n";
  for (int i = 0; i <= 5; ++i) {
    double y = 0.2 * i;
    out << "<line x1=\"" << L - 5 << "\" y1=\"" << num(sy(y)) << "\" x2=\"" << L << "\" y2=\""
        << num(sy(y)) << "\" stroke=\"black\"/>";
    out << "<text x=\"" << L - 8 << "\" y=\"" << num(sy(y) + 4)
        << "\" text-anchor=\"end\">" << num(y) << "</text>\n";
  }
  for (int i = 0; i <= 5; ++i) {
    double x = x_min + pad + (x_max - x_min - 2 * pad) * i / 5.0;
    out << "<line x1=\"" << num(sx(x)) << "\" y1=\"" << H - B << "\" x2=\"" << num(sx(x))
        << "\" y2=\"" << H - B + 5 << "\" stroke=\"black\"/>";
    out << "<text x=\"" << num(sx(x)) << "\" y=\"" << H - B + 18
        << "\" text-anchor=\"middle\">" << num(std::round(x * 1000) / 1000) << "</text>\n";
  }
  out << "</g>\n";
  out << "<text class=\"xlabel\" x=\"" << (L + W - R) / 2 << "\" y=\"" << H - 12
      << "\" text-anchor=\"middle\">&#947; (degree exponent)</text>\n";
  out << "<text class=\"ylabel\" transform=\"translate(18," << (T + H - B) / 2
      << ") rotate(-90)\" text-anchor=\"middle\">" << axis_label(q) << "</text>\n";

  std::size_t colour = 0;
  for (const auto& [model, pts] : series) {
    std::string_view c = kColours[colour++ % kColours.size()];
    out << "<g class=\"series\" data-model=\"" << to_string(model) << "\">\n";
    out << "<polyline fill=\"none\" stroke=\"" << c << "\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) {
      out << (i ? " " : "") << num(sx(pts[i].first)) << ',' << num(sy(pts[i].second.mean));
    }
    out << "\"/>\n";
    for (const auto& [x, s] : pts) {
      double lo = s.mean - s.std_error, hi = s.mean + s.std_error;
      out << "<line class=\"errorbar\" x1=\"" << num(sx(x)) << "\" y1=\"" << num(sy(lo))
          << "\" x2=\"" << num(sx(x)) << "\" y2=\"" << num(sy(hi)) << "\" stroke=\"" << c
          << "\"/>\n";
      out << "<circle class=\"marker\" cx=\"" << num(sx(x)) << "\" cy=\"" << num(sy(s.mean))
          << "\" r=\"3.5\" fill=\"" << c << "\"/>\n";
    }
    out << "</g>\n";
  }

  if (series.size() > 1) {
    out << "<g class=\"legend\">\n";
    double y = T + 10;
    colour = 0;
    for (const auto& [model, pts] : series) {
      std::string_view c = kColours[colour++ % kColours.size()];
      out << "<rect x=\"" << W - R - 190 << "\" y=\"" << y - 9 << "\" width=\"12\" height=\"12\" fill=\""
          << c << "\"/>";
      out << "<text x=\"" << W - R - 172 << "\" y=\"" << y + 1 << "\">" << series_label(model)
          << "</text>\n";
      y += 18;
    }
    out << "</g>\n";
  }
  out << "</svg>\n";
}

void emit_plot(const std::string& path, const std::vector<SummaryRow>& rows, PlotQuantity q) {
  if (rows.empty()) throw InvalidArgument("plot: no rows");
  std::ostringstream svg;
  write_plot_svg(svg, rows, q);
  auto out = open_out(path);
  out << svg.str();
  finish(out, path);
}

}  // namespace zforce
