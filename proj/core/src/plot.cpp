#include "sfft/plot.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <string>

#include "sfft/error.hpp"
#include "sfft/harness.hpp"

namespace sfft {

namespace {

struct Row {
  std::string algorithm;
  double n = 0, k = 0, snr = 0;
  bool exact = false;
  double runtime = 0, sampling = 0, l1 = 0;
  bool converged = false;
};

double parse_number(const std::string& s, int line) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw Error(ErrorKind::SchemaError, "line " + std::to_string(line) + ": bad number '" + s + "'");
  }
  return v;
}

std::vector<Row> read_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::SchemaError, "cannot read " + path.string());
  std::string line;
  if (!std::getline(in, line) || line != csv_header()) {
    throw Error(ErrorKind::SchemaError, "unexpected CSV header in " + path.string());
  }
  std::vector<Row> rows;
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::vector<std::string> f;
    std::stringstream ss(line);
    for (std::string cell; std::getline(ss, cell, ',');) f.push_back(cell);
    if (f.size() != 12) throw Error(ErrorKind::SchemaError, "line " + std::to_string(lineno) + ": expected 12 fields");
    Row r;
    r.algorithm = f[0];
    r.n = parse_number(f[1], lineno);
    r.k = parse_number(f[2], lineno);
    r.exact = f[3] == "exact";
    r.snr = r.exact ? 0.0 : parse_number(f[3], lineno);
    r.runtime = parse_number(f[5], lineno);
    r.sampling = parse_number(f[6], lineno);
    r.l1 = parse_number(f[8], lineno);
    if (f[10] != "true" && f[10] != "false") {
      throw Error(ErrorKind::SchemaError, "line " + std::to_string(lineno) + ": converged must be true/false");
    }
    r.converged = f[10] == "true";
    rows.push_back(std::move(r));
  }
  return rows;
}

struct Point {
  double x = 0;
  double y = 0;
  bool gap = false;
};

struct Axis {
  bool log = false;
  double lo = 0, hi = 1;
  std::string label;
};

const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#17becf"};

double tx(const Axis& a, double v) { return a.log ? std::log10(std::max(v, 1e-300)) : v; }

Axis fit_axis(std::vector<double> values, bool log, std::string label) {
  Axis a;
  a.log = log;
  a.label = std::move(label);
  std::vector<double> t;
  for (const double v : values) {
    if (log && !(v > 0)) continue;
    t.push_back(log ? std::log10(v) : v);
  }
  if (t.empty()) t.push_back(log ? 0.0 : 0.0);
  a.lo = *std::min_element(t.begin(), t.end());
  a.hi = *std::max_element(t.begin(), t.end());
  if (a.hi - a.lo < 1e-12) {
    a.lo -= 0.5;
    a.hi += 0.5;
  } else {
    const double pad = 0.05 * (a.hi - a.lo);
    a.lo -= pad;
    a.hi += pad;
  }
  return a;
}

std::string tick_label(double v, bool log) {
  char buf[32];
  if (log) {
    std::snprintf(buf, sizeof buf, "1e%d", static_cast<int>(std::lround(v)));
  } else {
    std::snprintf(buf, sizeof buf, "%.3g", v);
  }
  return buf;
}

void write_svg(const std::filesystem::path& path, const std::string& title, const Axis& xa, const Axis& ya,
               const std::map<std::string, std::vector<Point>>& series) {
  const double w = 720, h = 460, left = 80, right = 190, top = 40, bottom = 60;
  const double pw = w - left - right, ph = h - top - bottom;
  auto px = [&](double v) { return left + (tx(xa, v) - xa.lo) / (xa.hi - xa.lo) * pw; };
  auto py = [&](double v) { return top + ph - (tx(ya, v) - ya.lo) / (ya.hi - ya.lo) * ph; };

  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::InvalidParameter, "cannot write " + path.string());
  char buf[256];
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
      << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<text x=\"" << w / 2 << "\" y=\"22\" text-anchor=\"middle\" font-size=\"15\">" << title << "</text>\n";
  std::snprintf(buf, sizeof buf, "<rect x=\"%.1f\" y=\"%.1f\" width=\"%.1f\" height=\"%.1f\" fill=\"none\" stroke=\"black\"/>\n",
                left, top, pw, ph);
  out << buf;

  auto ticks = [](const Axis& a) {
    std::vector<double> t;
    if (a.log) {
      for (double d = std::ceil(a.lo); d <= std::floor(a.hi); d += 1.0) t.push_back(d);
      if (t.empty()) t.push_back(0.5 * (a.lo + a.hi));
    } else {
      for (int i = 0; i <= 4; ++i) t.push_back(a.lo + (a.hi - a.lo) * i / 4.0);
    }
    return t;
  };
  for (const double t : ticks(xa)) {
    const double x = left + (t - xa.lo) / (xa.hi - xa.lo) * pw;
    std::snprintf(buf, sizeof buf, "<line x1=\"%.1f\" y1=\"%.1f\" x2=\"%.1f\" y2=\"%.1f\" stroke=\"#ddd\"/>\n", x, top, x, top + ph);
    out << buf;
    std::snprintf(buf, sizeof buf, "<text x=\"%.1f\" y=\"%.1f\" text-anchor=\"middle\">%s</text>\n", x, top + ph + 18,
                  tick_label(t, xa.log).c_str());
    out << buf;
  }
  for (const double t : ticks(ya)) {
    const double y = top + ph - (t - ya.lo) / (ya.hi - ya.lo) * ph;
    std::snprintf(buf, sizeof buf, "<line x1=\"%.1f\" y1=\"%.1f\" x2=\"%.1f\" y2=\"%.1f\" stroke=\"#ddd\"/>\n", left, y, left + pw, y);
    out << buf;
    std::snprintf(buf, sizeof buf, "<text x=\"%.1f\" y=\"%.1f\" text-anchor=\"end\">%s</text>\n", left - 6, y + 4,
                  tick_label(t, ya.log).c_str());
    out << buf;
  }
  out << "<text x=\"" << left + pw / 2 << "\" y=\"" << h - 15 << "\" text-anchor=\"middle\">" << xa.label << "</text>\n";
  out << "<text transform=\"translate(20," << top + ph / 2 << ") rotate(-90)\" text-anchor=\"middle\">" << ya.label
      << "</text>\n";

  std::size_t idx = 0;
  for (const auto& [name, pts] : series) {
    const char* color = kColors[idx % std::size(kColors)];
    bool any_gap = false;
    std::string path_d;
    bool pen_down = false;
    for (const Point& p : pts) {
      if (p.gap) {
        any_gap = true;
        pen_down = false;
        continue;
      }
      std::snprintf(buf, sizeof buf, "%s%.1f %.1f ", pen_down ? "L" : "M", px(p.x), py(p.y));
      path_d += buf;
      pen_down = true;
      std::snprintf(buf, sizeof buf, "<circle cx=\"%.1f\" cy=\"%.1f\" r=\"3\" fill=\"%s\"/>\n", px(p.x), py(p.y), color);
      out << buf;
    }
    if (!path_d.empty()) {
      out << "<path d=\"" << path_d << "\" fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\"/>\n";
    }
    const double ly = top + 10 + 20.0 * static_cast<double>(idx);
    std::snprintf(buf, sizeof buf, "<line x1=\"%.1f\" y1=\"%.1f\" x2=\"%.1f\" y2=\"%.1f\" stroke=\"%s\" stroke-width=\"2\"/>\n",
                  left + pw + 12, ly, left + pw + 32, ly, color);
    out << buf;
    out << "<text x=\"" << left + pw + 38 << "\" y=\"" << ly + 4 << "\">" << name
        << (any_gap ? " (gaps: non-converged)" : "") << "</text>\n";
    ++idx;
  }
  out << "</svg>\n";
}

// Median y per (algorithm, x) over converged rows; x values whose rows all
// failed become gaps.
std::map<std::string, std::vector<Point>> build_series(const std::vector<Row>& rows, double Row::*xf, double Row::*yf,
                                                       bool skip_exact) {
  std::map<std::string, std::map<double, std::pair<std::vector<double>, int>>> grouped;
  for (const Row& r : rows) {
    if (skip_exact && r.exact) continue;
    auto& cell = grouped[r.algorithm][r.*xf];
    if (r.converged) {
      cell.first.push_back(r.*yf);
    } else {
      ++cell.second;
    }
  }
  std::map<std::string, std::vector<Point>> out;
  for (auto& [alg, by_x] : grouped) {
    auto& pts = out[alg];
    for (auto& [x, cell] : by_x) {
      if (cell.first.empty()) {
        pts.push_back({x, 0.0, true});
        continue;
      }
      auto& v = cell.first;
      std::nth_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(v.size() / 2), v.end());
      pts.push_back({x, v[v.size() / 2], false});
    }
  }
  return out;
}

void render(const std::filesystem::path& path, const std::string& title,
            const std::map<std::string, std::vector<Point>>& series, bool xlog, bool ylog, const std::string& xl,
            const std::string& yl) {
  std::vector<double> xs, ys;
  for (const auto& [name, pts] : series) {
    for (const Point& p : pts) {
      xs.push_back(p.x);
      if (!p.gap) ys.push_back(ylog ? std::max(p.y, 1e-12) : p.y);
    }
  }
  write_svg(path, title, fit_axis(xs, xlog, xl), fit_axis(ys, ylog, yl), series);
}

}  // namespace

std::vector<std::filesystem::path> emit_plots(const std::filesystem::path& csv, const std::filesystem::path& out_dir) {
  const std::vector<Row> rows = read_csv(csv);
  std::filesystem::create_directories(out_dir);
  std::vector<std::filesystem::path> files = {out_dir / "runtime_vs_n.svg", out_dir / "runtime_vs_k.svg",
                                              out_dir / "sampling_vs_n.svg", out_dir / "sampling_vs_k.svg",
                                              out_dir / "l1_vs_snr.svg"};
  render(files[0], "Runtime vs signal size", build_series(rows, &Row::n, &Row::runtime, false), true, true, "N",
         "runtime (s)");
  render(files[1], "Runtime vs sparsity", build_series(rows, &Row::k, &Row::runtime, false), false, true, "K",
         "runtime (s)");
  render(files[2], "Sampling fraction vs signal size", build_series(rows, &Row::n, &Row::sampling, false), true, false,
         "N", "samples read / N");
  render(files[3], "Sampling fraction vs sparsity", build_series(rows, &Row::k, &Row::sampling, false), false, false,
         "K", "samples read / N");
  auto l1 = build_series(rows, &Row::snr, &Row::l1, true);
  for (auto& [name, pts] : l1) {
    for (Point& p : pts) p.y = std::max(p.y, 1e-12);
  }
  render(files[4], "L1 error vs SNR", l1, false, true, "SNR (dB)", "L1 error per coefficient");
  return files;
}

}  // namespace sfft
