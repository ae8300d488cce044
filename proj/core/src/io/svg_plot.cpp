#include "dcsim/io/svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace dcsim {

namespace {

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                          "#9467bd", "#8c564b", "#17becf", "#7f7f7f"};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

// 1-2-5 tick spacing covering roughly `target` intervals.
double nice_step(double span, int target) {
  if (!(span > 0.0)) return 1.0;
  const double raw = span / target;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  const double norm = raw / mag;
  double step;
  if (norm < 1.5) step = 1.0;
  else if (norm < 3.5) step = 2.0;
  else if (norm < 7.5) step = 5.0;
  else step = 10.0;
  return step * mag;
}

}  // namespace

std::vector<std::pair<double, double>> envelope_decimate(const Trace& trace,
                                                         std::size_t max_points) {
  std::vector<std::pair<double, double>> pts;
  const std::size_t n = trace.size();
  if (n == 0) return pts;
  if (max_points < 4) max_points = 4;
  if (n <= max_points) {
    pts.reserve(n);
    for (std::size_t i = 0; i < n; ++i) pts.emplace_back(trace.time(i), trace.samples[i]);
    return pts;
  }
  // Two points (min and max) per bucket.
  const std::size_t buckets = max_points / 2;
  const double per = static_cast<double>(n) / static_cast<double>(buckets);
  pts.reserve(2 * buckets);
  for (std::size_t b = 0; b < buckets; ++b) {
    const std::size_t lo = static_cast<std::size_t>(b * per);
    std::size_t hi = static_cast<std::size_t>((b + 1) * per);
    if (hi > n) hi = n;
    if (lo >= hi) continue;
    std::size_t imin = lo, imax = lo;
    for (std::size_t i = lo; i < hi; ++i) {
      if (trace.samples[i] < trace.samples[imin]) imin = i;
      if (trace.samples[i] > trace.samples[imax]) imax = i;
    }
    const std::size_t first = std::min(imin, imax), second = std::max(imin, imax);
    pts.emplace_back(trace.time(first), trace.samples[first]);
    if (second != first) pts.emplace_back(trace.time(second), trace.samples[second]);
  }
  return pts;
}

std::string render_svg_plot(const std::vector<const Trace*>& traces, const PlotSpec& spec) {
  const double ml = 70, mr = 20, mt = 36, mb = 46;
  const double pw = spec.width - ml - mr;
  const double ph = spec.height - mt - mb;

  // Data ranges over all traces.
  double x_lo = 0.0, x_hi = 1.0, y_lo = 0.0, y_hi = 1.0;
  bool any = false;
  std::vector<std::vector<std::pair<double, double>>> decimated;
  for (const Trace* tr : traces) {
    decimated.push_back(envelope_decimate(*tr, spec.max_points));
    for (const auto& [t, v] : decimated.back()) {
      if (!any) {
        x_lo = x_hi = t;
        y_lo = y_hi = v;
        any = true;
      } else {
        x_lo = std::min(x_lo, t);
        x_hi = std::max(x_hi, t);
        y_lo = std::min(y_lo, v);
        y_hi = std::max(y_hi, v);
      }
    }
  }
  if (x_hi <= x_lo) x_hi = x_lo + 1.0;
  if (y_hi <= y_lo) y_hi = y_lo + 1.0;
  const double ypad = 0.05 * (y_hi - y_lo);
  y_lo -= ypad;
  y_hi += ypad;

  auto px = [&](double t) { return ml + (t - x_lo) / (x_hi - x_lo) * pw; };
  auto py = [&](double v) { return mt + (y_hi - v) / (y_hi - y_lo) * ph; };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << spec.width << "\" height=\""
      << spec.height << "\" viewBox=\"0 0 " << spec.width << " " << spec.height << "\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  if (!spec.title.empty())
    svg << "<text x=\"" << spec.width / 2 << "\" y=\"22\" text-anchor=\"middle\" "
        << "font-family=\"sans-serif\" font-size=\"15\">" << spec.title << "</text>\n";

  // Axes frame.
  svg << "<rect x=\"" << num(ml) << "\" y=\"" << num(mt) << "\" width=\"" << num(pw)
      << "\" height=\"" << num(ph) << "\" fill=\"none\" stroke=\"black\"/>\n";

  // Ticks and grid.
  const double xs = nice_step(x_hi - x_lo, 8);
  for (double t = std::ceil(x_lo / xs) * xs; t <= x_hi + 1e-12 * xs; t += xs) {
    svg << "<line x1=\"" << num(px(t)) << "\" y1=\"" << num(mt) << "\" x2=\"" << num(px(t))
        << "\" y2=\"" << num(mt + ph) << "\" stroke=\"#dddddd\"/>\n";
    svg << "<text x=\"" << num(px(t)) << "\" y=\"" << num(mt + ph + 18)
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">" << num(t)
        << "</text>\n";
  }
  const double ys = nice_step(y_hi - y_lo, 6);
  for (double v = std::ceil(y_lo / ys) * ys; v <= y_hi + 1e-12 * ys; v += ys) {
    svg << "<line x1=\"" << num(ml) << "\" y1=\"" << num(py(v)) << "\" x2=\"" << num(ml + pw)
        << "\" y2=\"" << num(py(v)) << "\" stroke=\"#dddddd\"/>\n";
    svg << "<text x=\"" << num(ml - 6) << "\" y=\"" << num(py(v) + 4)
        << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" << num(v)
        << "</text>\n";
  }

  svg << "<text x=\"" << num(ml + pw / 2) << "\" y=\"" << num(spec.height - 8)
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">" << spec.x_label
      << "</text>\n";
  if (!spec.y_label.empty())
    svg << "<text x=\"16\" y=\"" << num(mt + ph / 2)
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\" "
        << "transform=\"rotate(-90 16 " << num(mt + ph / 2) << ")\">" << spec.y_label
        << "</text>\n";

  // Trace polylines.
  for (std::size_t i = 0; i < decimated.size(); ++i) {
    const char* color = kPalette[i % (sizeof(kPalette) / sizeof(kPalette[0]))];
    svg << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.2\" points=\"";
    for (const auto& [t, v] : decimated[i]) svg << num(px(t)) << "," << num(py(v)) << " ";
    svg << "\"/>\n";
  }

  // Legend, input order.
  double ly = mt + 14;
  for (std::size_t i = 0; i < traces.size(); ++i) {
    const char* color = kPalette[i % (sizeof(kPalette) / sizeof(kPalette[0]))];
    const double lx = ml + pw - 150;
    svg << "<line x1=\"" << num(lx) << "\" y1=\"" << num(ly - 4) << "\" x2=\"" << num(lx + 24)
        << "\" y2=\"" << num(ly - 4) << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n";
    svg << "<text x=\"" << num(lx + 30) << "\" y=\"" << num(ly)
        << "\" font-family=\"sans-serif\" font-size=\"12\" class=\"legend\">" << traces[i]->name
        << "</text>\n";
    ly += 16;
  }

  svg << "</svg>\n";
  return svg.str();
}

}  // namespace dcsim
