#pragma once

#include <string>
#include <vector>

#include "dcsim/engine/trace.hpp"

namespace dcsim {

struct PlotSpec {
  std::string title;
  std::string x_label = "time [s]";
  std::string y_label;
  int width = 960;
  int height = 540;
  std::size_t max_points = 20000;  // per trace, after min/max envelope decimation
};

/// Renders traces to a self-contained SVG: axes, ticks, legend in input order.
/// Long traces are decimated with a min/max envelope so ripple extremes survive.
/// Output is deterministic for fixed input.
std::string render_svg_plot(const std::vector<const Trace*>& traces, const PlotSpec& spec);

/// Envelope decimation used by the plotter, exposed for tests: keeps at most
/// max_points samples while visiting each bucket's min and max.
std::vector<std::pair<double, double>> envelope_decimate(const Trace& trace,
                                                         std::size_t max_points);

}  // namespace dcsim
