#include "dcsim/hdcsc/schedule.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

namespace dcsim {

std::vector<double> first_stage_delays(double T_m, int x) {
  if (!(T_m > 0.0)) throw std::invalid_argument("first_stage_delays: T_m must be positive");
  if (x < 1) throw std::invalid_argument("first_stage_delays: x must be >= 1");
  std::vector<double> out(static_cast<std::size_t>(x));
  const double td1 = T_m / x;
  for (int k = 0; k < x; ++k) out[static_cast<std::size_t>(k)] = td1 * k;
  return out;
}

std::vector<double> second_stage_delays(double t_d1, int y) {
  if (!(t_d1 > 0.0)) throw std::invalid_argument("second_stage_delays: t_d1 must be positive");
  if (y < 1) throw std::invalid_argument("second_stage_delays: y must be >= 1");
  std::vector<double> out(static_cast<std::size_t>(y));
  const double td2 = t_d1 / y;
  for (int g = 0; g < y; ++g) out[static_cast<std::size_t>(g)] = td2 * g;
  return out;
}

DelaySchedule build_schedule(const Topology& topo, double f_grid, int pulses) {
  if (topo.modules_per_group < 1 || topo.groups < 1)
    throw std::invalid_argument("build_schedule: topology counts must be >= 1");
  if (!(f_grid > 0.0) || pulses < 1)
    throw std::invalid_argument("build_schedule: invalid grid parameters");

  DelaySchedule sched;
  sched.T_m = 1.0 / (pulses * f_grid);
  sched.t_d1 = sched.T_m / topo.modules_per_group;
  sched.t_d2 = sched.t_d1 / topo.groups;

  const auto stage1 = first_stage_delays(sched.T_m, topo.modules_per_group);
  const auto stage2 = second_stage_delays(sched.t_d1, topo.groups);
  sched.module_delays.reserve(static_cast<std::size_t>(topo.total()));
  for (int g = 0; g < topo.groups; ++g)
    for (int k = 0; k < topo.modules_per_group; ++k)
      sched.module_delays.push_back(stage2[static_cast<std::size_t>(g)] +
                                    stage1[static_cast<std::size_t>(k)]);
  return sched;
}

double interleave_cancellation_factor(int x, int y, int k) {
  if (k < 1) throw std::invalid_argument("interleave_cancellation_factor: k must be >= 1");
  Topology topo{x, y};
  const DelaySchedule sched = build_schedule(topo, 50.0, 6);  // T_m cancels out
  std::complex<double> acc{0.0, 0.0};
  for (double d : sched.module_delays) {
    const double phase = -2.0 * std::numbers::pi * k * d / sched.T_m;
    acc += std::polar(1.0, phase);
  }
  return std::abs(acc) / static_cast<double>(sched.module_delays.size());
}

}  // namespace dcsim
