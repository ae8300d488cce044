#pragma once

#include <cstddef>
#include <vector>

namespace dcsim {

/// Grouping of the parallel modules: y unit controllers, x modules each.
struct Topology {
  int modules_per_group = 3;  // x
  int groups = 4;             // y
  int total() const { return modules_per_group * groups; }
};

/// Two-level staggered control delays. Module (g, k) is delayed by
/// group_offsets[g] + stage1[k]; all totals are distinct and lie in [0, T_m).
struct DelaySchedule {
  double T_m = 0.0;   // ripple period the schedule interleaves against
  double t_d1 = 0.0;  // first-stage delay period, T_m / x
  double t_d2 = 0.0;  // second-stage delay period, t_d1 / y
  std::vector<double> module_delays;  // seconds, indexed group-major: g*x + k
};

/// First-stage delays [0, T_m/x, ..., (x-1)*T_m/x].
std::vector<double> first_stage_delays(double T_m, int x);

/// Second-stage (group) delays [0, t_d1/y, ..., (y-1)*t_d1/y].
std::vector<double> second_stage_delays(double t_d1, int y);

/// Full schedule for an m-pulse rectifier on an f_grid supply (T_m = 1/(m*f_grid)).
DelaySchedule build_schedule(const Topology& topo, double f_grid, int pulses);

/// Residual gain of ripple harmonic k under the schedule for identical modules:
/// |mean over modules of exp(-j*2*pi*k*d_i/T_m)|. Zero means complete
/// cancellation of that harmonic in the summed output.
double interleave_cancellation_factor(int x, int y, int k);

}  // namespace dcsim
