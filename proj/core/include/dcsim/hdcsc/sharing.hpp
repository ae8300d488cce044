#pragma once

#include <vector>

namespace dcsim {

/// Splits the total current reference equally across active modules; inactive
/// modules get zero. Throws if no module is active.
std::vector<double> share_reference(double total_reference, const std::vector<bool>& active);

}  // namespace dcsim
