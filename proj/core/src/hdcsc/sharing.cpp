#include "dcsim/hdcsc/sharing.hpp"

#include <cstddef>
#include <stdexcept>

namespace dcsim {

std::vector<double> share_reference(double total_reference, const std::vector<bool>& active) {
  std::size_t count = 0;
  for (bool a : active)
    if (a) ++count;
  if (count == 0) throw std::invalid_argument("share_reference: no active modules");

  std::vector<double> out(active.size(), 0.0);
  const double share = total_reference / static_cast<double>(count);
  for (std::size_t i = 0; i < active.size(); ++i)
    if (active[i]) out[i] = share;
  return out;
}

}  // namespace dcsim
