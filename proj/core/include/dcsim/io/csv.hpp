#pragma once

#include <string>
#include <vector>

#include "dcsim/engine/trace.hpp"

namespace dcsim {

/// Renders traces as CSV with a header row: time first, then the traces in the
/// given order. All traces must share t0/dt/length. Deterministic formatting.
std::string traces_to_csv(const std::vector<const Trace*>& traces);

/// Simple rectangular table (header + rows) used for metric and sweep output.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::string to_string() const;
};

std::string format_double(double v);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace dcsim
