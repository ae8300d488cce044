#include "dcsim/io/csv.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace dcsim {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

std::string traces_to_csv(const std::vector<const Trace*>& traces) {
  std::string out;
  out += "time";
  for (const Trace* tr : traces) {
    out += ',';
    out += tr->name;
  }
  out += '\n';
  if (traces.empty()) return out;

  const std::size_t rows = traces.front()->size();
  for (const Trace* tr : traces) {
    if (tr->size() != rows || tr->dt != traces.front()->dt || tr->t0 != traces.front()->t0)
      throw std::invalid_argument("traces_to_csv: traces must share sampling");
  }

  for (std::size_t i = 0; i < rows; ++i) {
    out += format_double(traces.front()->time(i));
    for (const Trace* tr : traces) {
      out += ',';
      out += format_double(tr->samples[i]);
    }
    out += '\n';
  }
  return out;
}

std::string CsvTable::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (i) out += ',';
    out += header[i];
  }
  out += '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += row[i];
    }
    out += '\n';
  }
  return out;
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << content;
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace dcsim
