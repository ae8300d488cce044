#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace dcsim {

/// Raised for malformed or invalid configuration; maps to CLI exit code 2.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Minimal strict INI reader: [section] headers, key = value lines, and
/// '#' / ';' comments. Keys remember their line numbers so validation can
/// point at the offending line; every key must be consumed or parsing fails.
class IniFile {
 public:
  struct Entry {
    std::string value;
    int line = 0;
    mutable bool consumed = false;
  };

  static IniFile parse(const std::string& text, const std::string& origin = "<string>");
  static IniFile parse_file(const std::string& path);

  bool has_section(const std::string& section) const;
  std::vector<std::string> section_names() const;

  std::optional<std::string> get(const std::string& section, const std::string& key) const;
  int line_of(const std::string& section, const std::string& key) const;

  double get_double(const std::string& section, const std::string& key, double fallback) const;
  int get_int(const std::string& section, const std::string& key, int fallback) const;
  bool get_bool(const std::string& section, const std::string& key, bool fallback) const;
  std::string get_string(const std::string& section, const std::string& key,
                         const std::string& fallback) const;
  /// Comma-separated "time:value" pairs.
  std::vector<std::pair<double, double>> get_timed_list(const std::string& section,
                                                        const std::string& key) const;
  std::vector<std::string> get_string_list(const std::string& section,
                                           const std::string& key) const;

  /// Throws ConfigError naming every key that was never consumed.
  void reject_unconsumed(const std::vector<std::string>& known_sections) const;

  const std::string& origin() const { return origin_; }

 private:
  std::string origin_;
  std::map<std::string, std::map<std::string, Entry>> sections_;
};

double parse_double(const std::string& text, const std::string& context);

}  // namespace dcsim
