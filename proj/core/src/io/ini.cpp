#include "dcsim/io/ini.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace dcsim {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

}  // namespace

double parse_double(const std::string& text, const std::string& context) {
  const std::string t = trim(text);
  char* end = nullptr;
  const double v = std::strtod(t.c_str(), &end);
  if (end == t.c_str() || *end != '\0')
    throw ConfigError(context + ": not a number: '" + t + "'");
  return v;
}

IniFile IniFile::parse(const std::string& text, const std::string& origin) {
  IniFile ini;
  ini.origin_ = origin;
  std::istringstream in(text);
  std::string line;
  std::string section;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find_first_of("#;");
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']')
        throw ConfigError(origin + ":" + std::to_string(lineno) + ": malformed section header");
      section = trim(line.substr(1, line.size() - 2));
      if (section.empty())
        throw ConfigError(origin + ":" + std::to_string(lineno) + ": empty section name");
      ini.sections_[section];  // sections may be empty
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError(origin + ":" + std::to_string(lineno) + ": expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty())
      throw ConfigError(origin + ":" + std::to_string(lineno) + ": empty key");
    if (section.empty())
      throw ConfigError(origin + ":" + std::to_string(lineno) + ": key outside any [section]");
    auto& sec = ini.sections_[section];
    if (sec.count(key))
      throw ConfigError(origin + ":" + std::to_string(lineno) + ": duplicate key '" + section +
                        "." + key + "'");
    sec[key] = Entry{value, lineno, false};
  }
  return ini;
}

IniFile IniFile::parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open scenario file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str(), path);
}

bool IniFile::has_section(const std::string& section) const { return sections_.count(section); }

std::vector<std::string> IniFile::section_names() const {
  std::vector<std::string> out;
  for (const auto& [name, _] : sections_) out.push_back(name);
  return out;
}

std::optional<std::string> IniFile::get(const std::string& section, const std::string& key) const {
  auto s = sections_.find(section);
  if (s == sections_.end()) return std::nullopt;
  auto k = s->second.find(key);
  if (k == s->second.end()) return std::nullopt;
  k->second.consumed = true;
  return k->second.value;
}

int IniFile::line_of(const std::string& section, const std::string& key) const {
  auto s = sections_.find(section);
  if (s == sections_.end()) return 0;
  auto k = s->second.find(key);
  return k == s->second.end() ? 0 : k->second.line;
}

double IniFile::get_double(const std::string& section, const std::string& key,
                           double fallback) const {
  auto v = get(section, key);
  if (!v) return fallback;
  return parse_double(*v, origin_ + ":" + std::to_string(line_of(section, key)) + ": " + section +
                              "." + key);
}

int IniFile::get_int(const std::string& section, const std::string& key, int fallback) const {
  auto v = get(section, key);
  if (!v) return fallback;
  const double d = parse_double(*v, section + "." + key);
  const int i = static_cast<int>(d);
  if (static_cast<double>(i) != d)
    throw ConfigError(origin_ + ":" + std::to_string(line_of(section, key)) + ": " + section +
                      "." + key + " must be an integer");
  return i;
}

bool IniFile::get_bool(const std::string& section, const std::string& key, bool fallback) const {
  auto v = get(section, key);
  if (!v) return fallback;
  std::string t = *v;
  std::transform(t.begin(), t.end(), t.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (t == "on" || t == "true" || t == "1" || t == "yes") return true;
  if (t == "off" || t == "false" || t == "0" || t == "no") return false;
  throw ConfigError(origin_ + ":" + std::to_string(line_of(section, key)) + ": " + section + "." +
                    key + ": expected on/off, got '" + *v + "'");
}

std::string IniFile::get_string(const std::string& section, const std::string& key,
                                const std::string& fallback) const {
  auto v = get(section, key);
  return v ? *v : fallback;
}

std::vector<std::pair<double, double>> IniFile::get_timed_list(const std::string& section,
                                                               const std::string& key) const {
  std::vector<std::pair<double, double>> out;
  auto v = get(section, key);
  if (!v) return out;
  std::istringstream in(*v);
  std::string item;
  const std::string ctx = origin_ + ":" + std::to_string(line_of(section, key)) + ": " + section +
                          "." + key;
  while (std::getline(in, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos)
      throw ConfigError(ctx + ": expected time:value pairs separated by commas");
    out.emplace_back(parse_double(item.substr(0, colon), ctx),
                     parse_double(item.substr(colon + 1), ctx));
  }
  return out;
}

std::vector<std::string> IniFile::get_string_list(const std::string& section,
                                                  const std::string& key) const {
  std::vector<std::string> out;
  auto v = get(section, key);
  if (!v) return out;
  std::istringstream in(*v);
  std::string item;
  while (std::getline(in, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

void IniFile::reject_unconsumed(const std::vector<std::string>& known_sections) const {
  for (const auto& [section, keys] : sections_) {
    if (std::find(known_sections.begin(), known_sections.end(), section) ==
        known_sections.end())
      throw ConfigError(origin_ + ": unknown section [" + section + "]");
    for (const auto& [key, entry] : keys) {
      if (!entry.consumed)
        throw ConfigError(origin_ + ":" + std::to_string(entry.line) + ": unknown key '" +
                          section + "." + key + "'");
    }
  }
}

}  // namespace dcsim
