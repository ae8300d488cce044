#pragma once

#include <string>
#include <vector>

#include "dcsim/scenario/scenario.hpp"

namespace dcsim {

struct CatalogEntry {
  std::string name;
  std::string description;
  std::string text;
};

/// Built-in scenario catalog (also shipped as files under scenarios/).
const std::vector<CatalogEntry>& scenario_catalog();

bool catalog_has(const std::string& name);
const CatalogEntry& catalog_entry(const std::string& name);
Scenario catalog_scenario(const std::string& name);

/// Resolves a CLI argument: an existing file path wins, then a catalog name.
Scenario resolve_scenario(const std::string& path_or_name);

}  // namespace dcsim
