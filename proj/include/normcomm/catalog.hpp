#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "normcomm/algebra.hpp"

namespace normcomm {

struct NamedSubset {
  std::string name;
  Subset subset;
};

struct CatalogEntry {
  std::string name;
  FiniteAlgebra algebra;
  std::vector<NamedSubset> distinguished;

  /// Throws InvalidArgument when no distinguished subset has this name.
  const Subset& subset(std::string_view name) const;
};

/// Names of the built-in catalog, in catalog order (groups, rings, monoids).
const std::vector<std::string>& catalog_names();

/// Builds (once, thread-safely) and returns the named entry. Throws
/// InvalidArgument for unknown names.
const CatalogEntry& catalog_entry(std::string_view name);

/// Every entry in catalog order.
std::vector<const CatalogEntry*> catalog();

}  // namespace normcomm
