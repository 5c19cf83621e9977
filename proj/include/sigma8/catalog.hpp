#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sigma8/io.hpp"

namespace sigma8 {

struct CatalogEntry {
  std::string name;
  std::string description;
  Document document;
  /// Known signature for 4k-dimensional entries over ℤ.
  std::optional<int> signature;
};

std::vector<std::string> catalog_names();
/// SchemaError for unknown names.
CatalogEntry catalog_entry(const std::string& name);
std::vector<CatalogEntry> catalog();

/// A source is `catalog:NAME`, `-` (standard input) or a file path.
Document load_document(const std::string& source);

}  // namespace sigma8
