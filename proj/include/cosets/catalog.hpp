#pragma once

// Group catalog: one group per line, "name;degree;generators;expected_order",
// '#' starts a comment.

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "cosets/group.hpp"

namespace cosets {

struct GroupCatalogEntry {
  std::string name;
  std::size_t degree = 0;
  std::vector<std::string> generator_words;  // cycle notation, one per generator
  BigInt expected_order;
  GeneratedGroup group;
  int line = 0;
};

/// One non-comment line.  Throws ParseError (with the line number) on bad
/// syntax and Error naming the entry when the built order differs.
GroupCatalogEntry parse_catalog_line(std::string_view text, int line);

/// Throws ParseError on a duplicate name.
std::vector<GroupCatalogEntry> parse_catalog(std::istream& in);

/// Throws Error if the file cannot be read.
std::vector<GroupCatalogEntry> load_catalog(const std::string& path);

/// nullptr when absent.
const GroupCatalogEntry* find_entry(const std::vector<GroupCatalogEntry>& catalog, std::string_view name);

/// A catalog name, or inline generators "degree:gens" / "gens" (degree is
/// then the largest point mentioned).
GeneratedGroup resolve_group(std::string_view text, const std::vector<GroupCatalogEntry>& catalog);

}  // namespace cosets
