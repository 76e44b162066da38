#include "cosets/catalog.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <set>

#include "cosets/errors.hpp"

namespace cosets {

namespace {

std::string_view trim(std::string_view s) {
  const auto ws = " \t\r\n";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  return s.substr(b, s.find_last_not_of(ws) - b + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i)
    if (i == s.size() || s[i] == sep) {
      out.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  return out;
}

std::uint64_t parse_uint(std::string_view s, const char* what, int line) {
  s = trim(s);
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) throw ParseError(std::string("bad ") + what + " '" + std::string(s) + "'", line);
  return v;
}

// Top-level commas separate generators; commas inside parentheses separate points.
std::vector<std::string> generator_words(std::string_view s, int line) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char ch : s) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (depth < 0 || depth > 1) throw ParseError("unbalanced parentheses in '" + std::string(s) + "'", line);
    if (ch == ',' && depth == 0) {
      out.push_back(std::string(trim(cur)));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (depth != 0) throw ParseError("unbalanced parentheses in '" + std::string(s) + "'", line);
  out.push_back(std::string(trim(cur)));
  return out;
}

std::size_t largest_point(std::string_view s) {
  std::size_t best = 1, cur = 0;
  bool in = false;
  for (char ch : s) {
    if (ch >= '0' && ch <= '9') {
      cur = cur * 10 + static_cast<std::size_t>(ch - '0');
      in = true;
    } else if (in) {
      best = std::max(best, cur);
      cur = 0;
      in = false;
    }
  }
  return in ? std::max(best, cur) : best;
}

}  // namespace

GroupCatalogEntry parse_catalog_line(std::string_view text, int line) {
  const auto fields = split(trim(text), ';');
  if (fields.size() != 4) throw ParseError("expected 4 ';'-separated fields, got " + std::to_string(fields.size()), line);
  GroupCatalogEntry e;
  e.line = line;
  e.name = std::string(trim(fields[0]));
  if (e.name.empty()) throw ParseError("empty group name", line);
  e.degree = parse_uint(fields[1], "degree", line);
  if (e.degree == 0) throw ParseError("degree must be positive", line);
  e.generator_words = generator_words(trim(fields[2]), line);
  e.expected_order = BigInt(parse_uint(fields[3], "expected order", line));
  std::vector<Permutation> gens;
  for (const auto& w : e.generator_words) {
    try {
      gens.push_back(parse_cycles(w, e.degree));
    } catch (const ParseError& err) {
      throw ParseError(e.name + ": " + err.what(), line);
    }
  }
  e.group = group_from_generators(std::move(gens), e.degree);
  if (e.group.order() != e.expected_order)
    throw Error("catalog entry " + e.name + " (line " + std::to_string(line) + "): generators give order " + e.group.order().str() +
                ", expected " + e.expected_order.str());
  return e;
}

std::vector<GroupCatalogEntry> parse_catalog(std::istream& in) {
  std::vector<GroupCatalogEntry> out;
  std::set<std::string> names;
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string_view s = raw;
    if (auto hash = s.find('#'); hash != std::string_view::npos) s = s.substr(0, hash);
    if (trim(s).empty()) continue;
    auto e = parse_catalog_line(s, line);
    if (!names.insert(e.name).second) throw ParseError("duplicate group name " + e.name, line);
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<GroupCatalogEntry> load_catalog(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read catalog " + path);
  return parse_catalog(in);
}

const GroupCatalogEntry* find_entry(const std::vector<GroupCatalogEntry>& catalog, std::string_view name) {
  for (const auto& e : catalog)
    if (e.name == name) return &e;
  return nullptr;
}

GeneratedGroup resolve_group(std::string_view text, const std::vector<GroupCatalogEntry>& catalog) {
  text = trim(text);
  if (const auto* e = find_entry(catalog, text)) return e->group;
  if (text.find('(') == std::string_view::npos) throw ParseError("unknown group '" + std::string(text) + "'");
  std::size_t degree = 0;
  if (auto colon = text.find(':'); colon != std::string_view::npos) {
    degree = parse_uint(text.substr(0, colon), "degree", 0);
    text = text.substr(colon + 1);
  } else {
    degree = largest_point(text);
  }
  return group_from_generators(parse_generator_list(text, degree), degree);
}

}  // namespace cosets
