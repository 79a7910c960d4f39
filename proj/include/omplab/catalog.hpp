#pragma once

#include <algorithm>
#include <bit>
#include <cctype>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "omplab/poset.hpp"

namespace omplab {

namespace detail {

// "{1,3}" for a nonempty proper subset of {1..m}; bounds are "0" and "1".
inline std::string subset_name(unsigned mask, unsigned m) {
  if (mask == 0) return "0";
  if (mask == (1U << m) - 1) return "1";
  std::string s = "{";
  bool first = true;
  for (unsigned i = 0; i < m; ++i)
    if (mask & (1U << i)) {
      if (!first) s += ',';
      s += std::to_string(i + 1);
      first = false;
    }
  return s + "}";
}

// Subsets of {1..m} as bitmasks, ordered by cardinality, then
// lexicographically by their member lists.
inline OrthoPoset subset_family(unsigned m, const std::vector<unsigned>& masks_in) {
  std::vector<unsigned> masks = masks_in;
  auto members = [](unsigned mask) {
    std::vector<unsigned> v;
    for (unsigned i = 0; mask; ++i, mask >>= 1)
      if (mask & 1U) v.push_back(i);
    return v;
  };
  std::sort(masks.begin(), masks.end(), [&](unsigned a, unsigned b) {
    if (std::popcount(a) != std::popcount(b)) return std::popcount(a) < std::popcount(b);
    return members(a) < members(b);
  });
  const std::size_t n = masks.size();
  const unsigned full = (1U << m) - 1;
  std::vector<ElementSet> up(n);
  std::vector<ElementId> invol(n);
  std::vector<std::string> names(n);
  for (ElementId i = 0; i < n; ++i) {
    names[i] = subset_name(masks[i], m);
    for (ElementId j = 0; j < n; ++j) {
      if ((masks[i] & ~masks[j]) == 0) up[i].insert(j);
      if (masks[j] == (full & ~masks[i])) invol[i] = j;
    }
  }
  return OrthoPoset(BoundedPoset(std::move(up), 0, static_cast<ElementId>(n - 1), std::move(names)),
                    std::move(invol));
}

inline std::string atom_name(unsigned i) {
  if (i < 26) return std::string(1, static_cast<char>('a' + i));
  return "x" + std::to_string(i);
}

} // namespace detail

/// Boolean algebra 2^k: subsets of a k-set under inclusion.
inline OrthoPoset make_boolean(int k) {
  if (k < 1 || k > 6) throw ContractError("make_boolean: k must be in [1, 6]");
  std::vector<unsigned> masks;
  for (unsigned s = 0; s < (1U << k); ++s) masks.push_back(s);
  return detail::subset_family(static_cast<unsigned>(k), masks);
}

/// MO_m: m four-element blocks {0, a, a', 1} glued along 0 and 1.
/// Element order: 0, a, a', b, b', ..., 1.
inline OrthoPoset make_mo(int m) {
  if (m < 1 || 2 * m + 2 > static_cast<int>(kMaxElements)) throw ContractError("make_mo: m must be in [1, 31]");
  const auto n = static_cast<std::size_t>(2 * m + 2);
  const auto top = static_cast<ElementId>(n - 1);
  std::vector<std::string> names{"0"};
  std::vector<std::pair<ElementId, ElementId>> covers;
  std::vector<ElementId> invol(n);
  invol[0] = top;
  invol[top] = 0;
  for (unsigned i = 0; i < static_cast<unsigned>(m); ++i) {
    const ElementId a = 1 + 2 * i;
    names.push_back(detail::atom_name(i));
    names.push_back(detail::atom_name(i) + "'");
    invol[a] = a + 1;
    invol[a + 1] = a;
    for (ElementId e : {a, a + 1}) {
      covers.emplace_back(0, e);
      covers.emplace_back(e, top);
    }
  }
  names.push_back("1");
  return OrthoPoset(BoundedPoset::from_covers(n, covers, 0, top, std::move(names)), std::move(invol));
}

/// Even-cardinality subsets of an m-set under inclusion, complement as
/// involution. Not a lattice for m = 6.
inline OrthoPoset make_even_subsets(int m) {
  if (m != 4 && m != 6) throw ContractError("make_even_subsets: m must be 4 or 6");
  std::vector<unsigned> masks;
  for (unsigned s = 0; s < (1U << m); ++s)
    if (std::popcount(s) % 2 == 0) masks.push_back(s);
  return detail::subset_family(static_cast<unsigned>(m), masks);
}

/// Six-element ortholattice 0 < a < b < 1, 0 < b' < a' < 1. Not orthomodular.
inline OrthoPoset make_hexagon() {
  const std::vector<std::pair<ElementId, ElementId>> covers{{0, 1}, {1, 2}, {2, 5}, {0, 3}, {3, 4}, {4, 5}};
  return OrthoPoset(BoundedPoset::from_covers(6, covers, 0, 5, {"0", "a", "b", "b'", "a'", "1"}), {5, 4, 3, 2, 1, 0});
}

struct CatalogEntry {
  std::string name;
  OrthoPoset structure;
  bool is_omp;
  bool is_lattice;
};

/// Standard models. Expected verdicts are re-derived by the validators here
/// and a mismatch is an InternalError.
inline std::vector<CatalogEntry> catalog() {
  std::vector<CatalogEntry> out;
  auto add = [&](std::string name, OrthoPoset p, bool omp, bool lattice) {
    if (validate_omp(p).pass() != omp || is_lattice(p) != lattice)
      throw InternalError("catalog entry " + name + " does not match its expected verdicts");
    out.push_back(CatalogEntry{std::move(name), std::move(p), omp, lattice});
  };
  add("B2", make_boolean(1), true, true);
  add("B4", make_boolean(2), true, true);
  add("B8", make_boolean(3), true, true);
  add("MO2", make_mo(2), true, true);
  add("MO3", make_mo(3), true, true);
  add("Even4", make_even_subsets(4), true, true);
  add("Even6", make_even_subsets(6), true, false);
  add("Hexagon", make_hexagon(), false, true);
  return out;
}

/// Case-insensitive lookup by catalog name.
inline std::optional<CatalogEntry> catalog_entry(std::string_view name) {
  auto lower = [](std::string_view s) {
    std::string o(s);
    std::transform(o.begin(), o.end(), o.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return o;
  };
  for (auto& e : catalog())
    if (lower(e.name) == lower(name)) return e;
  return std::nullopt;
}

/// Orthomodular catalog entries only.
inline std::vector<CatalogEntry> catalog_omps() {
  std::vector<CatalogEntry> out;
  for (auto& e : catalog())
    if (e.is_omp) out.push_back(std::move(e));
  return out;
}

} // namespace omplab
