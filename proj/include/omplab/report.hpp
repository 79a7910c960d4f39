#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "omplab/element_set.hpp"

namespace omplab {

/// A labelled set-valued intermediate result attached to a witness.
struct NamedSet {
  std::string label;
  ElementSet members;

  bool operator==(const NamedSet&) const = default;
};

/// Verdict for one checked item (one axiom, one law, one derivation line, ...).
struct ItemResult {
  std::string label;
  bool pass = true;
  /// Witness elements (pair/triple, or variable values p, q, r in order).
  std::vector<ElementId> witness;
  std::vector<NamedSet> values;
  std::string message;
  /// Offending derivation line, for proof-checking reports.
  std::optional<std::size_t> line;
  /// Number of instances examined.
  std::uint64_t checked = 0;

  bool operator==(const ItemResult&) const = default;

  void fail(std::vector<ElementId> w, std::string msg = {}) {
    pass = false;
    witness = std::move(w);
    message = std::move(msg);
  }
};

/// Structured verdict produced by every checker. Failures are data.
struct ModelReport {
  std::string check;
  std::vector<ItemResult> items;

  bool pass() const {
    return std::all_of(items.begin(), items.end(), [](const ItemResult& i) { return i.pass; });
  }

  const ItemResult* first_failure() const {
    auto it = std::find_if(items.begin(), items.end(), [](const ItemResult& i) { return !i.pass; });
    return it == items.end() ? nullptr : &*it;
  }

  const ItemResult* find(std::string_view label) const {
    auto it = std::find_if(items.begin(), items.end(), [&](const ItemResult& i) { return i.label == label; });
    return it == items.end() ? nullptr : &*it;
  }

  std::vector<std::string> failing_labels() const {
    std::vector<std::string> out;
    for (const auto& i : items)
      if (!i.pass) out.push_back(i.label);
    return out;
  }

  ItemResult& add(std::string label) {
    items.push_back(ItemResult{});
    items.back().label = std::move(label);
    return items.back();
  }

  bool operator==(const ModelReport&) const = default;
};

} // namespace omplab
