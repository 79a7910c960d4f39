#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "omplab/element_set.hpp"
#include "omplab/errors.hpp"
#include "omplab/poset.hpp"

namespace omplab {

/// A total set-valued implication on a finite carrier: every pair of
/// elements maps to a nonempty element set. Negation x' := x -> 0 must be a
/// singleton for every x, and one := 0'.
class IopTable {
public:
  /// `entries` is row-major: entries[x * n + y] = x -> y.
  IopTable(std::size_t n, ElementId zero, std::vector<ElementSet> entries, std::vector<std::string> names = {})
      : n_(n), zero_(zero), entries_(std::move(entries)), names_(std::move(names)) {
    if (n_ == 0 || n_ > kMaxElements) throw StructureError("element count must be in [1, 64]");
    if (names_.empty()) names_ = detail::default_names(n_);
    if (names_.size() != n_) throw StructureError("name count does not match element count");
    if (zero_ >= n_) throw StructureError("zero out of range");
    if (entries_.size() != n_ * n_) throw StructureError("arrow table is not n x n");
    const ElementSet all = ElementSet::full(n_);
    for (ElementId x = 0; x < n_; ++x)
      for (ElementId y = 0; y < n_; ++y) {
        const ElementSet e = entries_[x * n_ + y];
        if (e.empty()) throw StructureError("arrow " + names_[x] + " -> " + names_[y] + " is empty");
        if (!e.subset_of(all)) throw StructureError("arrow " + names_[x] + " -> " + names_[y] + " references unknown elements");
      }
    neg_.resize(n_);
    for (ElementId x = 0; x < n_; ++x) {
      const ElementSet e = arrow(x, zero_);
      if (!e.is_singleton()) throw StructureError("negation " + names_[x] + " -> 0 is not a singleton");
      neg_[x] = e.first();
    }
    one_ = neg_[zero_];
    const ElementSet one_set = ElementSet::singleton(one_);
    ones_.assign(n_, ElementSet{});
    for (ElementId x = 0; x < n_; ++x)
      for (ElementId y = 0; y < n_; ++y)
        if (arrow(x, y) == one_set) ones_[x].insert(y);
  }

  std::size_t size() const noexcept { return n_; }
  ElementSet universe() const { return ElementSet::full(n_); }
  ElementId zero() const noexcept { return zero_; }
  ElementId one() const noexcept { return one_; }
  ElementId neg(ElementId x) const { return neg_[check(x)]; }

  ElementSet arrow(ElementId x, ElementId y) const { return entries_[check(x) * n_ + check(y)]; }

  /// x -> y = 1, read as equality with the singleton {1}.
  bool is_one(ElementId x, ElementId y) const { return ones_[check(x)].contains(y); }
  /// {y | x -> y = 1}
  ElementSet ones_row(ElementId x) const { return ones_[check(x)]; }

  const std::vector<ElementSet>& entries() const noexcept { return entries_; }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(ElementId x) const { return names_[check(x)]; }

  /// Copy with one entry replaced; re-validated like any other table.
  IopTable with_entry(ElementId x, ElementId y, ElementSet value) const {
    std::vector<ElementSet> e = entries_;
    e[check(x) * n_ + check(y)] = value;
    return IopTable(n_, zero_, std::move(e), names_);
  }

  ElementId check(ElementId x) const {
    if (x >= n_) throw StructureError("element index " + std::to_string(x) + " out of range");
    return x;
  }

  /// Same carrier, zero and entries. Names are presentation only.
  bool operator==(const IopTable& o) const { return n_ == o.n_ && zero_ == o.zero_ && entries_ == o.entries_; }

private:
  std::size_t n_;
  ElementId zero_;
  ElementId one_ = 0;
  std::vector<ElementSet> entries_;
  std::vector<ElementId> neg_;
  std::vector<ElementSet> ones_;
  std::vector<std::string> names_;
};

/// Pointwise-union lifting: A -> B = union of x -> y over x in A, y in B.
inline ElementSet lift_arrow(const IopTable& t, ElementSet a, ElementSet b) {
  if (a.empty() || b.empty()) throw ContractError("lift_arrow needs nonempty operands");
  ElementSet out;
  for (ElementId x : a)
    for (ElementId y : b) out |= t.arrow(x, y);
  return out;
}

/// A' = {x' | x in A}, identical to lift_arrow(A, {0}).
inline ElementSet lift_neg(const IopTable& t, ElementSet a) {
  ElementSet out;
  for (ElementId x : a) out.insert(t.neg(x));
  return out;
}

/// A -> B = 1 in the lifted sense: every x in A has some y in B with x -> y = 1.
inline bool g_holds(const IopTable& t, ElementSet a, ElementSet b) {
  if (a.empty() || b.empty()) throw ContractError("g_holds needs nonempty operands");
  for (ElementId x : a)
    if (!t.ones_row(x).intersects(b)) return false;
  return true;
}

} // namespace omplab
