#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "omplab/element_set.hpp"
#include "omplab/errors.hpp"
#include "omplab/report.hpp"

namespace omplab {

namespace detail {

inline std::vector<std::string> default_names(std::size_t n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 0; i < n; ++i) names.push_back("e" + std::to_string(i));
  return names;
}

} // namespace detail

/// Finite bounded poset. The order is kept as its full reflexive-transitive
/// relation, one up-set and one down-set bitmask per element.
class BoundedPoset {
public:
  /// `up[x]` must hold exactly {y | x <= y}. Throws StructureError naming the
  /// first violated invariant.
  BoundedPoset(std::vector<ElementSet> up, ElementId zero, ElementId one,
               std::vector<std::string> names = {})
      : up_(std::move(up)), zero_(zero), one_(one), names_(std::move(names)) {
    const std::size_t n = up_.size();
    if (n == 0) throw StructureError("poset has no elements");
    if (n > kMaxElements) throw StructureError("poset has more than 64 elements");
    if (names_.empty()) names_ = detail::default_names(n);
    if (names_.size() != n) throw StructureError("name count does not match element count");
    if (zero_ >= n || one_ >= n) throw StructureError("zero or one out of range");

    const ElementSet all = ElementSet::full(n);
    down_.assign(n, ElementSet{});
    for (ElementId x = 0; x < n; ++x) {
      if (!up_[x].subset_of(all)) throw StructureError("order row of " + names_[x] + " references unknown elements");
      for (ElementId y : up_[x]) down_[y].insert(x);
    }
    for (ElementId x = 0; x < n; ++x)
      if (!up_[x].contains(x)) throw StructureError("not reflexive at " + names_[x]);
    for (ElementId x = 0; x < n; ++x)
      for (ElementId y : up_[x])
        if (y != x && up_[y].contains(x))
          throw StructureError("not antisymmetric: " + names_[x] + " <= " + names_[y] + " and " + names_[y] + " <= " + names_[x]);
    for (ElementId x = 0; x < n; ++x)
      for (ElementId y : up_[x])
        if (!up_[y].subset_of(up_[x])) {
          const ElementId z = (up_[y] - up_[x]).first();
          throw StructureError("not transitive: " + names_[x] + " <= " + names_[y] + " <= " + names_[z]);
        }
    if (up_[zero_] != all) throw StructureError("zero " + names_[zero_] + " is not below every element");
    if (down_[one_] != all) throw StructureError("one " + names_[one_] + " is not above every element");
  }

  /// Builds the order as the reflexive-transitive closure of cover edges a < b.
  static BoundedPoset from_covers(std::size_t n, std::span<const std::pair<ElementId, ElementId>> covers,
                                  ElementId zero, ElementId one, std::vector<std::string> names = {}) {
    if (n == 0 || n > kMaxElements) throw StructureError("element count must be in [1, 64]");
    std::vector<ElementSet> up(n);
    for (ElementId x = 0; x < n; ++x) up[x].insert(x);
    for (auto [a, b] : covers) {
      if (a >= n || b >= n) throw StructureError("cover edge references unknown element");
      up[a].insert(b);
    }
    // Warshall over bit rows.
    for (ElementId k = 0; k < n; ++k)
      for (ElementId i = 0; i < n; ++i)
        if (up[i].contains(k)) up[i] |= up[k];
    return BoundedPoset(std::move(up), zero, one, std::move(names));
  }

  std::size_t size() const noexcept { return up_.size(); }
  ElementSet universe() const { return ElementSet::full(size()); }
  ElementId zero() const noexcept { return zero_; }
  ElementId one() const noexcept { return one_; }

  bool leq(ElementId x, ElementId y) const { return up_[check(x)].contains(check(y)); }
  bool less(ElementId x, ElementId y) const { return x != y && leq(x, y); }
  ElementSet up(ElementId x) const { return up_[check(x)]; }
  ElementSet down(ElementId x) const { return down_[check(x)]; }

  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(ElementId x) const { return names_[check(x)]; }

  /// Cover pairs (a, b) with a < b and nothing strictly between, in index order.
  std::vector<std::pair<ElementId, ElementId>> covers() const {
    std::vector<std::pair<ElementId, ElementId>> out;
    for (ElementId a = 0; a < size(); ++a)
      for (ElementId b : up_[a]) {
        if (b == a) continue;
        ElementSet between = (up_[a] & down_[b]) - ElementSet{a, b};
        if (between.empty()) out.emplace_back(a, b);
      }
    return out;
  }

  ElementId check(ElementId x) const {
    if (x >= up_.size()) throw StructureError("element index " + std::to_string(x) + " out of range");
    return x;
  }
  ElementSet check(ElementSet a) const {
    if (!a.subset_of(universe())) throw StructureError("element set references elements out of range");
    return a;
  }

  /// Same carrier, same order, same bounds. Names are presentation only.
  bool operator==(const BoundedPoset& o) const { return up_ == o.up_ && zero_ == o.zero_ && one_ == o.one_; }

private:
  std::vector<ElementSet> up_;
  std::vector<ElementSet> down_;
  ElementId zero_;
  ElementId one_;
  std::vector<std::string> names_;
};

/// L(A) = {x | x <= y for all y in A}; L(empty) is everything.
inline ElementSet lower_cone(const BoundedPoset& p, ElementSet a) {
  ElementSet out = p.universe();
  for (ElementId y : p.check(a)) out &= p.down(y);
  return out;
}

/// U(A) = {x | y <= x for all y in A}.
inline ElementSet upper_cone(const BoundedPoset& p, ElementSet a) {
  ElementSet out = p.universe();
  for (ElementId y : p.check(a)) out &= p.up(y);
  return out;
}

/// Maximal elements of A.
inline ElementSet max_of(const BoundedPoset& p, ElementSet a) {
  ElementSet out;
  for (ElementId x : p.check(a))
    if ((p.up(x) & a) == ElementSet::singleton(x)) out.insert(x);
  return out;
}

/// Minimal elements of A.
inline ElementSet min_of(const BoundedPoset& p, ElementSet a) {
  ElementSet out;
  for (ElementId x : p.check(a))
    if ((p.down(x) & a) == ElementSet::singleton(x)) out.insert(x);
  return out;
}

/// Least element of A, if A has one.
inline std::optional<ElementId> least_of(const BoundedPoset& p, ElementSet a) {
  for (ElementId z : p.check(a))
    if (a.subset_of(p.up(z))) return z;
  return std::nullopt;
}

inline std::optional<ElementId> greatest_of(const BoundedPoset& p, ElementSet a) {
  for (ElementId z : p.check(a))
    if (a.subset_of(p.down(z))) return z;
  return std::nullopt;
}

/// Partial supremum; nullopt when U(x, y) has no least element.
inline std::optional<ElementId> join(const BoundedPoset& p, ElementId x, ElementId y) {
  return least_of(p, p.up(x) & p.up(y));
}

/// Partial infimum.
inline std::optional<ElementId> meet(const BoundedPoset& p, ElementId x, ElementId y) {
  return greatest_of(p, p.down(x) & p.down(y));
}

/// Bounded poset with an antitone involutive complementation in which every
/// orthogonal pair has a join. The orthomodular law is not required here;
/// `validate_omp` decides it.
class OrthoPoset : public BoundedPoset {
public:
  OrthoPoset(BoundedPoset order, std::vector<ElementId> invol)
      : BoundedPoset(std::move(order)), invol_(std::move(invol)) {
    if (auto why = violation(*this, invol_)) throw StructureError(*why);
  }

  /// First violated orthoposet invariant for `invol` on `p`, or nullopt.
  static std::optional<std::string> violation(const BoundedPoset& p, std::span<const ElementId> invol) {
    const std::size_t n = p.size();
    const auto& nm = p.names();
    if (invol.size() != n) return "involution has wrong length";
    for (ElementId x = 0; x < n; ++x)
      if (invol[x] >= n) return "involution of " + nm[x] + " out of range";
    for (ElementId x = 0; x < n; ++x)
      if (invol[invol[x]] != x) return "not an involution at " + nm[x] + ": " + nm[x] + "'' = " + nm[invol[invol[x]]];
    for (ElementId x = 0; x < n; ++x)
      for (ElementId y : p.up(x))
        if (!p.leq(invol[y], invol[x]))
          return "not antitone: " + nm[x] + " <= " + nm[y] + " but " + nm[invol[y]] + " !<= " + nm[invol[x]];
    for (ElementId x = 0; x < n; ++x) {
      auto j = join(p, x, invol[x]);
      if (!j || *j != p.one()) return "not a complementation: " + nm[x] + " v " + nm[invol[x]] + " is not one";
      auto m = meet(p, x, invol[x]);
      if (!m || *m != p.zero()) return "not a complementation: " + nm[x] + " ^ " + nm[invol[x]] + " is not zero";
    }
    for (ElementId x = 0; x < n; ++x)
      for (ElementId y : p.down(invol[x]))
        if (!join(p, x, y)) return "orthogonal pair " + nm[x] + ", " + nm[y] + " has no join";
    return std::nullopt;
  }

  ElementId invol(ElementId x) const { return invol_[check(x)]; }
  const std::vector<ElementId>& involution() const noexcept { return invol_; }

  /// A' = {x' | x in A}
  ElementSet invol(ElementSet a) const {
    ElementSet out;
    for (ElementId x : check(a)) out.insert(invol_[x]);
    return out;
  }

  bool operator==(const OrthoPoset& o) const {
    return static_cast<const BoundedPoset&>(*this) == static_cast<const BoundedPoset&>(o) && invol_ == o.invol_;
  }

private:
  std::vector<ElementId> invol_;
};

/// x ⊥ y, i.e. x <= y'.
inline bool orthogonal(const OrthoPoset& p, ElementId x, ElementId y) { return p.leq(x, p.invol(y)); }

inline bool is_lattice(const BoundedPoset& p) {
  for (ElementId x = 0; x < p.size(); ++x)
    for (ElementId y = x + 1; y < p.size(); ++y)
      if (!join(p, x, y) || !meet(p, x, y)) return false;
  return true;
}

namespace detail {

inline ElementId must(std::optional<ElementId> v, const char* what) {
  if (!v) throw InternalError(what);
  return *v;
}

} // namespace detail

/// Orthomodular law: x <= y implies (y' v x)' v x = y. Pairs are visited in
/// lexicographic index order; the first failing pair is the witness.
inline ModelReport validate_omp(const OrthoPoset& p) {
  ModelReport report{"validate_omp", {}};
  ItemResult& item = report.add("OM");
  for (ElementId x = 0; x < p.size(); ++x) {
    for (ElementId y : p.up(x)) {
      ++item.checked;
      // Both joins are orthogonal joins, so they exist in any orthoposet.
      const ElementId inner = detail::must(join(p, p.invol(y), x), "y' v x undefined for x <= y");
      const ElementId outer_left = p.invol(inner);
      if (!orthogonal(p, outer_left, x)) throw InternalError("(y' v x)' is not orthogonal to x");
      const ElementId result = detail::must(join(p, outer_left, x), "(y' v x)' v x undefined");
      if (result != y) {
        item.fail({x, y}, "(y' v x)' v x = " + p.name(result) + " but y = " + p.name(y));
        item.values.push_back({"y' v x", ElementSet::singleton(inner)});
        item.values.push_back({"(y' v x)' v x", ElementSet::singleton(result)});
        return report;
      }
    }
  }
  return report;
}

/// Dual form of the orthomodular law: x <= y implies x v (y ^ x') = y.
inline ModelReport validate_omp_dual(const OrthoPoset& p) {
  ModelReport report{"validate_omp_dual", {}};
  ItemResult& item = report.add("OM-dual");
  for (ElementId x = 0; x < p.size(); ++x) {
    for (ElementId y : p.up(x)) {
      ++item.checked;
      auto m = meet(p, y, p.invol(x));
      if (!m) {
        item.fail({x, y}, "y ^ x' undefined");
        return report;
      }
      auto j = join(p, x, *m);
      if (!j || *j != y) {
        item.fail({x, y}, j ? "x v (y ^ x') = " + p.name(*j) + " but y = " + p.name(y) : "x v (y ^ x') undefined");
        return report;
      }
    }
  }
  return report;
}

/// If x v y is defined then x' ^ y' is defined and equals (x v y)'; dually.
inline ModelReport de_morgan_check(const OrthoPoset& p) {
  ModelReport report{"de_morgan_check", {}};
  ItemResult& joins = report.add("(x v y)' = x' ^ y'");
  ItemResult& meets = report.add("(x ^ y)' = x' v y'");
  for (ElementId x = 0; x < p.size(); ++x) {
    for (ElementId y = 0; y < p.size(); ++y) {
      if (auto j = join(p, x, y); j && joins.pass) {
        ++joins.checked;
        auto m = meet(p, p.invol(x), p.invol(y));
        if (!m || *m != p.invol(*j)) joins.fail({x, y}, m ? "x' ^ y' = " + p.name(*m) : "x' ^ y' undefined");
      }
      if (auto m = meet(p, x, y); m && meets.pass) {
        ++meets.checked;
        auto j = join(p, p.invol(x), p.invol(y));
        if (!j || *j != p.invol(*m)) meets.fail({x, y}, j ? "x' v y' = " + p.name(*j) : "x' v y' undefined");
      }
    }
  }
  return report;
}

} // namespace omplab
