#pragma once

#include <array>
#include <string>
#include <vector>

#include "omplab/iop_table.hpp"
#include "omplab/poset.hpp"
#include "omplab/report.hpp"

namespace omplab {

/// x -> y := y v Max L(x', y').
///
/// Every m in Max L(x', y') lies below y', so each join y v m is an
/// orthogonal join and exists in any orthoposet; the orthomodular law is not
/// needed to evaluate the operator. The result is a plain set: it is not
/// reduced to an antichain.
inline ElementSet arrow(const OrthoPoset& p, ElementId x, ElementId y) {
  const ElementSet bounds = max_of(p, lower_cone(p, ElementSet{p.invol(x), p.invol(y)}));
  ElementSet out;
  for (ElementId m : bounds) {
    auto j = join(p, y, m);
    if (!j) throw InternalError("y v m undefined for m in Max L(x', y')");
    out.insert(*j);
  }
  if (out.empty()) throw InternalError("x -> y is empty");
  return out;
}

/// The full table of `arrow` over p, with p's names and zero.
inline IopTable implication_table(const OrthoPoset& p) {
  const std::size_t n = p.size();
  std::vector<ElementSet> entries(n * n);
  for (ElementId x = 0; x < n; ++x)
    for (ElementId y = 0; y < n; ++y) entries[x * n + y] = arrow(p, x, y);
  return IopTable(n, p.zero(), std::move(entries), p.names());
}

/// A -> B = 1: every x in A has some y in B with x -> y = {1}.
inline bool g_holds(const OrthoPoset& p, ElementSet a, ElementSet b) {
  if (a.empty() || b.empty()) throw ContractError("g_holds needs nonempty operands");
  const ElementSet one = ElementSet::singleton(p.one());
  for (ElementId x : p.check(a)) {
    bool found = false;
    for (ElementId y : p.check(b))
      if (arrow(p, x, y) == one) {
        found = true;
        break;
      }
    if (!found) return false;
  }
  return true;
}

/// Checks the eleven elementary properties of the implication, for every
/// pair (x, y), on an orthomodular poset. Set-valued subterms are evaluated
/// with the pointwise lifting; "= e" means "= {e}".
inline ModelReport prop1_suite(const OrthoPoset& p) {
  const IopTable t = implication_table(p);
  const std::size_t n = p.size();
  const auto one = ElementSet::singleton(p.one());
  auto single = [](ElementId e) { return ElementSet::singleton(e); };

  ModelReport report{"prop1_suite", {}};
  static constexpr std::array<const char*, 11> labels = {"(i)",   "(ii)", "(iii)", "(iv)", "(v)", "(vi)",
                                                         "(vii)", "(viii)", "(ix)", "(x)", "(xi)"};
  for (const char* l : labels) report.add(l);
  auto& it = report.items;

  auto record = [&](std::size_t idx, bool ok, ElementId x, ElementId y, std::vector<NamedSet> values) {
    ItemResult& item = it[idx];
    ++item.checked;
    if (!ok && item.pass) {
      item.fail({x, y});
      item.values = std::move(values);
    }
  };

  for (ElementId x = 0; x < n; ++x) {
    for (ElementId y = 0; y < n; ++y) {
      const ElementSet xy = t.arrow(x, y);
      const ElementId xc = p.invol(x);
      const ElementId yc = p.invol(y);

      if (y == p.zero()) record(0, t.arrow(x, p.zero()) == single(xc), x, y, {{"x->0", t.arrow(x, p.zero())}});
      record(1, p.leq(x, y) == (xy == one), x, y, {{"x->y", xy}});
      if (y == xc) record(2, xy == single(xc), x, y, {{"x->x'", xy}});

      if (orthogonal(p, x, y)) {
        const ElementId xy_join = detail::must(join(p, x, y), "orthogonal join undefined");
        auto k = join(p, p.invol(xy_join), y);
        record(3, k && xy == single(*k), x, y, {{"x->y", xy}});
        const ElementSet twice = lift_arrow(t, xy, single(y));
        record(4, twice == single(xy_join), x, y, {{"(x->y)->y", twice}});
        const ElementSet via_neg = t.arrow(xc, y);
        record(5, via_neg == single(xy_join), x, y, {{"x'->y", via_neg}});
        const ElementSet thrice = lift_arrow(t, twice, single(y));
        record(7, thrice == xy, x, y, {{"((x->y)->y)->y", thrice}, {"x->y", xy}});
      }
      if (p.leq(y, x)) {
        auto k = join(p, xc, y);
        record(6, k && xy == single(*k), x, y, {{"x->y", xy}});
      }
      if (p.leq(x, y)) {
        const ElementSet s1 = lift_arrow(t, lift_arrow(t, single(yc), single(x)), single(x));
        const ElementSet s2 = lift_arrow(t, lift_neg(t, s1), single(x));
        const ElementSet s3 = lift_arrow(t, s2, single(x));
        record(8, s3 == single(y), x, y, {{"(((y'->x)->x)'->x)->x", s3}});
      }
      if (y == x) {
        const ElementSet s = lift_arrow(t, t.arrow(xc, x), single(x));
        record(9, s == one, x, y, {{"(x'->x)->x", s}});
      }
      const ElementSet k = lift_arrow(t, single(x), t.arrow(y, x));
      record(10, k == one, x, y, {{"x->(y->x)", k}});
    }
  }
  return report;
}

/// Condition (C): x -> y equals {(y -> u) -> u | u maximal among common lower
/// bounds of x' and y'}, where order and maximality are read off the table
/// through "-> = 1" statements only.
inline ModelReport condition_c_check(const IopTable& t) {
  const std::size_t n = t.size();
  std::vector<ElementSet> below(n);  // below[v] = {u | u -> v = 1}
  for (ElementId u = 0; u < n; ++u)
    for (ElementId v : t.ones_row(u)) below[v].insert(u);

  ModelReport report{"condition_c_check", {}};
  ItemResult& item = report.add("C");
  for (ElementId x = 0; x < n; ++x) {
    for (ElementId y = 0; y < n; ++y) {
      ++item.checked;
      const ElementSet common = below[t.neg(x)] & below[t.neg(y)];
      ElementSet rhs;
      for (ElementId u : common) {
        if (!(t.ones_row(u) & common).subset_of(ElementSet::singleton(u))) continue;
        rhs |= lift_arrow(t, t.arrow(y, u), ElementSet::singleton(u));
      }
      if (rhs != t.arrow(x, y)) {
        item.fail({x, y}, "x -> y differs from the right-hand side of (C)");
        item.values = {{"x->y", t.arrow(x, y)}, {"rhs", rhs}};
        return report;
      }
    }
  }
  return report;
}

inline ModelReport condition_c_check(const OrthoPoset& p) { return condition_c_check(implication_table(p)); }

} // namespace omplab
