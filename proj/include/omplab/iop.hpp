#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "omplab/implication.hpp"
#include "omplab/iop_table.hpp"
#include "omplab/poset.hpp"
#include "omplab/report.hpp"

namespace omplab {

inline constexpr std::array<const char*, 10> kAxiomLabels = {"O1", "O2", "O3", "O4", "O5",
                                                             "O6", "O7", "O8", "O9", "O10"};

/// Verdicts for the ten implication-orthomodular-poset axioms, in order.
struct AxiomReport {
  std::array<ItemResult, 10> axioms;

  bool all_pass() const {
    for (const auto& a : axioms)
      if (!a.pass) return false;
    return true;
  }

  /// 1-based numbers of failing axioms.
  std::vector<int> failing() const {
    std::vector<int> out;
    for (int i = 0; i < 10; ++i)
      if (!axioms[i].pass) out.push_back(i + 1);
    return out;
  }

  const ItemResult& axiom(int number) const { return axioms.at(static_cast<std::size_t>(number - 1)); }

  ModelReport to_report() const {
    ModelReport r{"check_axioms", {}};
    r.items.assign(axioms.begin(), axioms.end());
    return r;
  }
};

/// Thrown when a table handed to build_omp_from_iop fails an axiom.
class AxiomError : public std::runtime_error {
public:
  explicit AxiomError(AxiomReport report)
      : std::runtime_error("table fails axiom " + std::string(first_label(report))), report_(std::move(report)) {}
  const AxiomReport& report() const noexcept { return report_; }

private:
  static const char* first_label(const AxiomReport& r) {
    auto f = r.failing();
    return f.empty() ? "?" : kAxiomLabels[static_cast<std::size_t>(f.front() - 1)];
  }
  AxiomReport report_;
};

/// Checks (O1)-(O10). Outermost "... = 1" judgments between sets use the
/// lifted reading (every member on the left reaches some member on the right);
/// inner set-valued subterms use the pointwise lifting; "= y" is equality
/// with {y}. Each axiom reports its first witness in lexicographic order.
inline AxiomReport check_axioms(const IopTable& t) {
  const std::size_t n = t.size();
  const ElementId zero = t.zero();
  auto single = [](ElementId e) { return ElementSet::singleton(e); };

  AxiomReport r;
  for (std::size_t i = 0; i < 10; ++i) r.axioms[i].label = kAxiomLabels[i];
  auto& a = r.axioms;
  auto fail = [](ItemResult& item, std::vector<ElementId> w, std::vector<NamedSet> values = {}) {
    if (!item.pass) return;
    item.fail(std::move(w));
    item.values = std::move(values);
  };

  for (ElementId x = 0; x < n; ++x) {
    // O1: 0 -> x = x -> x = 1
    ++a[0].checked;
    if (!t.is_one(zero, x) || !t.is_one(x, x)) fail(a[0], {x}, {{"0->x", t.arrow(zero, x)}, {"x->x", t.arrow(x, x)}});
    // O4: x'' = x
    ++a[3].checked;
    if (t.neg(t.neg(x)) != x) fail(a[3], {x}, {{"x''", single(t.neg(t.neg(x)))}});
    // O9: (x' -> x) -> x = 1
    ++a[8].checked;
    const ElementSet lhs9 = t.arrow(t.neg(x), x);
    if (!g_holds(t, lhs9, single(x))) fail(a[8], {x}, {{"x'->x", lhs9}});

    for (ElementId y = 0; y < n; ++y) {
      const bool xy_one = t.is_one(x, y);
      // O2
      ++a[1].checked;
      if (xy_one && t.is_one(y, x) && x != y) fail(a[1], {x, y});
      // O6
      if (xy_one) {
        ++a[5].checked;
        const ElementSet s1 = lift_arrow(t, t.arrow(t.neg(y), x), single(x));
        const ElementSet s2 = lift_arrow(t, lift_neg(t, s1), single(x));
        const ElementSet s3 = lift_arrow(t, s2, single(x));
        if (s3 != single(y)) fail(a[5], {x, y}, {{"(((y'->x)->x)'->x)->x", s3}});
      }
      // O7
      const bool orth = t.is_one(x, t.neg(y));
      ElementSet twice;
      if (orth) {
        ++a[6].checked;
        twice = lift_arrow(t, t.arrow(x, y), single(y));
        if (!g_holds(t, single(x), twice) || !g_holds(t, single(y), twice))
          fail(a[6], {x, y}, {{"(x->y)->y", twice}});
      }
      // O10: x -> (y -> x) = 1
      ++a[9].checked;
      if (!g_holds(t, single(x), t.arrow(y, x))) fail(a[9], {x, y}, {{"y->x", t.arrow(y, x)}});

      for (ElementId z = 0; z < n; ++z) {
        // O3
        if (xy_one && t.is_one(y, z)) {
          ++a[2].checked;
          if (!t.is_one(x, z)) fail(a[2], {x, y, z}, {{"x->z", t.arrow(x, z)}});
        }
        // O5
        if (xy_one) {
          ++a[4].checked;
          if (!g_holds(t, t.arrow(y, z), t.arrow(x, z)))
            fail(a[4], {x, y, z}, {{"y->z", t.arrow(y, z)}, {"x->z", t.arrow(x, z)}});
        }
        // O8
        if (orth && t.is_one(x, z) && t.is_one(y, z)) {
          ++a[7].checked;
          if (!g_holds(t, twice, single(z))) fail(a[7], {x, y, z}, {{"(x->y)->y", twice}});
        }
      }
    }
  }
  return r;
}

/// I(P): the implication table of an orthomodular poset. Rejects non-OMPs.
inline IopTable build_iop_from_omp(const OrthoPoset& p) {
  const ModelReport om = validate_omp(p);
  if (!om.pass()) {
    const auto& w = om.items.front().witness;
    throw StructureError("not an orthomodular poset: (OM) fails at (" + p.name(w[0]) + ", " + p.name(w[1]) + ")");
  }
  IopTable t = implication_table(p);
#ifndef NDEBUG
  if (!check_axioms(t).all_pass()) throw InternalError("I(P) fails an axiom for an orthomodular poset");
#endif
  return t;
}

/// P(I): x <= y iff x -> y = 1, x' := x -> 0, 1 := 0'. Rejects tables that
/// fail an axiom; any defect in the derived structure after that is a
/// checker bug and raises InternalError.
inline OrthoPoset build_omp_from_iop(const IopTable& t) {
  AxiomReport axioms = check_axioms(t);
  if (!axioms.all_pass()) throw AxiomError(std::move(axioms));

  const std::size_t n = t.size();
  std::vector<ElementSet> up(n);
  std::vector<ElementId> invol(n);
  for (ElementId x = 0; x < n; ++x) {
    up[x] = t.ones_row(x);
    invol[x] = t.neg(x);
  }
  std::optional<OrthoPoset> p;
  try {
    p.emplace(BoundedPoset(std::move(up), t.zero(), t.one(), t.names()), std::move(invol));
  } catch (const StructureError& e) {
    throw InternalError(std::string("axioms pass but derived structure is not an orthoposet: ") + e.what());
  }
  if (!validate_omp(*p).pass()) throw InternalError("axioms pass but derived structure is not orthomodular");
  return std::move(*p);
}

/// P(I(P)) = P, compared exactly.
inline ModelReport roundtrip_check(const OrthoPoset& p) {
  ModelReport report{"roundtrip_check", {}};
  ItemResult& item = report.add("P(I(P)) = P");
  item.checked = 1;
  const ModelReport om = validate_omp(p);
  if (!om.pass()) {
    item.fail(om.items.front().witness, "input is not an orthomodular poset");
    return report;
  }
  const OrthoPoset q = build_omp_from_iop(build_iop_from_omp(p));
  if (q == p) return report;
  for (ElementId x = 0; x < p.size(); ++x) {
    if (q.invol(x) != p.invol(x)) {
      item.fail({x}, "complements differ");
      return report;
    }
    for (ElementId y = 0; y < p.size(); ++y)
      if (q.leq(x, y) != p.leq(x, y)) {
        item.fail({x, y}, "order differs");
        return report;
      }
  }
  item.fail({}, "bounds differ");
  return report;
}

/// I(P(T)) = T, compared exactly. Only meaningful for tables satisfying (C);
/// a (C)-violating table is reported as such.
inline ModelReport roundtrip_iop_check(const IopTable& t) {
  ModelReport report{"roundtrip_iop_check", {}};
  ItemResult& item = report.add("I(P(T)) = T");
  item.checked = 1;
  const AxiomReport axioms = check_axioms(t);
  if (!axioms.all_pass()) {
    const int first = axioms.failing().front();
    item.fail(axioms.axiom(first).witness, std::string("axiom ") + kAxiomLabels[first - 1] + " fails");
    return report;
  }
  const ModelReport c = condition_c_check(t);
  if (!c.pass()) {
    item.fail(c.items.front().witness, "(C) violated");
    item.values = c.items.front().values;
    return report;
  }
  const IopTable back = implication_table(build_omp_from_iop(t));
  if (back == t) return report;
  for (ElementId x = 0; x < t.size(); ++x)
    for (ElementId y = 0; y < t.size(); ++y)
      if (back.arrow(x, y) != t.arrow(x, y)) {
        item.fail({x, y}, "entry differs after round trip");
        item.values = {{"T", t.arrow(x, y)}, {"I(P(T))", back.arrow(x, y)}};
        return report;
      }
  return report;
}

} // namespace omplab
