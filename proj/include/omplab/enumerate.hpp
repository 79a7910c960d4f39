#pragma once

#include <algorithm>
#include <chrono>
#include <compare>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "omplab/catalog.hpp"
#include "omplab/errors.hpp"
#include "omplab/implication.hpp"
#include "omplab/io.hpp"
#include "omplab/iop.hpp"
#include "omplab/poset.hpp"
#include "omplab/report.hpp"

namespace omplab {

// Standard labeling of an orthoposet on n = 2m + 2 elements: 0 at index 0,
// 1 at index n - 1, and the complementary pairs at (1, 2), (3, 4), ...
// Every isomorphism between two standard-labelled orthoposets fixes 0 and 1
// and maps pairs to pairs, so it is a permutation of the m pairs combined
// with a choice of swapping inside each pair. Minimizing the order matrix
// over that group (m! * 2^m elements) gives a complete invariant.

/// Complete isomorphism invariant: the up-rows of the lexicographically
/// least standard relabeling.
struct CanonicalForm {
  std::vector<std::uint64_t> up;

  auto operator<=>(const CanonicalForm&) const = default;
  bool operator==(const CanonicalForm&) const = default;
};

/// Largest pair count canonical_form accepts (n <= 16).
inline constexpr std::size_t kMaxCanonicalPairs = 7;

namespace detail {

inline std::vector<std::string> standard_names(std::size_t n) {
  std::vector<std::string> names{"0"};
  for (std::size_t k = 0; k + 1 < n / 2; ++k) {
    names.push_back(atom_name(static_cast<unsigned>(k)));
    names.push_back(atom_name(static_cast<unsigned>(k)) + "'");
  }
  names.push_back("1");
  return names;
}

inline std::vector<ElementId> standard_involution(std::size_t n) {
  std::vector<ElementId> inv(n);
  inv[0] = static_cast<ElementId>(n - 1);
  inv[n - 1] = 0;
  for (ElementId x = 1; x + 1 < n; x += 2) {
    inv[x] = x + 1;
    inv[x + 1] = x;
  }
  return inv;
}

inline ElementSet map_set(ElementSet s, const std::vector<ElementId>& sigma) {
  ElementSet out;
  for (ElementId x : s) out.insert(sigma[x]);
  return out;
}

} // namespace detail

/// Canonical form of an orthoposet. Precondition: at most 16 elements.
inline CanonicalForm canonical_form(const OrthoPoset& p) {
  const std::size_t n = p.size();
  if (n == 1) return {{1}};
  const std::size_t m = (n - 2) / 2;
  if (m > kMaxCanonicalPairs) throw ContractError("canonical_form supports at most 16 elements");

  // Pairs of p in order of their smaller member.
  std::vector<std::pair<ElementId, ElementId>> pairs;
  for (ElementId x = 0; x < n; ++x)
    if (x != p.zero() && x != p.one() && x < p.invol(x)) pairs.emplace_back(x, p.invol(x));

  std::vector<std::size_t> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<ElementId> sigma(n);
  sigma[p.zero()] = 0;
  sigma[p.one()] = static_cast<ElementId>(n - 1);

  CanonicalForm best;
  std::vector<std::uint64_t> rows(n);
  do {
    for (std::uint64_t swaps = 0; swaps < (std::uint64_t{1} << m); ++swaps) {
      for (std::size_t k = 0; k < m; ++k) {
        const auto [a, b] = pairs[perm[k]];
        const bool s = (swaps >> k) & 1;
        sigma[s ? b : a] = static_cast<ElementId>(2 * k + 1);
        sigma[s ? a : b] = static_cast<ElementId>(2 * k + 2);
      }
      for (ElementId x = 0; x < n; ++x) rows[sigma[x]] = detail::map_set(p.up(x), sigma).bits();
      if (best.up.empty() || rows < best.up) best.up = rows;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

/// The standard-labelled representative of p's isomorphism class, with
/// names 0, a, a', b, b', ..., 1.
inline OrthoPoset from_canonical(const CanonicalForm& c) {
  const std::size_t n = c.up.size();
  std::vector<ElementSet> up;
  up.reserve(n);
  for (auto bits : c.up) up.emplace_back(ElementSet(bits));
  if (n == 1) return OrthoPoset(BoundedPoset(std::move(up), 0, 0, {"0"}), {0});
  return OrthoPoset(BoundedPoset(std::move(up), 0, static_cast<ElementId>(n - 1), detail::standard_names(n)),
                    detail::standard_involution(n));
}

inline OrthoPoset canonicalize(const OrthoPoset& p) { return from_canonical(canonical_form(p)); }

inline bool isomorphic(const OrthoPoset& a, const OrthoPoset& b) {
  return a.size() == b.size() && canonical_form(a) == canonical_form(b);
}

struct EnumResult {
  std::size_t count = 0;
  /// False when the time budget ran out; `count` is then a lower bound.
  bool complete = true;
};

/// Emits one representative per isomorphism class of orthoposets on n
/// elements (0 != 1), in canonical-form order, as standard-labelled
/// structures. Orthoposets have a fixed-point-free involution, so odd n
/// yields none. Precondition: 2 <= n <= 16.
///
/// Search: the order between middle elements is decided one orbit of
/// unordered pairs {x, y} ~ {x', y'} at a time (none, x < y, or y < x;
/// antitony fixes the partner), pruning on partial transitivity.
inline EnumResult enumerate_orthoposets(std::size_t n, const std::function<void(const OrthoPoset&)>& emit,
                                        std::optional<std::chrono::milliseconds> budget = std::nullopt) {
  if (n < 2 || n > 2 * kMaxCanonicalPairs + 2) throw ContractError("enumerate_orthoposets needs 2 <= n <= 16");
  if (n % 2 != 0) return {0, true};
  const auto deadline = budget ? std::optional{std::chrono::steady_clock::now() + *budget} : std::nullopt;
  const std::vector<ElementId> inv = detail::standard_involution(n);
  const ElementId top = static_cast<ElementId>(n - 1);

  struct Orbit {
    ElementId x, y;
  };
  std::vector<Orbit> orbits;
  {
    std::set<std::pair<ElementId, ElementId>> seen;
    for (ElementId x = 1; x < top; ++x)
      for (ElementId y = x + 1; y < top; ++y) {
        if (inv[x] == y || seen.count({x, y})) continue;
        orbits.push_back({x, y});
        seen.insert({x, y});
        seen.insert(std::minmax(inv[x], inv[y]));
      }
  }

  // lt[x]: strict upper neighbours decided so far among middle elements.
  // decided[x]: middle elements whose relation to x is settled.
  std::vector<ElementSet> lt(n), decided(n);
  for (ElementId x = 1; x < top; ++x) decided[x] = ElementSet{x, inv[x]};

  auto set_pair = [&](ElementId a, ElementId b, int choice) {
    decided[a].insert(b);
    decided[b].insert(a);
    if (choice == 1) lt[a].insert(b);
    if (choice == 2) lt[b].insert(a);
  };
  auto unset_pair = [&](ElementId a, ElementId b) {
    decided[a].erase(b);
    decided[b].erase(a);
    lt[a].erase(b);
    lt[b].erase(a);
  };
  // Transitivity among settled pairs: x < y < z with {x, z} settled needs x < z.
  auto consistent = [&] {
    for (ElementId x = 1; x < top; ++x)
      for (ElementId y : lt[x])
        for (ElementId z : lt[y])
          if (decided[x].contains(z) && !lt[x].contains(z)) return false;
    return true;
  };

  std::set<CanonicalForm> classes;
  bool complete = true;
  std::uint64_t nodes = 0;

  auto leaf = [&] {
    std::vector<ElementSet> up(n);
    up[0] = ElementSet::full(n);
    up[top] = ElementSet::singleton(top);
    for (ElementId x = 1; x < top; ++x) up[x] = lt[x] | ElementSet{x, top};
    const BoundedPoset poset(std::move(up), 0, top);
    if (OrthoPoset::violation(poset, inv)) return;
    classes.insert(canonical_form(OrthoPoset(poset, inv)));
  };

  auto dfs = [&](std::size_t i, auto& self) -> void {
    if (!complete) return;
    if (deadline && (++nodes & 0x3ff) == 0 && std::chrono::steady_clock::now() > *deadline) {
      complete = false;
      return;
    }
    if (i == orbits.size()) {
      leaf();
      return;
    }
    const auto [x, y] = orbits[i];
    for (int choice = 0; choice < 3; ++choice) {
      // x < y forces y' < x'; y < x forces x' < y'.
      set_pair(x, y, choice);
      set_pair(inv[y], inv[x], choice);
      if (consistent()) self(i + 1, self);
      unset_pair(x, y);
      unset_pair(inv[y], inv[x]);
    }
  };
  dfs(0, dfs);

  for (const auto& c : classes) emit(from_canonical(c));
  return {classes.size(), complete};
}

/// For every orthoposet class with 2 <= n <= n_max: validate_omp(p) passes
/// iff the implication table built on p satisfies (O1)-(O10). One item per
/// n, labelled "n=K"; discrepancies are reported with the structure in
/// `.omp` text. An exhausted budget is reported as incomplete, not failed.
inline ModelReport equivalence_scan(std::size_t n_max, std::optional<std::chrono::milliseconds> budget = std::nullopt) {
  if (n_max > 2 * kMaxCanonicalPairs + 2) throw ContractError("equivalence_scan needs n_max <= 16");
  ModelReport report{"equivalence_scan", {}};
  const auto start = std::chrono::steady_clock::now();
  for (std::size_t n = 2; n <= n_max; ++n) {
    ItemResult& item = report.add("n=" + std::to_string(n));
    std::size_t omp = 0, both_fail = 0, discrepancies = 0;
    std::string first_bad;
    std::optional<std::chrono::milliseconds> left;
    if (budget) {
      left = *budget - std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
      if (left->count() < 0) left = std::chrono::milliseconds{0};
    }
    const EnumResult r = enumerate_orthoposets(
        n,
        [&](const OrthoPoset& p) {
          const bool is_omp = validate_omp(p).pass();
          const bool is_iop = check_axioms(implication_table(p)).all_pass();
          if (is_omp && is_iop) ++omp;
          else if (!is_omp && !is_iop) ++both_fail;
          else if (++discrepancies == 1)
            first_bad = std::string(is_omp ? "OMP whose table fails the axioms" : "non-OMP whose table passes the axioms") +
                        ":\n" + write_omp(p);
        },
        left);
    item.checked = r.count;
    item.message = "classes=" + std::to_string(r.count) + " omp=" + std::to_string(omp) +
                   " both_fail=" + std::to_string(both_fail) + " discrepancies=" + std::to_string(discrepancies);
    if (!r.complete) item.message += " (incomplete: budget exhausted)";
    if (discrepancies) item.fail({}, item.message + "\n" + first_bad);
  }
  return report;
}

/// Searches single-entry perturbations of I(P), for every orthomodular
/// class P with n <= n_max, for a table satisfying (O1)-(O10) but not (C).
/// Replacement values are all nonempty subsets, in increasing bit order;
/// entries are visited row-major. Precondition: n_max <= 6.
inline std::optional<IopTable> find_c_violator(std::size_t n_max) {
  if (n_max > 6) throw ContractError("find_c_violator needs n_max <= 6");
  std::vector<IopTable> bases;
  for (std::size_t n = 2; n <= n_max; ++n)
    enumerate_orthoposets(n, [&](const OrthoPoset& p) {
      if (validate_omp(p).pass()) bases.push_back(build_iop_from_omp(p));
    });
  for (const IopTable& base : bases) {
    const std::size_t n = base.size();
    for (ElementId x = 0; x < n; ++x)
      for (ElementId y = 0; y < n; ++y) {
        for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << n); ++bits) {
          const ElementSet s = ElementSet(bits);
          // Negations x -> 0 must stay singletons.
          if (s == base.arrow(x, y) || (y == base.zero() && !s.is_singleton())) continue;
          const IopTable t = base.with_entry(x, y, s);
          if (check_axioms(t).all_pass() && !condition_c_check(t).pass()) return t;
        }
      }
  }
  return std::nullopt;
}

} // namespace omplab
