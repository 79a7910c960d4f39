#include <gtest/gtest.h>

#include <algorithm>
#include <chrono>
#include <numeric>
#include <random>
#include <vector>

#include "omplab/catalog.hpp"
#include "omplab/enumerate.hpp"
#include "oracle.hpp"

using namespace omplab;

namespace {

std::vector<OrthoPoset> classes(std::size_t n) {
  std::vector<OrthoPoset> out;
  enumerate_orthoposets(n, [&](const OrthoPoset& p) { out.push_back(p); });
  return out;
}

// Relabels p by a random permutation and random names.
OrthoPoset shuffle(const OrthoPoset& p, std::mt19937& rng) {
  const std::size_t n = p.size();
  std::vector<ElementId> pi(n);
  std::iota(pi.begin(), pi.end(), 0);
  std::shuffle(pi.begin(), pi.end(), rng);
  std::vector<ElementSet> up(n);
  std::vector<ElementId> inv(n);
  std::vector<std::string> names(n);
  for (ElementId x = 0; x < n; ++x) {
    for (ElementId y : p.up(x)) up[pi[x]].insert(pi[y]);
    inv[pi[x]] = pi[p.invol(x)];
    names[pi[x]] = "v" + std::to_string(x);
  }
  return OrthoPoset(BoundedPoset(up, pi[p.zero()], pi[p.one()], names), inv);
}

// Every library class is isomorphic to exactly one oracle class and vice versa.
void expect_same_classes(const std::vector<OrthoPoset>& lib, const std::vector<oracle::Structure>& ref) {
  ASSERT_EQ(lib.size(), ref.size());
  std::vector<int> hits(ref.size(), 0);
  for (const auto& p : lib) {
    const oracle::Structure s = oracle::from_library(p);
    int matches = 0;
    for (std::size_t i = 0; i < ref.size(); ++i)
      if (oracle::isomorphic(s, ref[i])) {
        ++matches;
        ++hits[i];
      }
    EXPECT_EQ(matches, 1);
  }
  for (int h : hits) EXPECT_EQ(h, 1);
}

} // namespace

TEST(Enumerate, PinnedCounts) {
  const std::pair<std::size_t, std::size_t> expected[] = {{2, 1}, {3, 0}, {4, 1}, {5, 0}, {6, 2}, {7, 0}, {8, 5}, {10, 16}};
  for (auto [n, count] : expected) {
    const EnumResult r = enumerate_orthoposets(n, [](const OrthoPoset&) {});
    EXPECT_EQ(r.count, count) << "n=" << n;
    EXPECT_TRUE(r.complete);
  }
}

TEST(Enumerate, AgreesWithAllMatricesOracleUpToFour) {
  for (int n = 2; n <= 4; ++n) expect_same_classes(classes(n), oracle::classes_all_matrices(n));
  EXPECT_EQ(oracle::classes_all_matrices(3).size(), 0u);
}

TEST(Enumerate, AgreesWithMiddleRelationOracleAtSix) { expect_same_classes(classes(6), oracle::classes_six()); }

TEST(Enumerate, AgreesWithPairChoiceOracleAtEight) { expect_same_classes(classes(8), oracle::classes_eight()); }

TEST(Enumerate, SixContainsMo2AndHexagon) {
  const auto six = classes(6);
  auto has = [&](const OrthoPoset& q) {
    return std::any_of(six.begin(), six.end(), [&](const OrthoPoset& p) { return isomorphic(p, q); });
  };
  EXPECT_TRUE(has(make_mo(2)));
  EXPECT_TRUE(has(make_hexagon()));
}

TEST(Enumerate, EightContainsB8AndMo3) {
  const auto eight = classes(8);
  std::size_t omps = 0;
  for (const auto& p : eight) omps += validate_omp(p).pass();
  EXPECT_EQ(omps, 2u);
  auto has = [&](const OrthoPoset& q) {
    return std::any_of(eight.begin(), eight.end(), [&](const OrthoPoset& p) { return isomorphic(p, q); });
  };
  EXPECT_TRUE(has(make_boolean(3)));
  EXPECT_TRUE(has(make_mo(3)));
  EXPECT_TRUE(has(make_even_subsets(4)));
}

TEST(Enumerate, OutputIsCanonicalAndSorted) {
  const auto eight = classes(8);
  for (std::size_t i = 0; i < eight.size(); ++i) {
    EXPECT_EQ(canonicalize(eight[i]), eight[i]);
    if (i > 0) {
      EXPECT_LT(canonical_form(eight[i - 1]), canonical_form(eight[i]));
    }
  }
}

TEST(Enumerate, ZeroBudgetIsFlaggedIncomplete) {
  const EnumResult r = enumerate_orthoposets(12, [](const OrthoPoset&) {}, std::chrono::milliseconds{0});
  EXPECT_FALSE(r.complete);
}

TEST(Enumerate, RejectsOutOfRangeN) {
  EXPECT_THROW(enumerate_orthoposets(1, [](const OrthoPoset&) {}), ContractError);
  EXPECT_THROW(enumerate_orthoposets(18, [](const OrthoPoset&) {}), ContractError);
}

// Property: the canonical form is invariant under relabeling.
TEST(Canonical, InvariantUnderRandomPermutations) {
  std::mt19937 rng(31337);
  for (const auto& e : catalog()) {
    if (e.structure.size() > 16) continue;
    const CanonicalForm c = canonical_form(e.structure);
    for (int i = 0; i < 20; ++i) EXPECT_EQ(canonical_form(shuffle(e.structure, rng)), c) << e.name;
  }
}

TEST(Canonical, DistinguishesNonIsomorphicModels) {
  EXPECT_NE(canonical_form(make_mo(2)), canonical_form(make_hexagon()));
  EXPECT_NE(canonical_form(make_boolean(3)), canonical_form(make_mo(3)));
}

TEST(Scan, NoDiscrepanciesUpToEight) {
  const ModelReport r = equivalence_scan(8);
  EXPECT_TRUE(r.pass());
  ASSERT_EQ(r.items.size(), 7u);
  EXPECT_EQ(r.find("n=6")->message, "classes=2 omp=1 both_fail=1 discrepancies=0");
  EXPECT_EQ(r.find("n=8")->message, "classes=5 omp=2 both_fail=3 discrepancies=0");
}

TEST(FindC, ViolatorSatisfiesItsContract) {
  const auto t = find_c_violator(4);
  ASSERT_TRUE(t.has_value());
  EXPECT_TRUE(check_axioms(*t).all_pass());
  EXPECT_FALSE(condition_c_check(*t).pass());
  EXPECT_EQ(roundtrip_iop_check(*t).items.front().message, "(C) violated");
  EXPECT_EQ(t->size(), 4u);
}

TEST(FindC, TwoElementTablesHaveNone) { EXPECT_FALSE(find_c_violator(2).has_value()); }
