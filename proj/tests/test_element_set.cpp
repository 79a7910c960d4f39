#include <gtest/gtest.h>

#include <random>
#include <set>
#include <vector>

#include "omplab/element_set.hpp"

using omplab::ElementId;
using omplab::ElementSet;

namespace {

std::set<ElementId> to_std(ElementSet s) { return {s.begin(), s.end()}; }

} // namespace

TEST(ElementSet, IterationVisitsMembersInIncreasingOrder) {
  const ElementSet s{5, 0, 63, 17};
  EXPECT_EQ(std::vector<ElementId>(s.begin(), s.end()), (std::vector<ElementId>{0, 5, 17, 63}));
  EXPECT_EQ(s.size(), 4u);
  EXPECT_EQ(s.first(), 0u);
}

TEST(ElementSet, FullAndEmpty) {
  EXPECT_TRUE(ElementSet{}.empty());
  EXPECT_EQ(ElementSet::full(0).size(), 0u);
  EXPECT_EQ(ElementSet::full(7).size(), 7u);
  EXPECT_EQ(ElementSet::full(64).size(), 64u);
  EXPECT_TRUE(ElementSet::full(64).contains(63));
}

TEST(ElementSet, SingletonQueries) {
  EXPECT_TRUE(ElementSet::singleton(9).is_singleton());
  EXPECT_FALSE(ElementSet{}.is_singleton());
  EXPECT_FALSE((ElementSet{1, 2}).is_singleton());
}

TEST(ElementSet, InsertBeyondCapacityThrows) {
  ElementSet s;
  EXPECT_THROW(s.insert(64), std::exception);
  EXPECT_FALSE(s.contains(64));
}

// Set algebra agrees with std::set on random inputs.
TEST(ElementSet, AlgebraMatchesStdSet) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    const ElementSet a(rng()), b(rng());
    const auto sa = to_std(a), sb = to_std(b);
    std::set<ElementId> i, u, d;
    std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(), std::inserter(i, i.end()));
    std::set_union(sa.begin(), sa.end(), sb.begin(), sb.end(), std::inserter(u, u.end()));
    std::set_difference(sa.begin(), sa.end(), sb.begin(), sb.end(), std::inserter(d, d.end()));
    EXPECT_EQ(to_std(a & b), i);
    EXPECT_EQ(to_std(a | b), u);
    EXPECT_EQ(to_std(a - b), d);
    EXPECT_EQ((a - b).subset_of(a), true);
    EXPECT_EQ(a.intersects(b), !i.empty());
    EXPECT_EQ(a.size(), sa.size());
  }
}

TEST(ElementSet, EraseAndWith) {
  ElementSet s{1, 2, 3};
  s.erase(2);
  EXPECT_EQ(s, (ElementSet{1, 3}));
  EXPECT_EQ(s.with(2), (ElementSet{1, 2, 3}));
  EXPECT_EQ(s, (ElementSet{1, 3}));
}
