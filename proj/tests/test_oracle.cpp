#include "zring/oracle.hpp"

#include <gtest/gtest.h>

using namespace zring;
using namespace zring::oracle;

TEST(Oracle, BruteSolutionsNegativeLevel) {
  auto s = brute_solutions(ZContext::make(6), Int(-7), {Int(4)});
  std::vector<ZElem> want = {ZElem(-4, 1), ZElem(-2, 1), ZElem(-1, 2), ZElem(-1, 4),
                             ZElem(1, -4),  ZElem(1, -2), ZElem(2, -1), ZElem(4, -1)};
  EXPECT_EQ(s, want);
}

TEST(Oracle, BruteSolutionsCircle) {
  auto s = brute_solutions(ZContext::make(0), Int(2), {Int(2)});
  std::vector<ZElem> want = {ZElem(-1, -1), ZElem(-1, 1), ZElem(1, -1), ZElem(1, 1)};
  EXPECT_EQ(s, want);
}

TEST(Oracle, NoSolutionsForSeven) {
  EXPECT_TRUE(brute_solutions(ZContext::make(6), Int(7), {Int(50)}).empty());
}

TEST(Oracle, PositivePrimitiveCounts) {
  EXPECT_EQ(brute_count_positive_primitive(ZContext::make(6), Int(49)), 1);
  EXPECT_EQ(brute_count_positive_primitive(ZContext::make(3), Int(209)), 2);
  EXPECT_EQ(brute_count_positive_primitive(ZContext::make(3), Int(25)), 0);
  EXPECT_EQ(brute_count_positive_primitive(ZContext::make(0), Int(65)), 2);
}

TEST(Oracle, FirstQuadrantCounts) {
  Int prim;
  EXPECT_EQ(brute_count_first_quadrant(ZContext::make(6), Int(49), &prim), 2);
  EXPECT_EQ(prim, 1);
}

TEST(Oracle, LevelSetsMatchSingleScans) {
  const ZContext c = ZContext::make(-5);
  auto all = brute_level_sets(c, Int(-30), Int(30), {Int(12)});
  for (long m = -30; m <= 30; ++m) {
    auto one = brute_solutions(c, Int(m), {Int(12)});
    auto it = all.find(Int(m));
    EXPECT_EQ(one, it == all.end() ? std::vector<ZElem>{} : it->second) << m;
  }
}
