#include "zring/oracle.hpp"
#include "zring/solver.hpp"
#include "zring/units.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace zring;

namespace {

const ZContext Z6 = ZContext::make(6);

std::vector<ZElem> elems(const SolutionReport& r) {
  std::vector<ZElem> v;
  for (const auto& c : r.canonical) v.push_back(c.elem);
  return v;
}

}  // namespace

TEST(Solver, Examples) {
  auto r49 = solve_canonical(Z6, Int(49));
  EXPECT_TRUE(r49.solvable);
  ASSERT_EQ(r49.canonical.size(), 3u);
  EXPECT_EQ(elems(r49), (std::vector<ZElem>{ZElem(2, 3), ZElem(3, 2), ZElem(7, 0)}));
  EXPECT_TRUE(r49.canonical[0].primitive);
  EXPECT_TRUE(r49.canonical[1].primitive);
  EXPECT_FALSE(r49.canonical[2].primitive);

  EXPECT_FALSE(solve_canonical(Z6, Int(7)).solvable);

  auto rm7 = solve_canonical(Z6, Int(-7));
  EXPECT_EQ(elems(rm7), (std::vector<ZElem>{ZElem(1, -4), ZElem(1, -2)}));
  EXPECT_TRUE(rm7.canonical[0].primitive && rm7.canonical[1].primitive);

  EXPECT_FALSE(solve_canonical(ZContext::make(4), Int(-1)).solvable);
  EXPECT_THROW(solve_canonical(Z6, Int(0)), DomainError);
}

TEST(Solver, DegenerateLines) {
  auto r = solve_canonical(ZContext::make(2), Int(9));
  EXPECT_TRUE(r.solvable);
  ASSERT_TRUE(r.parametric_line);
  EXPECT_EQ(r.parametric_line->root, 3);
  EXPECT_FALSE(solve_canonical(ZContext::make(-2), Int(8)).solvable);
  EXPECT_FALSE(solve_canonical(ZContext::make(2), Int(-9)).solvable);
}

TEST(Solver, Normalize) {
  auto a = normalize_to_canonical(Z6, ZElem(15, -2));
  EXPECT_EQ(a.canonical, ZElem(2, 3));
  EXPECT_EQ(a.k, 0);
  EXPECT_EQ(a.n, 1);
  auto b = normalize_to_canonical(Z6, ZElem(3, 2));
  EXPECT_EQ(b.canonical, ZElem(3, 2));
  EXPECT_EQ(b.k, 0);
  EXPECT_EQ(b.n, 0);
  auto c = normalize_to_canonical(Z6, ZElem(-7, 0));
  EXPECT_EQ(c.canonical, ZElem(7, 0));
  EXPECT_EQ(c.k, 1);
  EXPECT_EQ(c.n, 0);
  EXPECT_THROW(normalize_to_canonical(ZContext::make(2), ZElem(1, 1)), DomainError);
  EXPECT_THROW(normalize_to_canonical(Z6, ZElem(0, 0)), DomainError);
}

TEST(Solver, Certificates) {
  auto c = no_solution_certificate(Z6, Int(-3));
  ASSERT_TRUE(c);
  EXPECT_EQ(c->kind, CertificateKind::ArcScan);
  EXPECT_EQ(c->axis, 'y');
  EXPECT_EQ(c->lo, 1);  // 4y^2 >= 3
  EXPECT_EQ(c->hi, 4);  // 4y^2 <= 75
  EXPECT_TRUE(c->area_bound_holds);
  EXPECT_TRUE(verify_certificate(*c));
  auto c7 = no_solution_certificate(ZContext::make(7), Int(-1));
  ASSERT_TRUE(c7);
  EXPECT_TRUE(verify_certificate(*c7));
  EXPECT_FALSE(no_solution_certificate(Z6, Int(49)));

  NoSolutionCertificate forged = *c;
  forged.hi = 2;
  EXPECT_FALSE(verify_certificate(forged));
  NoSolutionCertificate wrong_level = *c;
  wrong_level.M = -7;
  EXPECT_FALSE(verify_certificate(wrong_level));

  auto e = no_solution_certificate(ZContext::make(1), Int(-5));
  ASSERT_TRUE(e);
  EXPECT_EQ(e->kind, CertificateKind::EmptyLevelSet);
  EXPECT_TRUE(verify_certificate(*e));
  auto l = no_solution_certificate(ZContext::make(-2), Int(7));
  ASSERT_TRUE(l);
  EXPECT_EQ(l->kind, CertificateKind::LatticeFreeLines);
  EXPECT_TRUE(verify_certificate(*l));
}

TEST(Solver, Quadrants) {
  auto q1 = solutions_in_quadrant(Z6, Int(49), 1, 100);
  auto v = q1.elements;
  std::sort(v.begin(), v.end());
  EXPECT_EQ(v, (std::vector<ZElem>{ZElem(0, 7), ZElem(2, 3), ZElem(3, 2), ZElem(7, 0)}));
  EXPECT_FALSE(q1.truncated);
  EXPECT_FALSE(q1.infinite);

  EXPECT_TRUE(solutions_in_quadrant(Z6, Int(-7), 1, 100).elements.empty());
  EXPECT_TRUE(solutions_in_quadrant(Z6, Int(-7), 3, 100).elements.empty());

  auto q4 = solutions_in_quadrant(Z6, Int(-7), 4, 3);
  EXPECT_TRUE(q4.truncated);
  EXPECT_TRUE(q4.infinite);
  EXPECT_EQ(q4.elements, (std::vector<ZElem>{ZElem(1, -2), ZElem(2, -1), ZElem(1, -4)}));
}

TEST(SolverInvariants, QuadrantsMatchOracle) {
  for (long z = -7; z <= 7; ++z) {
    if (z == 2 || z == -2) continue;
    const ZContext c = ZContext::make(z);
    const long box = 60;
    auto sets = oracle::brute_level_sets(c, Int(-60), Int(60), {Int(box)});
    for (const auto& [M, sols] : sets) {
      if (M == 0) continue;
      for (int q = 1; q <= 4; ++q) {
        auto got = solutions_in_quadrant(c, M, q, 12);
        std::vector<ZElem> got_in, want;
        for (const ZElem& b : got.elements)
          if (abs(b.re) <= box && abs(b.im) <= box) got_in.push_back(b);
        for (const ZElem& b : sols)
          if (in_quadrant(b, q)) want.push_back(b);
        std::sort(want.begin(), want.end(), size_less);
        if (want.size() > 12) want.resize(12);
        EXPECT_EQ(got_in, want) << "z=" << z << " M=" << M << " q=" << q;
      }
    }
  }
}

TEST(SolverInvariants, NormalizeIdempotentAndInvariant) {
  for (long z : {-6L, -3L, -1L, 0L, 1L, 3L, 5L, 8L}) {
    const ZContext c = ZContext::make(z);
    auto sets = oracle::brute_level_sets(c, Int(-90), Int(90), {Int(30)});
    for (const auto& [M, sols] : sets) {
      if (M == 0) continue;
      for (const ZElem& b : sols) {
        auto n1 = normalize_to_canonical(c, b);
        auto n2 = normalize_to_canonical(c, n1.canonical);
        EXPECT_EQ(n2.canonical, n1.canonical);
        EXPECT_EQ(n2.k, 0);
        EXPECT_EQ(n2.n, 0);
        EXPECT_EQ(norm(c, n1.canonical), M);
        EXPECT_EQ(content(n1.canonical), content(b));
        EXPECT_EQ(mul(c, unit_from_indices(c, n1.k, n1.n), b), n1.canonical);
      }
    }
  }
}

TEST(SolverInvariants, Positivity) {
  for (long z = 0; z <= 9; ++z) {
    if (z == 2) continue;
    const ZContext c = ZContext::make(z);
    for (long M = 1; M <= 300; ++M)
      for (const auto& s : solve_canonical(c, Int(M)).canonical) {
        EXPECT_GE(s.elem.re, 0);
        EXPECT_GE(s.elem.im, 0);
        EXPECT_FALSE(s.elem.re == 0 && s.elem.im == 0);
      }
  }
}

TEST(SolverInvariants, RepresentabilityGap) {
  for (long z = -12; z <= 12; ++z) {
    if (std::abs(z) == 2) continue;
    const ZContext c = ZContext::make(z);
    for (long M = 3 - std::abs(z); M < 2 + std::abs(z); ++M) {
      if (M == 0) continue;
      EXPECT_EQ(solve_canonical(c, Int(M)).solvable, M > 0 && is_square(Int(M))) << z << " " << M;
    }
  }
}
