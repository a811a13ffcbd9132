#include "support.hpp"
#include "zring/classify.hpp"
#include "zring/solver.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace zring;

namespace {

const ZContext Z6 = ZContext::make(6);

std::vector<long> primes_upto(long n) {
  std::vector<long> out;
  for (long p = 2; p <= n; ++p)
    if (is_prime(Int(p))) out.push_back(p);
  return out;
}

bool divides_elem(const Int& p, const ZElem& a) {
  return mpz_divisible_p(a.re.get_mpz_t(), p.get_mpz_t()) && mpz_divisible_p(a.im.get_mpz_t(), p.get_mpz_t());
}

}  // namespace

TEST(Classify, PaperExamples) {
  auto m7 = classify_prime(Z6, Int(-7));
  EXPECT_EQ(m7.verdict, Verdict::IrregularTypeI);
  ASSERT_TRUE(m7.factor);
  EXPECT_EQ(*m7.factor, ZElem(1, -2));
  auto p7 = classify_prime(Z6, Int(7));
  EXPECT_EQ(p7.verdict, Verdict::IrregularTypeII);
  EXPECT_EQ(norm(Z6, *p7.factor), -7);
  EXPECT_EQ(classify_prime(Z6, Int(3)).verdict, Verdict::Regular);
  EXPECT_EQ(classify_prime(Z6, Int(-3)).verdict, Verdict::Regular);
  auto two = classify_prime(ZContext::make(0), Int(2));
  EXPECT_EQ(two.verdict, Verdict::Special);
  EXPECT_EQ(*two.factor, ZElem(1, 1));
  EXPECT_THROW(classify_prime(Z6, Int(9)), DomainError);
  EXPECT_EQ(verdict_tag(Verdict::IrregularTypeII), "irregular-type-II");
}

TEST(Classify, SpecialElements) {
  EXPECT_EQ(special_elements(ZContext::make(5)), (std::vector<Int>{-3, 7}));
  EXPECT_EQ(special_elements(ZContext::make(3)), (std::vector<Int>{-5, 5}));
  EXPECT_EQ(special_elements(ZContext::make(-3)), (std::vector<Int>{-5, 5}));
  EXPECT_EQ(special_elements(ZContext::make(4)), (std::vector<Int>{-3, -2}));
  EXPECT_EQ(special_elements(ZContext::make(0)), (std::vector<Int>{2}));
  EXPECT_TRUE(special_elements(Z6).empty());
}

TEST(Classify, RepresentableInGap) {
  EXPECT_TRUE(representable_in_gap(Z6, Int(4)));
  EXPECT_FALSE(representable_in_gap(Z6, Int(5)));
  EXPECT_FALSE(representable_in_gap(Z6, Int(-3)));
  EXPECT_THROW(representable_in_gap(Z6, Int(8)), DomainError);
}

TEST(Classify, NonUfdWitness) {
  auto w6 = non_ufd_witness(Z6);
  ASSERT_TRUE(w6);
  EXPECT_EQ(w6->p, 2);
  EXPECT_EQ(w6->base, ZElem(1, 1));
  EXPECT_EQ(w6->square, ZElem(0, 8));
  EXPECT_EQ(w6->cofactor, ZElem(0, 4));
  EXPECT_TRUE(verify_witness(*w6));
  EXPECT_FALSE(non_ufd_witness(ZContext::make(5)));
  auto w7 = non_ufd_witness(ZContext::make(7));
  ASSERT_TRUE(w7);
  EXPECT_EQ(w7->p, 3);
  EXPECT_EQ(w7->square, ZElem(0, 9));
  EXPECT_EQ(w7->cofactor, ZElem(0, 3));
  auto wm6 = non_ufd_witness(ZContext::make(-6));
  ASSERT_TRUE(wm6);
  EXPECT_TRUE(verify_witness(*wm6));
  NonUfdWitness bad = *w6;
  bad.cofactor = ZElem(0, 3);
  EXPECT_FALSE(verify_witness(bad));
}

TEST(Classify, Z39) {
  const ZContext c = ZContext::make(39);
  EXPECT_EQ(classify_prime(c, Int(13)).verdict, Verdict::Regular);
  EXPECT_EQ(classify_prime(c, Int(-13)).verdict, Verdict::Regular);
  EXPECT_TRUE(solve_canonical(c, Int(-169)).solvable);
  EXPECT_FALSE(divide_exact(c, ZElem(5, -1), ZElem(13, 0)));
  EXPECT_FALSE(divide_exact(c, ZElem(-34, 1), ZElem(13, 0)));
  EXPECT_EQ(mul(c, ZElem(5, -1), ZElem(-34, 1)), ZElem(-169, 0));
  EXPECT_FALSE(non_ufd_witness(c));
}

TEST(ClassifyInvariants, SignConsistency) {
  for (long z = -8; z <= 8; ++z) {
    const ZContext c = ZContext::make(z);
    for (long p : primes_upto(200)) {
      auto a = classify_prime(c, Int(p)), b = classify_prime(c, Int(-p));
      const bool ta = a.verdict == Verdict::IrregularTypeI || a.verdict == Verdict::Special;
      const bool tb = b.verdict == Verdict::IrregularTypeI || b.verdict == Verdict::Special;
      if (std::abs(z) == 3) {
        EXPECT_EQ(ta, tb) << z << " " << p;
      } else {
        EXPECT_FALSE(ta && tb) << z << " " << p;
        EXPECT_EQ(ta, b.verdict == Verdict::IrregularTypeII) << z << " " << p;
        EXPECT_EQ(tb, a.verdict == Verdict::IrregularTypeII) << z << " " << p;
      }
      if (a.factor) EXPECT_EQ(norm(c, *a.factor), a.verdict == Verdict::IrregularTypeII ? Int(-p) : Int(p));
    }
  }
}

TEST(ClassifyInvariants, GapRegularity) {
  for (long z = -20; z <= 20; ++z) {
    const ZContext c = ZContext::make(z);
    for (long p : primes_upto(std::abs(z)))
      if (p < std::abs(z) - 2) {
        EXPECT_EQ(classify_prime(c, Int(p)).verdict, Verdict::Regular) << z << " " << p;
        EXPECT_EQ(classify_prime(c, Int(-p)).verdict, Verdict::Regular) << z << " " << -p;
      }
  }
}

TEST(ClassifyInvariants, SpecialCriterion) {
  for (long z = -50; z <= 50; ++z) {
    const ZContext c = ZContext::make(z);
    const auto specials = special_elements(c);
    const long lim = 2 + std::abs(z);
    for (long v = -lim; v <= lim; ++v) {
      if (std::abs(v) < 2 || !is_prime(Int(v))) continue;
      const bool is_special = classify_prime(c, Int(v)).verdict == Verdict::Special;
      const bool listed = std::find(specials.begin(), specials.end(), Int(v)) != specials.end();
      EXPECT_EQ(is_special, listed) << "z=" << z << " p=" << v;
      if (is_special) {
        const ZElem f = *classify_prime(c, Int(v)).factor;
        // The two factors are associated: f divides its conjugate by a unit.
        auto q = divide_exact(c, conj(c, f), f);
        ASSERT_TRUE(q);
        EXPECT_TRUE(is_unit(c, *q).has_value());
      }
    }
  }
}

TEST(ClassifyInvariants, PrimeFactorDivisibility) {
  std::mt19937_64 rng(17);
  for (long z : {-7L, -4L, 0L, 1L, 3L, 5L, 6L, 11L}) {
    const ZContext c = ZContext::make(z);
    for (long p : primes_upto(60)) {
      for (long sp : {p, -p}) {
        auto cl = classify_prime(c, Int(sp));
        if (cl.verdict != Verdict::IrregularTypeI && cl.verdict != Verdict::Special) continue;
        const ZElem a = *cl.factor, ab = conj(c, a);
        int tested = 0;
        for (int tries = 0; tested < 200 && tries < 200000; ++tries) {
          ZElem b = test::rand_elem(rng, 1000000);
          if (tries % 3 == 0) b = mul(c, tries % 2 ? a : ab, test::rand_elem(rng, 1000));
          if (!mpz_divisible_p(Int(norm(c, b)).get_mpz_t(), Int(p).get_mpz_t())) continue;
          ++tested;
          EXPECT_TRUE(divide_exact(c, b, a) || divide_exact(c, b, ab)) << z << " " << sp << " " << to_string(b);
          // Prime property: a | gh implies a | g or a | h.
          const ZElem g = test::rand_elem(rng, 100000);
          const ZElem h = b;
          if (divide_exact(c, mul(c, g, h), a))
            EXPECT_TRUE(divide_exact(c, g, a) || divide_exact(c, h, a));
        }
        EXPECT_EQ(tested, 200);
      }
    }
  }
}

TEST(ClassifyInvariants, TrinityLemma) {
  std::mt19937_64 rng(23);
  for (long z : {-9L, -3L, 0L, 1L, 4L, 6L, 13L}) {
    const ZContext c = ZContext::make(z);
    for (long p : primes_upto(40)) {
      const Int P(p);
      for (int i = 0; i < 50; ++i) {
        const Int r = test::rand_int(rng, -1000000, 1000000), s = test::rand_int(rng, -1000000, 1000000);
        const ZElem both(P * r, P * s);
        EXPECT_TRUE(mpz_divisible_p(Int(norm(c, both)).get_mpz_t(), Int(P * P).get_mpz_t()));
        for (long t = 0; t < std::min(p, 12L); ++t) {
          const ZElem a(P * r, P * s + t), b(P * s + t, P * r);
          for (const ZElem& e : {a, b}) {
            const bool n_div = mpz_divisible_p(Int(norm(c, e)).get_mpz_t(), P.get_mpz_t());
            EXPECT_EQ(n_div, t == 0);
            if (n_div) EXPECT_TRUE(divides_elem(P, e));
          }
        }
      }
    }
  }
}
