#include "zring/count.hpp"

#include "zring/solver.hpp"

#include <algorithm>
#include <set>

namespace zring {

const char* disqualification_tag(Disqualification d) {
  switch (d) {
    case Disqualification::None: return "none";
    case Disqualification::RegularPrime: return "regular-prime";
    case Disqualification::SpecialExponent: return "special-exponent";
    case Disqualification::SignMismatch: return "sign-mismatch";
  }
  return "?";
}

std::vector<std::pair<Int, unsigned long>> factor_integer(const Int& M, unsigned long bound) {
  std::vector<std::pair<Int, unsigned long>> out;
  Int a = abs(M);
  auto strip = [&](const Int& d) {
    unsigned long e = 0;
    while (mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t())) {
      a /= d;
      ++e;
    }
    if (e) out.emplace_back(d, e);
  };
  strip(Int(2));
  Int d = 3;
  for (; d * d <= a && d <= bound; d += 2) strip(d);
  if (a > 1) {
    if (d * d <= a && mpz_probab_prime_p(a.get_mpz_t(), 40) != 2)
      throw DomainError("factorization incomplete: cofactor " + a.get_str() +
                        " exceeds the trial-division bound");
    out.emplace_back(a, 1);
  }
  return out;
}

namespace {

std::optional<ZElem> smallest_solution(const ZContext& ctx, const Int& m) {
  const SolutionReport rep = solve_canonical(ctx, m);
  std::optional<ZElem> best;
  for (const auto& c : rep.canonical)
    if (!best || size_less(c.elem, *best)) best = c.elem;
  return best;
}

FactorizationReport factorize_nonneg_z(const ZContext& ctx, const Int& M, unsigned long bound) {
  FactorizationReport r;
  r.M = M;
  r.rational_factorization = factor_integer(M, bound);
  const bool z3 = (ctx.z == 3);
  int sign_product = 1;
  for (const auto& [q, e] : r.rational_factorization) {
    PrimeClassification c = z3 ? classify_prime_z3(q) : classify_prime(ctx, q);
    if (c.verdict == Verdict::Regular) {
      if (r.reason == Disqualification::None) {
        r.reason = Disqualification::RegularPrime;
        r.disqualification_reason = q.get_str() + " is regular";
        r.conditional_on_ufd = abs(ctx.z) > 5;
      }
      continue;
    }
    if (c.verdict == Verdict::IrregularTypeII) c = classify_prime(ctx, Int(-q));
    ZringFactor f;
    f.elem = *c.factor;
    f.exponent = e;
    f.prime = q;
    f.sign = sgn(norm(ctx, f.elem));
    f.special = (c.verdict == Verdict::Special);
    if (f.special) {
      r.special_part.emplace_back(Int(f.sign * q), e);
      if (e >= 2 && r.reason == Disqualification::None) {
        r.reason = Disqualification::SpecialExponent;
        r.disqualification_reason = "special prime " + q.get_str() + " has exponent " + std::to_string(e);
      }
    }
    if (f.sign < 0 && (e % 2)) sign_product = -sign_product;
    r.zring_factors.push_back(f);
  }
  if (r.reason == Disqualification::None && !z3 && sign_product != sgn(M)) {
    r.reason = Disqualification::SignMismatch;
    r.disqualification_reason = "factor norms multiply to " + Int(-M).get_str() + ", not " + M.get_str();
  }
  r.qualifies = (r.reason == Disqualification::None);
  return r;
}

void require_countable(const ZContext& ctx, const Int& M) {
  if (ctx.is_degenerate) throw DomainError("z = +-2 is not an integral domain");
  if (abs(M) <= 1) throw DomainError("M must satisfy |M| >= 2");
}

}  // namespace

FactorizationReport zring_factorize(const ZContext& ctx, const Int& M, unsigned long factor_bound) {
  require_countable(ctx, M);
  if (ctx.z >= 0) return factorize_nonneg_z(ctx, M, factor_bound);
  const ZContext pos = ctx.negated();
  FactorizationReport r = factorize_nonneg_z(pos, M, factor_bound);
  for (auto& f : r.zring_factors) f.elem = phi_map(pos, f.elem);
  return r;
}

CountResult count_positive_primitive(const ZContext& ctx, const Int& M, unsigned long factor_bound) {
  if (ctx.z < 0) throw DomainError("count_positive_primitive: needs z >= 0");
  if (M < 2) throw DomainError("count_positive_primitive: needs M >= 2");
  const FactorizationReport f = zring_factorize(ctx, M, factor_bound);
  CountResult r;
  r.reason = f.reason;
  r.conditional_on_ufd = f.conditional_on_ufd;
  for (const auto& zf : f.zring_factors)
    if (!zf.special) ++r.nonspecial_primes;
  if (!f.qualifies) {
    r.count = 0;
    return r;
  }
  r.count = 1;
  if (r.nonspecial_primes > 0) mpz_mul_2exp(r.count.get_mpz_t(), r.count.get_mpz_t(), r.nonspecial_primes - 1);
  return r;
}

std::vector<ZElem> enumerate_positive_primitive(const ZContext& ctx, const Int& M,
                                                unsigned long factor_bound) {
  if (ctx.z < 0) throw DomainError("enumerate_positive_primitive: needs z >= 0");
  if (M < 2) throw DomainError("enumerate_positive_primitive: needs M >= 2");
  const FactorizationReport f = zring_factorize(ctx, M, factor_bound);
  if (!f.qualifies) throw DomainError("enumerate_positive_primitive: M does not qualify (" +
                                      *f.disqualification_reason + ")");
  ZElem special(1, 0);
  std::vector<std::pair<ZElem, ZElem>> powers;  // alpha^k, conj(alpha)^k
  for (const auto& zf : f.zring_factors) {
    if (zf.special) {
      special = mul(ctx, special, zf.elem);
      continue;
    }
    const ZElem a = pow(ctx, zf.elem, zf.exponent);
    powers.emplace_back(a, conj(ctx, a));
  }
  const std::size_t n = powers.size();
  const unsigned long subsets = n == 0 ? 1UL : (1UL << (n - 1));
  std::set<std::pair<Int, Int>> seen;
  std::vector<ZElem> out;
  for (unsigned long mask = 0; mask < subsets; ++mask) {
    ZElem alpha = special;
    for (std::size_t l = 0; l < n; ++l) {
      const bool in_i = (l == 0) || ((mask >> (l - 1)) & 1UL);
      alpha = mul(ctx, alpha, in_i ? powers[l].first : powers[l].second);
    }
    const ZElem c = normalize_to_canonical(ctx, alpha).canonical;
    auto key = c.re < c.im ? std::make_pair(c.re, c.im) : std::make_pair(c.im, c.re);
    if (seen.insert(key).second) out.push_back(c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

PrimeClassification classify_prime_z3(const Int& p) {
  if (!is_prime(p)) throw DomainError("classify_prime_z3: |" + p.get_str() + "| is not prime");
  const ZContext ctx = ZContext::make(3);
  const Int ap = abs(p);
  const unsigned long r = mpz_fdiv_ui(ap.get_mpz_t(), 5);
  PrimeClassification c;
  c.p = p;
  if (ap == 5) {
    c.verdict = Verdict::Special;
  } else if (r == 1 || r == 4) {
    c.verdict = Verdict::IrregularTypeI;
  } else {
    c.verdict = Verdict::Regular;
    return c;
  }
  c.factor = smallest_solution(ctx, p);
  if (!c.factor) throw DomainError("classify_prime_z3: mod-5 rule and solver disagree at " + p.get_str());
  return c;
}

}  // namespace zring
