#include "zring/classify.hpp"

#include "zring/solver.hpp"

#include <algorithm>

namespace zring {

std::string verdict_tag(Verdict v) {
  switch (v) {
    case Verdict::Regular: return "regular";
    case Verdict::IrregularTypeI: return "irregular-type-I";
    case Verdict::IrregularTypeII: return "irregular-type-II";
    case Verdict::Special: return "special";
  }
  return "?";
}

namespace {

// Smallest canonical solution by (max(|x|,|y|), x, y).
std::optional<ZElem> pick_factor(const ZContext& ctx, const Int& m) {
  const SolutionReport rep = solve_canonical(ctx, m);
  if (!rep.solvable || rep.canonical.empty()) return std::nullopt;
  ZElem best = rep.canonical.front().elem;
  for (const auto& c : rep.canonical)
    if (size_less(c.elem, best)) best = c.elem;
  return best;
}

bool divides(const Int& p, const Int& v) {
  return mpz_divisible_p(v.get_mpz_t(), p.get_mpz_t()) != 0;
}

}  // namespace

PrimeClassification classify_prime(const ZContext& ctx, const Int& p) {
  if (!is_prime(p)) throw DomainError("classify_prime: |" + p.get_str() + "| is not prime");
  PrimeClassification r;
  r.p = p;
  if (auto f = pick_factor(ctx, p)) {
    r.factor = f;
    r.verdict = (divides(p, ctx.two_minus_z) || divides(p, ctx.two_plus_z)) ? Verdict::Special
                                                                           : Verdict::IrregularTypeI;
    return r;
  }
  if (auto f = pick_factor(ctx, Int(-p))) {
    r.factor = f;
    r.verdict = Verdict::IrregularTypeII;
    return r;
  }
  r.verdict = Verdict::Regular;
  return r;
}

std::vector<Int> special_elements(const ZContext& ctx) {
  const Int az = abs(ctx.z);
  if (az == 3) return {Int(-5), Int(5)};
  if (az == 4) return {Int(-3), Int(-2)};
  std::vector<Int> out;
  for (const Int& v : {ctx.two_minus_z, ctx.two_plus_z})
    if (abs(v) >= 2 && is_prime(v) && std::find(out.begin(), out.end(), v) == out.end())
      out.push_back(v);
  std::sort(out.begin(), out.end());
  return out;
}

bool representable_in_gap(const ZContext& ctx, const Int& M) {
  const Int az = abs(ctx.z);
  if (!(2 - az < M && M < 2 + az)) throw DomainError("representable_in_gap: M outside (2-|z|, 2+|z|)");
  return is_square(M);
}

Int smallest_prime_factor(const Int& n) {
  Int a = abs(n);
  if (a < 2) throw DomainError("smallest_prime_factor: |n| < 2");
  if (mpz_even_p(a.get_mpz_t())) return 2;
  for (Int d = 3; d * d <= a; d += 2)
    if (divides(d, a)) return d;
  return a;
}

std::optional<NonUfdWitness> non_ufd_witness(const ZContext& ctx) {
  const Int az = abs(ctx.z);
  if (az <= 5) return std::nullopt;
  const Int big = az + 2;
  const Int small = az - 2;
  const bool big_prime = is_prime(big);
  const bool small_prime = is_prime(small);
  if (big_prime && small_prime) return std::nullopt;

  // (1 + s i_z)^2 = (0, z + 2s).
  const int s = !big_prime ? ctx.sign() : -ctx.sign();
  const Int target = ctx.z + 2 * s;
  NonUfdWitness w;
  w.z = ctx.z;
  w.p = smallest_prime_factor(target);
  w.irreducible_nonprime = ZElem(w.p, Int(0));
  w.base = ZElem(Int(1), Int(s));
  w.square = mul(ctx, w.base, w.base);
  w.cofactor = ZElem(Int(0), Int(target / w.p));
  w.explanation.side = (s > 0) ? "2+z" : "2-z";
  w.explanation.composite_value = (s > 0) ? ctx.two_plus_z : ctx.two_minus_z;
  w.explanation.gap_bound = small;
  if (!verify_witness(w)) return std::nullopt;
  w.explanation.p_regular = true;
  w.explanation.base_not_divisible = true;
  return w;
}

bool verify_witness(const NonUfdWitness& w) {
  const ZContext ctx = ZContext::make(w.z);
  if (w.irreducible_nonprime != ZElem(w.p, Int(0))) return false;
  if (mul(ctx, w.base, w.base) != w.square) return false;
  if (mul(ctx, w.irreducible_nonprime, w.cofactor) != w.square) return false;
  if (divide_exact(ctx, w.base, w.irreducible_nonprime)) return false;
  // Gap lemma: a prime below |z| - 2 is regular, hence irreducible.
  if (!is_prime(w.p) || !(w.p < abs(ctx.z) - 2)) return false;
  return classify_prime(ctx, w.p).verdict == Verdict::Regular;
}

}  // namespace zring
