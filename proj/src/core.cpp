#include "zring/core.hpp"

namespace zring {

ZContext ZContext::make(const Int& z) {
  ZContext c;
  c.z = z;
  c.two_minus_z = 2 - z;
  c.two_plus_z = 2 + z;
  c.disc = z * z - 4;
  c.is_degenerate = (c.disc == 0);
  return c;
}

bool operator==(const ZElem& a, const ZElem& b) { return a.re == b.re && a.im == b.im; }

bool operator<(const ZElem& a, const ZElem& b) {
  int c = cmp(a.re, b.re);
  if (c != 0) return c < 0;
  return cmp(a.im, b.im) < 0;
}

EmbeddingMatrix EmbeddingMatrix::operator*(const EmbeddingMatrix& o) const {
  return {m11 * o.m11 + m12 * o.m21, m11 * o.m12 + m12 * o.m22,
          m21 * o.m11 + m22 * o.m21, m21 * o.m12 + m22 * o.m22};
}

bool EmbeddingMatrix::operator==(const EmbeddingMatrix& o) const {
  return m11 == o.m11 && m12 == o.m12 && m21 == o.m21 && m22 == o.m22;
}

ZElem add(const ZContext&, const ZElem& a, const ZElem& b, bool subtract) {
  if (subtract) return {a.re - b.re, a.im - b.im};
  return {a.re + b.re, a.im + b.im};
}

ZElem mul(const ZContext& ctx, const ZElem& a, const ZElem& b) {
  Int t = a.im * b.im;
  return {a.re * b.re - t, a.re * b.im + a.im * b.re + ctx.z * t};
}

ZElem conj(const ZContext& ctx, const ZElem& a) { return {a.re + ctx.z * a.im, -a.im}; }

ZElem mirror_conj(const ZContext&, const ZElem& a) { return {a.im, a.re}; }

Int norm(const ZContext& ctx, const ZElem& a) {
  return a.re * a.re + ctx.z * a.re * a.im + a.im * a.im;
}

Int oriented_area(const ZElem& a, const ZElem& b) { return a.re * b.im - a.im * b.re; }

std::optional<ZElem> divide_exact(const ZContext& ctx, const ZElem& num, const ZElem& den) {
  Int n = norm(ctx, den);
  if (n == 0) throw ZeroDivisorError("divide_exact: denominator " + to_string(den) + " has norm 0");
  ZElem t = mul(ctx, num, conj(ctx, den));
  if (!mpz_divisible_p(t.re.get_mpz_t(), n.get_mpz_t()) ||
      !mpz_divisible_p(t.im.get_mpz_t(), n.get_mpz_t()))
    return std::nullopt;
  ZElem q;
  mpz_divexact(q.re.get_mpz_t(), t.re.get_mpz_t(), n.get_mpz_t());
  mpz_divexact(q.im.get_mpz_t(), t.im.get_mpz_t(), n.get_mpz_t());
  return q;
}

ZElem phi_map(const ZContext&, const ZElem& a) { return {a.re, -a.im}; }

EmbeddingMatrix embed_matrix(const ZContext& ctx, const ZElem& a) {
  return {a.re, -a.im, a.im, a.re + ctx.z * a.im};
}

std::optional<ZElem> is_unit(const ZContext& ctx, const ZElem& a) {
  Int n = norm(ctx, a);
  if (n == 1) return conj(ctx, a);
  if (n == -1) return neg(conj(ctx, a));
  return std::nullopt;
}

ZElem neg(const ZElem& a) { return {-a.re, -a.im}; }

ZElem scale(const ZElem& a, const Int& k) { return {a.re * k, a.im * k}; }

ZElem pow(const ZContext& ctx, const ZElem& a, unsigned long e) {
  ZElem result(1, 0);
  ZElem base = a;
  while (e > 0) {
    if (e & 1UL) result = mul(ctx, result, base);
    e >>= 1;
    if (e > 0) base = mul(ctx, base, base);
  }
  return result;
}

Int content(const ZElem& a) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.re.get_mpz_t(), a.im.get_mpz_t());
  return g;
}

bool is_primitive(const ZElem& a) { return content(a) == 1; }

Int isqrt(const Int& n) {
  if (n < 0) throw DomainError("isqrt of negative value");
  Int r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

bool is_square(const Int& n, Int* root) {
  if (n < 0) return false;
  if (!mpz_perfect_square_p(n.get_mpz_t())) return false;
  if (root) *root = isqrt(n);
  return true;
}

bool is_prime(const Int& n) {
  Int a = abs(n);
  return mpz_probab_prime_p(a.get_mpz_t(), 40) > 0;
}

std::string to_string(const ZElem& a) { return "(" + a.re.get_str() + "," + a.im.get_str() + ")"; }

}  // namespace zring
