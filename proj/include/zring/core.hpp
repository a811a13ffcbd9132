#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace zring {

using Int = mpz_class;

// Raised for inputs outside an operation's domain (bad M, non-prime p, ...).
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Division by an element of norm zero; only possible when |z| = 2.
struct ZeroDivisorError : DomainError {
  using DomainError::DomainError;
};

struct ZContext {
  Int z;
  Int two_minus_z;
  Int two_plus_z;
  Int disc;  // z^2 - 4
  bool is_degenerate = false;

  static ZContext make(const Int& z);
  static ZContext make(long z) { return make(Int(z)); }

  ZContext negated() const { return make(Int(-z)); }
  int sign() const { return sgn(z); }
  Int abs_z() const { return abs(z); }
};

struct ZElem {
  Int re;
  Int im;

  ZElem() = default;
  ZElem(Int a, Int b) : re(std::move(a)), im(std::move(b)) {}
  ZElem(long a, long b) : re(a), im(b) {}

  bool is_zero() const { return re == 0 && im == 0; }
};

bool operator==(const ZElem& a, const ZElem& b);
inline bool operator!=(const ZElem& a, const ZElem& b) { return !(a == b); }
// Lexicographic on (re, im); used for deterministic output ordering.
bool operator<(const ZElem& a, const ZElem& b);

struct EmbeddingMatrix {
  Int m11, m12, m21, m22;
  Int det() const { return m11 * m22 - m12 * m21; }
  EmbeddingMatrix operator*(const EmbeddingMatrix& o) const;
  bool operator==(const EmbeddingMatrix& o) const;
};

ZElem add(const ZContext& ctx, const ZElem& a, const ZElem& b, bool subtract = false);
ZElem mul(const ZContext& ctx, const ZElem& a, const ZElem& b);
ZElem conj(const ZContext& ctx, const ZElem& a);
ZElem mirror_conj(const ZContext& ctx, const ZElem& a);
Int norm(const ZContext& ctx, const ZElem& a);
Int oriented_area(const ZElem& a, const ZElem& b);

// q with den*q = num, or nullopt when no such q exists in Z[i_z].
// Throws ZeroDivisorError when norm(den) = 0.
std::optional<ZElem> divide_exact(const ZContext& ctx, const ZElem& num, const ZElem& den);

// Isomorphism Z[i_z] -> Z[i_{-z}], (a1, a2) -> (a1, -a2).
ZElem phi_map(const ZContext& ctx, const ZElem& a);

EmbeddingMatrix embed_matrix(const ZContext& ctx, const ZElem& a);

// Inverse when a is a unit (norm +-1), otherwise nullopt.
std::optional<ZElem> is_unit(const ZContext& ctx, const ZElem& a);

ZElem neg(const ZElem& a);
ZElem scale(const ZElem& a, const Int& k);
ZElem pow(const ZContext& ctx, const ZElem& a, unsigned long e);
Int content(const ZElem& a);  // gcd of the components
bool is_primitive(const ZElem& a);

Int isqrt(const Int& n);
bool is_square(const Int& n, Int* root = nullptr);
bool is_prime(const Int& n);

std::string to_string(const ZElem& a);

}  // namespace zring
