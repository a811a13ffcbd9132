#pragma once

#include "zring/core.hpp"

#include <optional>
#include <string>
#include <vector>

namespace zring {

enum class Verdict { Regular, IrregularTypeI, IrregularTypeII, Special };

// Lowercase hyphenated tag, e.g. "irregular-type-II".
std::string verdict_tag(Verdict v);

struct PrimeClassification {
  Int p;
  Verdict verdict = Verdict::Regular;
  // norm(factor) = p for TypeI/Special, = -p for TypeII; empty when Regular.
  std::optional<ZElem> factor;
};

PrimeClassification classify_prime(const ZContext& ctx, const Int& p);

std::vector<Int> special_elements(const ZContext& ctx);

// For 2 - |z| < M < 2 + |z|: M is a norm iff M is a perfect square.
bool representable_in_gap(const ZContext& ctx, const Int& M);

struct NonUfdExplanation {
  std::string side;     // "2+z" or "2-z"
  Int composite_value;  // the composite one of 2 +- z
  Int gap_bound;        // |z| - 2; p < gap_bound makes p regular
  bool p_regular = false;
  bool base_not_divisible = false;
};

struct NonUfdWitness {
  Int z;
  Int p;
  ZElem irreducible_nonprime;  // (p, 0)
  ZElem base;
  ZElem square;
  ZElem cofactor;
  NonUfdExplanation explanation;
};

std::optional<NonUfdWitness> non_ufd_witness(const ZContext& ctx);

// Re-derives every identity and the irreducibility of p.
bool verify_witness(const NonUfdWitness& w);

Int smallest_prime_factor(const Int& n);

}  // namespace zring
