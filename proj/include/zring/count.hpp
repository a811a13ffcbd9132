#pragma once

#include "zring/classify.hpp"
#include "zring/core.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace zring {

enum class Disqualification { None, RegularPrime, SpecialExponent, SignMismatch };

const char* disqualification_tag(Disqualification d);

struct ZringFactor {
  ZElem elem;          // norm(elem) = sign * prime
  unsigned long exponent = 0;
  Int prime;           // the positive rational prime
  int sign = 1;        // sign of norm(elem)
  bool special = false;
};

struct FactorizationReport {
  Int M;
  std::vector<std::pair<Int, unsigned long>> rational_factorization;
  std::vector<ZringFactor> zring_factors;
  std::vector<std::pair<Int, unsigned long>> special_part;  // signed special prime, exponent
  bool qualifies = false;
  Disqualification reason = Disqualification::None;
  std::optional<std::string> disqualification_reason;
  bool conditional_on_ufd = false;  // set when a Regular prime disqualifies and |z| > 5
};

constexpr unsigned long kDefaultFactorBound = 1000000;

// Trial division of |M| up to `bound`; throws when a cofactor is left unproven.
std::vector<std::pair<Int, unsigned long>> factor_integer(const Int& M,
                                                          unsigned long bound = kDefaultFactorBound);

FactorizationReport zring_factorize(const ZContext& ctx, const Int& M,
                                    unsigned long factor_bound = kDefaultFactorBound);

struct CountResult {
  Int count;
  unsigned long nonspecial_primes = 0;
  Disqualification reason = Disqualification::None;
  bool conditional_on_ufd = false;
};

CountResult count_positive_primitive(const ZContext& ctx, const Int& M,
                                     unsigned long factor_bound = kDefaultFactorBound);

// Positive primitive solutions, one per unordered pair, sorted.
std::vector<ZElem> enumerate_positive_primitive(const ZContext& ctx, const Int& M,
                                                unsigned long factor_bound = kDefaultFactorBound);

// Verdict for z = 3 from |p| mod 5; the factor comes from the general solver.
PrimeClassification classify_prime_z3(const Int& p);

}  // namespace zring
