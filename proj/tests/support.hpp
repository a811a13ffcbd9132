#pragma once

#include "zring/core.hpp"

#include <random>

namespace zring::test {

inline Int rand_int(std::mt19937_64& rng, long long lo, long long hi) {
  std::uniform_int_distribution<long long> d(lo, hi);
  return Int(std::to_string(d(rng)));
}

inline ZElem rand_elem(std::mt19937_64& rng, long long bound) {
  return ZElem(rand_int(rng, -bound, bound), rand_int(rng, -bound, bound));
}

inline ZElem rand_nonzero(std::mt19937_64& rng, long long bound) {
  ZElem a;
  do a = rand_elem(rng, bound);
  while (a.is_zero());
  return a;
}

constexpr long long kBig = 1000000000000000000LL;  // 10^18

}  // namespace zring::test
