#pragma once

#include "zring/core.hpp"

#include <vector>

namespace zring {

enum class UnitStructure { Cyclic, SignTimesInfinite };

struct UnitGroupDescriptor {
  UnitStructure structure = UnitStructure::Cyclic;
  int order = 0;                // 4 or 6 for cyclic groups, 0 otherwise
  std::vector<ZElem> generators;
  bool has_negative_norm_units = false;
};

UnitGroupDescriptor unit_group(const ZContext& ctx);

// The generator g with (-1)^k g^n; the cyclic one for |z| <= 1.
ZElem unit_generator(const ZContext& ctx);

// (-1)^k g^n. For cyclic groups n is reduced modulo the order.
ZElem unit_from_indices(const ZContext& ctx, int k, long n);

// All (-1)^k g^n for k in {0,1}, n in [n_lo, n_hi]; the whole group when cyclic.
std::vector<ZElem> enumerate_units(const ZContext& ctx, long n_lo, long n_hi);

// Exponent e with shift = g^e (2 for |z| = 3, else 1).
int shift_exponent(const ZContext& ctx);

}  // namespace zring
