#include "zring/units.hpp"

#include <algorithm>

namespace zring {

UnitGroupDescriptor unit_group(const ZContext& ctx) {
  UnitGroupDescriptor d;
  const Int az = abs(ctx.z);
  if (az <= 1) {
    d.structure = UnitStructure::Cyclic;
    d.order = ctx.z == 0 ? 4 : 6;
    d.generators = {unit_generator(ctx)};
  } else {
    d.structure = UnitStructure::SignTimesInfinite;
    d.generators = {ZElem(-1, 0), unit_generator(ctx)};
  }
  d.has_negative_norm_units = (az == 3);
  return d;
}

ZElem unit_generator(const ZContext& ctx) {
  const Int s = ctx.sign();
  if (ctx.z == 0) return ZElem(0, 1);
  if (abs(ctx.z) == 3) return ZElem(Int(-1), s);
  return ZElem(Int(0), s);
}

int shift_exponent(const ZContext& ctx) { return abs(ctx.z) == 3 ? 2 : 1; }

ZElem unit_from_indices(const ZContext& ctx, int k, long n) {
  const ZElem g = unit_generator(ctx);
  const UnitGroupDescriptor d = unit_group(ctx);
  if (d.structure == UnitStructure::Cyclic) n = ((n % d.order) + d.order) % d.order;
  ZElem u = pow(ctx, g, static_cast<unsigned long>(n < 0 ? -n : n));
  if (n < 0) u = *is_unit(ctx, u);
  return (k % 2 != 0) ? neg(u) : u;
}

std::vector<ZElem> enumerate_units(const ZContext& ctx, long n_lo, long n_hi) {
  if (n_lo > n_hi) throw DomainError("enumerate_units: n_lo > n_hi");
  const UnitGroupDescriptor d = unit_group(ctx);
  std::vector<ZElem> out;
  auto push = [&](const ZElem& u) {
    if (std::find(out.begin(), out.end(), u) == out.end()) out.push_back(u);
  };
  if (d.structure == UnitStructure::Cyclic) {
    for (long n = 0; n < d.order; ++n) push(unit_from_indices(ctx, 0, n));
    return out;
  }
  for (long n = n_lo; n <= n_hi; ++n)
    for (int k = 0; k < 2; ++k) push(unit_from_indices(ctx, k, n));
  return out;
}

}  // namespace zring
