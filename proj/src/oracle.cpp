#include "zring/oracle.hpp"

#include <algorithm>
#include <cstdint>

namespace zring::oracle {

namespace {

// Small boxes are scanned in 64-bit arithmetic; |x|,|y|,|z| < 2^20 keeps every
// term of the form below 2^61.
constexpr long kFastLimit = 1L << 20;

bool fits_fast(const ZContext& ctx, const Int& bound) {
  return bound < kFastLimit && abs(ctx.z) < kFastLimit;
}

template <class Visit>
void scan(const ZContext& ctx, const Int& bound, Visit&& visit) {
  if (fits_fast(ctx, bound)) {
    const std::int64_t b = bound.get_si();
    const std::int64_t z = ctx.z.get_si();
    for (std::int64_t x = -b; x <= b; ++x)
      for (std::int64_t y = -b; y <= b; ++y) visit(x, y, x * x + z * x * y + y * y);
    return;
  }
  throw DomainError("oracle window too large for a brute-force scan");
}

}  // namespace

std::vector<ZElem> brute_solutions(const ZContext& ctx, const Int& M, const OracleWindow& w) {
  std::vector<ZElem> out;
  if (!M.fits_slong_p()) return out;
  const long m = M.get_si();
  scan(ctx, w.bound, [&](std::int64_t x, std::int64_t y, std::int64_t v) {
    if (v == m) out.emplace_back(Int(x), Int(y));
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::map<Int, std::vector<ZElem>> brute_level_sets(const ZContext& ctx, const Int& m_lo,
                                                   const Int& m_hi, const OracleWindow& w) {
  std::map<Int, std::vector<ZElem>> out;
  const long lo = m_lo.get_si();
  const long hi = m_hi.get_si();
  scan(ctx, w.bound, [&](std::int64_t x, std::int64_t y, std::int64_t v) {
    if (v >= lo && v <= hi) out[Int(v)].emplace_back(Int(x), Int(y));
  });
  for (auto& [m, v] : out) std::sort(v.begin(), v.end());
  return out;
}

Int brute_count_first_quadrant(const ZContext& ctx, const Int& M, Int* primitive) {
  if (ctx.z < 0) throw DomainError("first-quadrant oracle requires z >= 0");
  Int total = 0;
  Int prim = 0;
  if (M > 0) {
    const Int b = isqrt(M);
    for (Int x = 0; x <= b; ++x) {
      for (Int y = x; y <= b; ++y) {
        if (x * x + ctx.z * x * y + y * y != M) continue;
        ++total;
        Int g;
        mpz_gcd(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
        if (g == 1) ++prim;
      }
    }
  }
  if (primitive) *primitive = prim;
  return total;
}

Int brute_count_positive_primitive(const ZContext& ctx, const Int& M) {
  Int prim;
  brute_count_first_quadrant(ctx, M, &prim);
  return prim;
}

}  // namespace zring::oracle
