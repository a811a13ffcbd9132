#pragma once

#include "zring/core.hpp"

#include <map>
#include <vector>

// Brute-force reference. Evaluates x^2 + zxy + y^2 directly over a box and
// depends on nothing but the value types in core.hpp.
namespace zring::oracle {

struct OracleWindow {
  Int bound;  // box |x|, |y| <= bound
};

// All (x,y) in the box with x^2 + zxy + y^2 = M, sorted lexicographically.
std::vector<ZElem> brute_solutions(const ZContext& ctx, const Int& M, const OracleWindow& w);

// One box scan bucketed by level, for every M in [m_lo, m_hi].
std::map<Int, std::vector<ZElem>> brute_level_sets(const ZContext& ctx, const Int& m_lo,
                                                   const Int& m_hi, const OracleWindow& w);

// Unordered pairs {x,y}, x,y >= 0, gcd 1, on the level M (z >= 0, M > 0).
Int brute_count_positive_primitive(const ZContext& ctx, const Int& M);

// Unordered pairs {x,y}, x,y >= 0, on the level M; primitive ones in *primitive.
Int brute_count_first_quadrant(const ZContext& ctx, const Int& M, Int* primitive = nullptr);

}  // namespace zring::oracle
