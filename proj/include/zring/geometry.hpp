#pragma once

#include "zring/core.hpp"

#include <optional>

namespace zring {

struct Line {
  Int lambda1;
  Int lambda2;
};

enum class Side { Above, Below, On };

enum class Branch { Whole, Upper, Lower, QuadTwo, QuadFour, LinePlus, LineMinus };

enum class AnchorKind { Lattice, CanonPos, CanonNeg };

// Lattice anchors carry their element. CanonPos stands for sqrt(M)*(1,0) (M > 0).
// CanonNeg stands for c*(1,-sign z) with c = sqrt(|M|/(|z|-2)) (M < 0, |z| >= 3).
struct Anchor {
  AnchorKind kind = AnchorKind::Lattice;
  ZElem elem;
  Int level;

  static Anchor lattice(const ZContext& ctx, const ZElem& a);
  static Anchor canon_pos(const Int& M);
  static Anchor canon_neg(const Int& M);
};

// Direction vector of an anchor; the anchor is this direction times a
// positive scale s with s^2 = level / norm(direction).
ZElem anchor_direction(const ZContext& ctx, const Anchor& a);

Side line_side(const Line& l, const ZElem& b);

const char* branch_name(Branch b);
Branch branch_of(const ZContext& ctx, const Int& M, const ZElem& b);

// i_z^n * b.
ZElem apply_imul(const ZContext& ctx, const ZElem& b, long n);
// (-i_z)^n * b.
ZElem apply_imul_neg(const ZContext& ctx, const ZElem& b, long n);
// The shift I^n that walks a branch: I+ for z >= 0, I- for z < 0.
ZElem shift(const ZContext& ctx, const ZElem& b, long n);

bool in_subbranch(const ZContext& ctx, const Anchor& anchor, const ZElem& b);

// <a1,b><a2,b> <= 0 for three lattice points on one branch.
bool in_closed_branch(const ZContext& ctx, const ZElem& a1, const ZElem& a2, const ZElem& b);

struct Location {
  long j = 0;
  int s = 1;  // +1 or -1
};

// The (j, s) with shift^{-j}(s*b) in the subbranch of the anchor, if found within
// |j| <= window.
std::optional<Location> locate_in_partition(const ZContext& ctx, const Anchor& anchor,
                                            const ZElem& b, long window);

// A window large enough for locate_in_partition on inputs of b's size.
long default_window(const ZContext& ctx, const ZElem& b);

// Order of the shift for |z| <= 1 (4 or 6), otherwise 0.
int cyclic_order(const ZContext& ctx);

}  // namespace zring
