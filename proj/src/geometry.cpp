#include "zring/geometry.hpp"

namespace zring {

namespace {

void require_nondegenerate(const ZContext& ctx, const char* what) {
  if (ctx.is_degenerate) throw DomainError(std::string(what) + ": z = +-2 has no subbranch structure");
}

// Branch of a point given only the sign of its level; valid for scaled
// directions because the tests are homogeneous.
Branch branch_by_sign(const ZContext& ctx, int sign_m, const ZElem& b) {
  if (abs(ctx.z) <= 1) return Branch::Whole;
  if (ctx.is_degenerate) {
    Int t = ctx.z > 0 ? Int(b.re + b.im) : Int(b.re - b.im);
    return t > 0 ? Branch::LinePlus : Branch::LineMinus;
  }
  if (sign_m > 0) {
    Int t = ctx.z > 0 ? Int(b.re + b.im) : Int(b.re - b.im);
    return t > 0 ? Branch::Upper : Branch::Lower;
  }
  return b.re < 0 ? Branch::QuadTwo : Branch::QuadFour;
}

}  // namespace

Anchor Anchor::lattice(const ZContext& ctx, const ZElem& a) {
  Anchor r;
  r.kind = AnchorKind::Lattice;
  r.elem = a;
  r.level = norm(ctx, a);
  if (r.level == 0) throw DomainError("anchor of norm 0");
  return r;
}

Anchor Anchor::canon_pos(const Int& M) {
  if (M <= 0) throw DomainError("CanonPos anchor needs M > 0");
  Anchor r;
  r.kind = AnchorKind::CanonPos;
  r.level = M;
  return r;
}

Anchor Anchor::canon_neg(const Int& M) {
  if (M >= 0) throw DomainError("CanonNeg anchor needs M < 0");
  Anchor r;
  r.kind = AnchorKind::CanonNeg;
  r.level = M;
  return r;
}

ZElem anchor_direction(const ZContext& ctx, const Anchor& a) {
  switch (a.kind) {
    case AnchorKind::Lattice:
      return a.elem;
    case AnchorKind::CanonPos:
      return ZElem(1, 0);
    case AnchorKind::CanonNeg:
      if (abs(ctx.z) < 3) throw DomainError("CanonNeg anchor needs |z| >= 3");
      return ZElem(Int(1), Int(-ctx.sign()));
  }
  return a.elem;
}

Side line_side(const Line& l, const ZElem& b) {
  Int v = l.lambda1 * b.re + l.lambda2 * b.im;
  if (v > 0) return Side::Above;
  if (v < 0) return Side::Below;
  return Side::On;
}

const char* branch_name(Branch b) {
  switch (b) {
    case Branch::Whole: return "whole";
    case Branch::Upper: return "upper";
    case Branch::Lower: return "lower";
    case Branch::QuadTwo: return "quad-two";
    case Branch::QuadFour: return "quad-four";
    case Branch::LinePlus: return "line-plus";
    case Branch::LineMinus: return "line-minus";
  }
  return "?";
}

Branch branch_of(const ZContext& ctx, const Int& M, const ZElem& b) {
  if (M == 0) throw DomainError("branch_of: M = 0");
  if (norm(ctx, b) != M) throw DomainError("branch_of: norm of " + to_string(b) + " is not M");
  return branch_by_sign(ctx, sgn(M), b);
}

ZElem apply_imul(const ZContext& ctx, const ZElem& b, long n) {
  ZElem r = b;
  for (; n > 0; --n) r = ZElem(Int(-r.im), Int(r.re + ctx.z * r.im));
  for (; n < 0; ++n) r = ZElem(Int(r.re * ctx.z + r.im), Int(-r.re));
  return r;
}

ZElem apply_imul_neg(const ZContext& ctx, const ZElem& b, long n) {
  ZElem r = apply_imul(ctx, b, n);
  return (n % 2 != 0) ? neg(r) : r;
}

ZElem shift(const ZContext& ctx, const ZElem& b, long n) {
  return ctx.z >= 0 ? apply_imul(ctx, b, n) : apply_imul_neg(ctx, b, n);
}

bool in_subbranch(const ZContext& ctx, const Anchor& anchor, const ZElem& b) {
  require_nondegenerate(ctx, "in_subbranch");
  const Int& M = anchor.level;
  if (M == 0) throw DomainError("in_subbranch: degenerate anchor");
  if (norm(ctx, b) != M) throw DomainError("in_subbranch: norm of " + to_string(b) + " is not the anchor level");
  const ZElem d = anchor_direction(ctx, anchor);
  const int sm = sgn(M);
  if (branch_by_sign(ctx, sm, d) != branch_by_sign(ctx, sm, b)) return false;
  const int sigma = ctx.z >= 0 ? sm : -sm;
  const ZElem id = shift(ctx, d, 1);
  return sigma * sgn(oriented_area(d, b)) >= 0 && sigma * sgn(oriented_area(id, b)) < 0;
}

bool in_closed_branch(const ZContext& ctx, const ZElem& a1, const ZElem& a2, const ZElem& b) {
  if (abs(ctx.z) < 2) throw DomainError("in_closed_branch: needs |z| >= 2");
  const Int M = norm(ctx, b);
  if (M == 0 || norm(ctx, a1) != M || norm(ctx, a2) != M)
    throw DomainError("in_closed_branch: points are not on one level set");
  const int sm = sgn(M);
  const Branch br = branch_by_sign(ctx, sm, b);
  if (branch_by_sign(ctx, sm, a1) != br || branch_by_sign(ctx, sm, a2) != br)
    throw DomainError("in_closed_branch: points are not on one branch");
  return sgn(oriented_area(a1, b)) * sgn(oriented_area(a2, b)) <= 0;
}

int cyclic_order(const ZContext& ctx) {
  if (ctx.z == 0) return 4;
  if (abs(ctx.z) == 1) return 6;
  return 0;
}

long default_window(const ZContext& ctx, const ZElem& b) {
  if (int order = cyclic_order(ctx)) return order;
  size_t bits = mpz_sizeinbase(b.re.get_mpz_t(), 2) + mpz_sizeinbase(b.im.get_mpz_t(), 2);
  return static_cast<long>(2 * bits + 16);
}

std::optional<Location> locate_in_partition(const ZContext& ctx, const Anchor& anchor,
                                            const ZElem& b, long window) {
  require_nondegenerate(ctx, "locate_in_partition");
  const Int& M = anchor.level;
  if (norm(ctx, b) != M) throw DomainError("locate_in_partition: norm of " + to_string(b) + " is not the anchor level");

  if (int order = cyclic_order(ctx)) {
    for (long j = 0; j < order; ++j)
      if (in_subbranch(ctx, anchor, shift(ctx, b, -j))) return Location{j, 1};
    return std::nullopt;
  }

  const int sm = sgn(M);
  const ZElem d = anchor_direction(ctx, anchor);
  const ZElem id = shift(ctx, d, 1);
  const int sigma = ctx.z >= 0 ? sm : -sm;
  const int s = branch_by_sign(ctx, sm, d) == branch_by_sign(ctx, sm, b) ? 1 : -1;
  ZElem beta = s > 0 ? b : neg(b);
  long j = 0;
  for (long step = 0; step <= window; ++step) {
    if (sigma * sgn(oriented_area(d, beta)) < 0) {
      beta = shift(ctx, beta, 1);
      --j;
    } else if (sigma * sgn(oriented_area(id, beta)) >= 0) {
      beta = shift(ctx, beta, -1);
      ++j;
    } else {
      return Location{j, s};
    }
  }
  return std::nullopt;
}

}  // namespace zring
