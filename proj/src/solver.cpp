#include "zring/solver.hpp"

#include "zring/units.hpp"

#include <algorithm>

namespace zring {

namespace {

struct Window {
  char axis;
  Int lo;
  Int hi;
};

// Integer window covering the canonical arc; ctx has z >= 0, z != 2.
Window arc_window(const ZContext& ctx, const Int& M) {
  if (M > 0) return {'x', Int(1), isqrt(M)};
  // y on the arc runs from -c to (1-z)c with c^2 = |M|/(z-2).
  const Int am = abs(M);
  const Int zm2 = ctx.z - 2;
  const Int zm1 = ctx.z - 1;
  Int lo = isqrt(am / zm2);
  while (zm2 * lo * lo < am) ++lo;
  const Int cap = zm1 * zm1 * am;
  Int hi = isqrt(cap / zm2);
  while (zm2 * (hi + 1) * (hi + 1) <= cap) ++hi;
  return {'y', lo, hi};
}

// Lattice points of the canonical arc found in the window; ctx has z >= 0.
std::vector<ZElem> scan_arc(const ZContext& ctx, const Int& M, const Window& w) {
  std::vector<ZElem> out;
  const Anchor anchor = canonical_anchor(ctx, M);
  const Int& z = ctx.z;
  for (Int t = w.lo; t <= w.hi; ++t) {
    Int r;
    if (!is_square(ctx.disc * t * t + 4 * M, &r)) continue;
    if (M > 0) {
      Int y2 = r - z * t;
      if (y2 < 0 || !mpz_even_p(y2.get_mpz_t())) continue;
      ZElem b(t, Int(y2 / 2));
      if (in_subbranch(ctx, anchor, b)) out.push_back(b);
    } else {
      const Int y = -t;
      for (int sgn_r : {1, -1}) {
        Int x2 = -z * y + sgn_r * r;
        if (!mpz_even_p(x2.get_mpz_t())) continue;
        ZElem b(Int(x2 / 2), y);
        if (in_subbranch(ctx, anchor, b) && std::find(out.begin(), out.end(), b) == out.end())
          out.push_back(b);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct Key {
  Int m, re, im;
};

Key size_key(const ZElem& b) {
  Int a = abs(b.re), c = abs(b.im);
  return {a > c ? a : c, b.re, b.im};
}

bool key_less(const Key& a, const Key& b) {
  if (int c = cmp(a.m, b.m)) return c < 0;
  if (int c = cmp(a.re, b.re)) return c < 0;
  return cmp(a.im, b.im) < 0;
}

int phi_quadrant(int q) {
  switch (q) {
    case 1: return 4;
    case 2: return 3;
    case 3: return 2;
    default: return 1;
  }
}

}  // namespace

bool size_less(const ZElem& a, const ZElem& b) { return key_less(size_key(a), size_key(b)); }

Anchor canonical_anchor(const ZContext& ctx, const Int& M) {
  if (M > 0) return Anchor::canon_pos(M);
  if (M < 0 && abs(ctx.z) >= 3) return Anchor::canon_neg(M);
  throw DomainError("no canonical anchor: the level set is empty or degenerate");
}

Int enumeration_bound(const ZContext& ctx, const Int& M) {
  if (M == 0) return 1;
  const Int az = abs(ctx.z);
  if (M > 0) return isqrt(M) + 1;
  if (az <= 2) return 1;
  const Window w = arc_window(ZContext::make(az), M);
  return az * w.hi + 1;
}

SolutionReport solve_canonical(const ZContext& ctx, const Int& M) {
  if (M == 0) throw DomainError("solve_canonical: M = 0 is answered by the zero-norm lemma");
  SolutionReport rep;
  rep.z = ctx.z;
  rep.M = M;
  if (ctx.is_degenerate) {
    Int r;
    if (M > 0 && is_square(M, &r)) {
      rep.solvable = true;
      rep.parametric_line = ParametricLine{
          r, ctx.z > 0 ? "x + y = +-" + r.get_str() : "x - y = +-" + r.get_str()};
    }
    return rep;
  }
  if (M < 0 && abs(ctx.z) <= 1) return rep;

  std::vector<ZElem> found;
  if (ctx.z < 0) {
    const ZContext pos = ctx.negated();
    for (const ZElem& b : scan_arc(pos, M, arc_window(pos, M))) found.push_back(phi_map(pos, b));
    std::sort(found.begin(), found.end());
  } else {
    found = scan_arc(ctx, M, arc_window(ctx, M));
  }
  for (std::size_t i = 0; i < found.size(); ++i)
    rep.canonical.push_back({found[i], is_primitive(found[i]), i});
  rep.solvable = !rep.canonical.empty();
  return rep;
}

Normalized normalize_to_canonical(const ZContext& ctx, const ZElem& g) {
  if (ctx.is_degenerate) throw DomainError("normalize_to_canonical: z = +-2 excluded");
  const Int M = norm(ctx, g);
  if (M == 0) throw DomainError("normalize_to_canonical: zero-norm input");
  const Anchor anchor = canonical_anchor(ctx, M);
  const auto loc = locate_in_partition(ctx, anchor, g, default_window(ctx, g));
  if (!loc) throw DomainError("normalize_to_canonical: partition window exhausted");
  Normalized r;
  r.canonical = shift(ctx, loc->s > 0 ? g : neg(g), -loc->j);
  if (int order = cyclic_order(ctx)) {
    r.k = 0;
    r.n = ((-loc->j) % order + order) % order;
  } else {
    r.k = loc->s > 0 ? 0 : 1;
    r.n = -loc->j * shift_exponent(ctx);
  }
  return r;
}

const char* certificate_kind_name(CertificateKind k) {
  switch (k) {
    case CertificateKind::EmptyLevelSet: return "empty-level-set";
    case CertificateKind::LatticeFreeLines: return "lattice-free-lines";
    case CertificateKind::ArcScan: return "arc-scan";
  }
  return "?";
}

std::optional<NoSolutionCertificate> no_solution_certificate(const ZContext& ctx, const Int& M) {
  if (M == 0) throw DomainError("no_solution_certificate: M = 0");
  if (solve_canonical(ctx, M).solvable) return std::nullopt;
  NoSolutionCertificate c;
  c.z = ctx.z;
  c.M = M;
  c.reduced_z = abs(ctx.z);
  if (M < 0 && c.reduced_z <= 2) {
    c.kind = CertificateKind::EmptyLevelSet;
    return c;
  }
  if (ctx.is_degenerate) {
    c.kind = CertificateKind::LatticeFreeLines;
    return c;
  }
  const ZContext red = ZContext::make(c.reduced_z);
  const Window w = arc_window(red, M);
  c.kind = CertificateKind::ArcScan;
  c.axis = w.axis;
  c.lo = w.lo;
  c.hi = w.hi;
  const ZElem d = anchor_direction(red, canonical_anchor(red, M));
  c.area_num = abs(M) * abs(oriented_area(d, shift(red, d, 1)));
  c.area_den = abs(norm(red, d));
  c.area_bound_holds = c.area_num >= abs(M) * c.area_den;
  return c;
}

bool verify_certificate(const NoSolutionCertificate& cert) {
  if (cert.M == 0 || cert.reduced_z != abs(cert.z)) return false;
  switch (cert.kind) {
    case CertificateKind::EmptyLevelSet:
      // 4N = (2x + zy)^2 + (4 - z^2) y^2 >= 0 when |z| <= 2.
      return cert.M < 0 && cert.reduced_z <= 2;
    case CertificateKind::LatticeFreeLines:
      // N = (x +- y)^2, so M must be a square.
      return cert.reduced_z == 2 && cert.M > 0 && !is_square(cert.M);
    case CertificateKind::ArcScan:
      break;
  }
  if (cert.reduced_z == 2) return false;
  if (cert.M < 0 && cert.reduced_z < 3) return false;
  const ZContext red = ZContext::make(cert.reduced_z);
  const Window need = arc_window(red, cert.M);
  if (cert.axis != need.axis || cert.lo > need.lo || cert.hi < need.hi) return false;
  const ZElem d = anchor_direction(red, canonical_anchor(red, cert.M));
  const Int num = abs(cert.M) * abs(oriented_area(d, shift(red, d, 1)));
  const Int den = abs(norm(red, d));
  if (num != cert.area_num || den != cert.area_den || num < abs(cert.M) * den) return false;
  return scan_arc(red, cert.M, {cert.axis, cert.lo, cert.hi}).empty();
}

bool in_quadrant(const ZElem& b, int q) {
  switch (q) {
    case 1: return b.re >= 0 && b.im >= 0;
    case 2: return b.re <= 0 && b.im >= 0;
    case 3: return b.re <= 0 && b.im <= 0;
    case 4: return b.re >= 0 && b.im <= 0;
  }
  throw DomainError("quadrant must be 1..4");
}

QuadrantResult solutions_in_quadrant(const ZContext& ctx, const Int& M, int quadrant,
                                     std::size_t limit) {
  if (quadrant < 1 || quadrant > 4) throw DomainError("quadrant must be 1..4");
  if (ctx.is_degenerate) throw DomainError("solutions_in_quadrant: z = +-2 excluded");
  if (M == 0) throw DomainError("solutions_in_quadrant: M = 0");

  if (ctx.z < 0) {
    const ZContext pos = ctx.negated();
    QuadrantResult r = solutions_in_quadrant(pos, M, phi_quadrant(quadrant), limit);
    for (ZElem& b : r.elements) b = phi_map(pos, b);
    std::sort(r.elements.begin(), r.elements.end(), size_less);
    return r;
  }

  QuadrantResult out;
  const SolutionReport rep = solve_canonical(ctx, M);
  std::vector<ZElem> hits;
  auto finish = [&]() {
    std::sort(hits.begin(), hits.end(), size_less);
    if (hits.size() > limit) {
      out.truncated = true;
      hits.resize(limit);
    }
    out.elements = std::move(hits);
    return out;
  };

  if (int order = cyclic_order(ctx)) {
    for (const auto& c : rep.canonical)
      for (long j = 0; j < order; ++j) {
        ZElem b = shift(ctx, c.elem, j);
        if (in_quadrant(b, quadrant)) hits.push_back(b);
      }
    return finish();
  }

  // z >= 3. Each orbit starts at +-rep and each direction heads for a fixed
  // quadrant (the one containing the asymptote it approaches).
  struct Stream {
    ZElem cur;
    int dir;
    int eventual;
    bool active = true;
    bool has_prev = false;
    Key prev;
  };
  std::vector<Stream> streams;
  for (const auto& c : rep.canonical) {
    for (int s : {1, -1}) {
      ZElem base = s > 0 ? c.elem : neg(c.elem);
      if (in_quadrant(base, quadrant)) hits.push_back(base);
      for (int dir : {1, -1}) {
        int eventual;
        if (M > 0) eventual = (s * dir > 0) ? 2 : 4;
        else eventual = s > 0 ? 4 : 2;
        streams.push_back({base, dir, eventual, true, false, Key{}});
      }
    }
  }
  for (const Stream& st : streams)
    if (st.eventual == quadrant) out.infinite = true;
  if (out.infinite && limit == 0) {
    out.truncated = true;
    return out;
  }

  constexpr long kMaxRounds = 1L << 16;
  for (long round = 1; round <= kMaxRounds; ++round) {
    bool any_active = false;
    for (Stream& st : streams) {
      if (!st.active) continue;
      st.cur = shift(ctx, st.cur, st.dir);
      const bool inside = in_quadrant(st.cur, quadrant);
      if (inside) hits.push_back(st.cur);
      if (!inside && st.eventual != quadrant) {
        st.active = false;
        continue;
      }
      any_active = true;
    }
    if (!any_active) return finish();
    if (!out.infinite || hits.size() < limit) {
      for (Stream& st : streams)
        if (st.active) {
          st.prev = size_key(st.cur);
          st.has_prev = true;
        }
      continue;
    }
    std::vector<ZElem> sorted = hits;
    std::nth_element(sorted.begin(), sorted.begin() + (limit - 1), sorted.end(), size_less);
    const Key bar = size_key(sorted[limit - 1]);
    bool done = true;
    for (Stream& st : streams) {
      if (!st.active) continue;
      const Key k = size_key(st.cur);
      if (st.eventual != quadrant || !in_quadrant(st.cur, quadrant) || !st.has_prev ||
          !key_less(st.prev, k) || !key_less(bar, k))
        done = false;
      st.prev = k;
      st.has_prev = true;
    }
    if (done) {
      finish();
      out.truncated = true;
      return out;
    }
  }
  throw DomainError("solutions_in_quadrant: orbit walk did not settle");
}

}  // namespace zring
