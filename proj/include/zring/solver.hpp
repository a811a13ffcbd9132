#pragma once

#include "zring/core.hpp"
#include "zring/geometry.hpp"

#include <optional>
#include <string>
#include <vector>

namespace zring {

struct CanonicalSolution {
  ZElem elem;
  bool primitive = false;
  std::size_t class_index = 0;  // position in the canonical list
};

// |z| = 2 and M = r^2 > 0: every lattice point of x + y = +-r (z = 2) or x - y = +-r (z = -2).
struct ParametricLine {
  Int root;
  std::string family;
};

struct SolutionReport {
  Int z;
  Int M;
  std::vector<CanonicalSolution> canonical;
  std::optional<ParametricLine> parametric_line;
  bool solvable = false;
};

// CanonPos for M > 0, CanonNeg for M < 0 (|z| >= 3).
Anchor canonical_anchor(const ZContext& ctx, const Int& M);

// Sup-norm bound on the coordinates of the canonical arc.
Int enumeration_bound(const ZContext& ctx, const Int& M);

SolutionReport solve_canonical(const ZContext& ctx, const Int& M);

struct Normalized {
  ZElem canonical;
  int k = 0;   // sign exponent
  long n = 0;  // generator exponent
};

// (-1)^k g^n * g_in lies in the canonical subbranch of its level.
Normalized normalize_to_canonical(const ZContext& ctx, const ZElem& g);

enum class CertificateKind { EmptyLevelSet, LatticeFreeLines, ArcScan };

const char* certificate_kind_name(CertificateKind k);

// Checked evidence that x^2 + zxy + y^2 = M has no integer solution.
// ArcScan certificates describe a scan over the canonical arc in the ring with
// parameter reduced_z = |z|. For M > 0 the scanned coordinate is x in [lo, hi].
// For M < 0 it is y in [-hi, -lo]. The arc's endpoint area is
// |<a1,a2>| = area_num / area_den, and the bound |<a1,a2>| >= |M| is recorded.
struct NoSolutionCertificate {
  CertificateKind kind = CertificateKind::ArcScan;
  Int z;
  Int M;
  Int reduced_z;
  char axis = 'x';
  Int lo;
  Int hi;
  Int area_num;
  Int area_den;
  bool area_bound_holds = false;
};

std::optional<NoSolutionCertificate> no_solution_certificate(const ZContext& ctx, const Int& M);

// Re-checks a certificate from its own data.
bool verify_certificate(const NoSolutionCertificate& cert);

bool in_quadrant(const ZElem& b, int quadrant);

struct QuadrantResult {
  std::vector<ZElem> elements;
  bool truncated = false;
  bool infinite = false;
};

// Solutions in the closed quadrant, smallest first by (max(|x|,|y|), x, y),
// at most `limit` of them.
QuadrantResult solutions_in_quadrant(const ZContext& ctx, const Int& M, int quadrant,
                                     std::size_t limit);

// Orders elements by (max(|x|,|y|), x, y).
bool size_less(const ZElem& a, const ZElem& b);

}  // namespace zring
