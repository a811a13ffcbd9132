#include "plot.hpp"
#include "zring/classify.hpp"
#include "zring/count.hpp"
#include "zring/geometry.hpp"
#include "zring/oracle.hpp"
#include "zring/solver.hpp"
#include "zring/units.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <regex>
#include <set>
#include <sstream>

using json = nlohmann::json;
using namespace zring;

namespace {

struct VerifyError : DomainError {
  using DomainError::DomainError;
};

// Largest oracle box the --verify checks will scan.
const Int kVerifyBox = 4000;

struct Opts {
  std::string z = "0", m, p, range_lo, range_hi, out;
  int quadrant = 1;
  std::size_t limit = 20;
  bool as_json = false, as_csv = false, verify = false;
  unsigned long factor_bound = kDefaultFactorBound;
};

struct Output {
  json result = json::object();
  json inputs = json::object();
  std::vector<std::string> warnings;
  std::optional<std::string> raw;  // replaces the JSON body (CSV)
};

Int parse_int(const std::string& s) {
  Int v;
  if (v.set_str(s[0] == '+' ? s.substr(1) : s, 10) != 0) throw CLI::ValidationError("not an integer: " + s);
  return v;
}

json elem(const ZElem& a) { return json::array({a.re.get_str(), a.im.get_str()}); }

json elems(const std::vector<ZElem>& v) {
  json a = json::array();
  for (const auto& e : v) a.push_back(elem(e));
  return a;
}

Int sup(const ZElem& a) { return std::max(abs(a.re), abs(a.im)); }

std::string text_value(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

// Oracle window for the canonical arc of level M, or nullopt when too large to scan.
std::optional<Int> oracle_box(const ZContext& ctx, const Int& M, Output& o) {
  Int box = 8;
  if (!(M < 0 && abs(ctx.z) <= 1)) box = std::max(box, Int(2 * enumeration_bound(ctx, M)));
  if (box > kVerifyBox) {
    o.warnings.push_back("verification skipped: oracle window " + box.get_str() + " exceeds " + kVerifyBox.get_str());
    return std::nullopt;
  }
  return box;
}

void require(bool cond, const std::string& what) {
  if (!cond) throw VerifyError("verification failed: " + what);
}

json certificate_json(const NoSolutionCertificate& c) {
  json j;
  j["kind"] = certificate_kind_name(c.kind);
  j["reduced_z"] = c.reduced_z.get_str();
  j["axis"] = std::string(1, c.axis);
  j["lo"] = c.lo.get_str();
  j["hi"] = c.hi.get_str();
  j["area_num"] = c.area_num.get_str();
  j["area_den"] = c.area_den.get_str();
  j["area_bound_holds"] = c.area_bound_holds;
  j["verified"] = verify_certificate(c);
  return j;
}

void verify_solve(const ZContext& ctx, const Int& M, const SolutionReport& rep, Output& o) {
  if (ctx.is_degenerate) {
    o.warnings.push_back("verification skipped: z = +-2 level sets are parametric lines");
    return;
  }
  const auto box = oracle_box(ctx, M, o);
  if (!box) return;
  const auto sols = oracle::brute_solutions(ctx, M, {*box});
  require(rep.solvable == !sols.empty(), "solvability disagrees with the oracle");
  if (M < 0 && abs(ctx.z) <= 1) return;
  const Anchor an = canonical_anchor(ctx, M);
  std::vector<ZElem> want, got;
  for (const auto& b : sols)
    if (in_subbranch(ctx, an, b)) want.push_back(b);
  for (const auto& c : rep.canonical) got.push_back(c.elem);
  require(want == got, "canonical list disagrees with the oracle");
}

SolutionReport run_solve(const ZContext& ctx, const Int& M, bool verify, Output& o) {
  const SolutionReport rep = solve_canonical(ctx, M);
  json list = json::array();
  for (const auto& c : rep.canonical)
    list.push_back({{"elem", elem(c.elem)}, {"primitive", c.primitive}, {"class_index", c.class_index}});
  o.result["solvable"] = rep.solvable;
  o.result["canonical"] = list;
  if (rep.parametric_line)
    o.result["parametric_line"] = {{"root", rep.parametric_line->root.get_str()},
                                   {"family", rep.parametric_line->family}};
  if (!rep.solvable)
    if (auto cert = no_solution_certificate(ctx, M)) {
      o.result["certificate"] = certificate_json(*cert);
      if (verify) require(verify_certificate(*cert), "certificate does not check");
    }
  if (verify) verify_solve(ctx, M, rep, o);
  return rep;
}

void cmd_quadrant(const ZContext& ctx, const Opts& op, Output& o) {
  const Int M = parse_int(op.m);
  o.inputs["m"] = M.get_str();
  o.inputs["quadrant"] = op.quadrant;
  o.inputs["limit"] = op.limit;
  if (op.quadrant < 1 || op.quadrant > 4) throw DomainError("quadrant must be 1, 2, 3 or 4");
  const QuadrantResult q = solutions_in_quadrant(ctx, M, op.quadrant, op.limit);
  o.result["elements"] = elems(q.elements);
  o.result["truncated"] = q.truncated;
  o.result["infinite"] = q.infinite;
  if (!op.verify) return;
  if (ctx.is_degenerate) {
    o.warnings.push_back("verification skipped: z = +-2 level sets are parametric lines");
    return;
  }
  auto box = oracle_box(ctx, M, o);
  if (!box) return;
  for (const auto& e : q.elements) *box = std::max(*box, Int(2 * sup(e) + 2));
  if (*box > kVerifyBox) {
    o.warnings.push_back("verification skipped: oracle window " + box->get_str() + " exceeds " + kVerifyBox.get_str());
    return;
  }
  std::vector<ZElem> want;
  for (const auto& b : oracle::brute_solutions(ctx, M, {*box}))
    if (in_quadrant(b, op.quadrant)) want.push_back(b);
  std::sort(want.begin(), want.end(), size_less);
  if (q.truncated) want.resize(std::min(want.size(), q.elements.size()));
  require(want == q.elements, "quadrant list disagrees with the oracle");
}

json classification_json(const PrimeClassification& c) {
  json j;
  j["p"] = c.p.get_str();
  j["verdict"] = verdict_tag(c.verdict);
  j["factor"] = c.factor ? elem(*c.factor) : json(nullptr);
  return j;
}

void verify_classification(const ZContext& ctx, const PrimeClassification& c, Output& o) {
  if (c.factor) require(norm(ctx, *c.factor) == (c.verdict == Verdict::IrregularTypeII ? Int(-c.p) : c.p),
                        "factor norm for " + c.p.get_str());
  if (ctx.is_degenerate) return;
  for (const Int& m : {c.p, Int(-c.p)}) {
    const auto box = oracle_box(ctx, m, o);
    if (!box) return;
    const bool hit = !oracle::brute_solutions(ctx, m, {*box}).empty();
    const bool claimed = (m == c.p) ? (c.verdict == Verdict::IrregularTypeI || c.verdict == Verdict::Special)
                                    : (c.verdict != Verdict::Regular);
    if (m == c.p || c.verdict == Verdict::Regular || c.verdict == Verdict::IrregularTypeII)
      require(hit == claimed, "verdict for " + c.p.get_str() + " disagrees with the oracle at level " + m.get_str());
  }
}

void cmd_classify(const ZContext& ctx, const Opts& op, Output& o) {
  const Int p = parse_int(op.p);
  o.inputs["p"] = p.get_str();
  const PrimeClassification c = classify_prime(ctx, p);
  o.result = classification_json(c);
  if (op.verify) verify_classification(ctx, c, o);
}

void cmd_classify_table(const ZContext& ctx, const Opts& op, Output& o) {
  if (op.range_lo.empty() || op.range_hi.empty()) throw CLI::ValidationError("--range-lo and --range-hi are required");
  const Int lo = parse_int(op.range_lo), hi = parse_int(op.range_hi);
  if (lo > hi) throw DomainError("empty range: range-lo > range-hi");
  if (hi - lo > 1000000) throw DomainError("range wider than 10^6");
  o.inputs["range_lo"] = lo.get_str();
  o.inputs["range_hi"] = hi.get_str();
  json rows = json::array();
  std::string csv = "p,verdict,factor_re,factor_im\n";
  for (Int v = lo; v <= hi; ++v) {
    if (!is_prime(v)) continue;
    const PrimeClassification c = classify_prime(ctx, v);
    if (op.verify) verify_classification(ctx, c, o);
    rows.push_back(classification_json(c));
    csv += v.get_str() + "," + verdict_tag(c.verdict) + "," + (c.factor ? c.factor->re.get_str() : "") + "," +
           (c.factor ? c.factor->im.get_str() : "") + "\n";
  }
  o.result["rows"] = rows;
  if (op.as_csv) o.raw = csv;
}

void cmd_units(const ZContext& ctx, const Opts& op, Output& o) {
  const long lo = op.range_lo.empty() ? -2 : std::stol(op.range_lo);
  const long hi = op.range_hi.empty() ? 2 : std::stol(op.range_hi);
  if (lo > hi || hi - lo > 10000) throw DomainError("unit range must satisfy 0 <= range-hi - range-lo <= 10^4");
  o.inputs["range_lo"] = lo;
  o.inputs["range_hi"] = hi;
  const UnitGroupDescriptor d = unit_group(ctx);
  o.result["structure"] = d.structure == UnitStructure::Cyclic ? "cyclic" : "sign-times-infinite";
  o.result["order"] = d.order;
  o.result["generators"] = elems(d.generators);
  o.result["has_negative_norm_units"] = d.has_negative_norm_units;
  o.result["shift_exponent"] = shift_exponent(ctx);
  const auto units = enumerate_units(ctx, lo, hi);
  o.result["units"] = elems(units);
  if (!op.verify) return;
  for (const auto& u : units) require(abs(norm(ctx, u)) == 1, to_string(u) + " is not a unit");
  if (d.order) {
    std::vector<ZElem> want;
    for (const auto& b : oracle::brute_solutions(ctx, Int(1), {Int(2)})) want.push_back(b);
    std::vector<ZElem> got = units;
    std::sort(got.begin(), got.end());
    require(got == want, "cyclic unit group disagrees with the oracle");
  }
}

json count_json(const CountResult& r) {
  json j;
  j["count"] = r.count.get_str();
  j["nonspecial_primes"] = r.nonspecial_primes;
  j["reason"] = disqualification_tag(r.reason);
  j["conditional_on_ufd"] = r.conditional_on_ufd;
  return j;
}

const char* kUfdCaveat = "conditional on unique factorization: for |z| > 5 a regular prime factor does not rule out solutions";

void cmd_count(const ZContext& ctx, const Opts& op, Output& o) {
  const Int M = parse_int(op.m);
  o.inputs["m"] = M.get_str();
  o.inputs["factor_bound"] = op.factor_bound;
  const CountResult r = count_positive_primitive(ctx, M, op.factor_bound);
  o.result = count_json(r);
  if (r.conditional_on_ufd) o.warnings.push_back(kUfdCaveat);
  if (r.reason == Disqualification::None && r.count <= 4096)
    o.result["solutions"] = elems(enumerate_positive_primitive(ctx, M, op.factor_bound));
  if (!op.verify) return;
  if (M > 10000000) {
    o.warnings.push_back("verification skipped: M exceeds 10^7");
    return;
  }
  const Int oc = oracle::brute_count_positive_primitive(ctx, M);
  if (r.conditional_on_ufd) {
    if (oc != r.count) o.warnings.push_back("oracle finds " + oc.get_str() + " positive primitive solutions");
    return;
  }
  require(oc == r.count, "oracle count " + oc.get_str() + " differs from " + r.count.get_str());
}

void cmd_factor(const ZContext& ctx, const Opts& op, Output& o) {
  const Int M = parse_int(op.m);
  o.inputs["m"] = M.get_str();
  o.inputs["factor_bound"] = op.factor_bound;
  const FactorizationReport f = zring_factorize(ctx, M, op.factor_bound);
  json rat = json::array();
  for (const auto& [q, e] : f.rational_factorization) rat.push_back({{"prime", q.get_str()}, {"exponent", e}});
  json zf = json::array();
  for (const auto& x : f.zring_factors)
    zf.push_back({{"elem", elem(x.elem)}, {"exponent", x.exponent}, {"prime", x.prime.get_str()},
                  {"sign", x.sign}, {"special", x.special}});
  json sp = json::array();
  for (const auto& [q, e] : f.special_part) sp.push_back({{"prime", q.get_str()}, {"exponent", e}});
  o.result["rational_factorization"] = rat;
  o.result["zring_factors"] = zf;
  o.result["special_part"] = sp;
  o.result["qualifies"] = f.qualifies;
  o.result["reason"] = disqualification_tag(f.reason);
  o.result["disqualification_reason"] = f.disqualification_reason ? json(*f.disqualification_reason) : json(nullptr);
  o.result["conditional_on_ufd"] = f.conditional_on_ufd;
  if (f.conditional_on_ufd) o.warnings.push_back(kUfdCaveat);
  if (!op.verify) return;
  Int prod = 1;
  for (const auto& [q, e] : f.rational_factorization) {
    Int qe;
    mpz_pow_ui(qe.get_mpz_t(), q.get_mpz_t(), e);
    prod *= qe;
  }
  require(prod == abs(M), "rational factors multiply to " + prod.get_str());
  for (const auto& x : f.zring_factors)
    require(norm(ctx, x.elem) == x.sign * x.prime, "norm of " + to_string(x.elem));
}

void cmd_non_ufd(const ZContext& ctx, const Opts& op, Output& o) {
  const auto w = non_ufd_witness(ctx);
  o.result["witness"] = nullptr;
  if (!w) return;
  json j;
  j["p"] = w->p.get_str();
  j["irreducible_nonprime"] = elem(w->irreducible_nonprime);
  j["base"] = elem(w->base);
  j["square"] = elem(w->square);
  j["cofactor"] = elem(w->cofactor);
  j["explanation"] = {{"side", w->explanation.side},
                      {"composite_value", w->explanation.composite_value.get_str()},
                      {"gap_bound", w->explanation.gap_bound.get_str()},
                      {"p_regular", w->explanation.p_regular},
                      {"base_not_divisible", w->explanation.base_not_divisible}};
  o.result["witness"] = j;
  if (op.verify) require(verify_witness(*w), "witness does not check");
}

// Associates of the canonical solutions with sup-norm at most r.
std::vector<ZElem> lattice_in_view(const ZContext& ctx, const Int& M, const SolutionReport& rep, const Int& r) {
  std::set<ZElem> pts;
  if (rep.parametric_line) {
    const Int& c = rep.parametric_line->root;
    for (Int x = -r; x <= r; ++x)
      for (const Int& t : {c, Int(-c)}) {
        const Int y = ctx.z > 0 ? Int(t - x) : Int(x - t);
        if (abs(y) <= r && norm(ctx, ZElem(x, y)) == M) pts.insert(ZElem(x, y));
      }
    return {pts.begin(), pts.end()};
  }
  for (const auto& cs : rep.canonical) {
    if (cyclic_order(ctx)) {
      for (const auto& u : enumerate_units(ctx, 0, 0)) pts.insert(mul(ctx, u, cs.elem));
      continue;
    }
    for (const ZElem& start : {cs.elem, neg(cs.elem)})
      for (long dir : {1L, -1L}) {
        ZElem b = start;
        Int prev = sup(b);
        for (int step = 0; step < 4096; ++step) {
          const Int s = sup(b);
          if (s <= r) pts.insert(b);
          else if (s > prev) break;
          prev = s;
          b = shift(ctx, b, dir);
        }
      }
  }
  return {pts.begin(), pts.end()};
}

void cmd_plot(const ZContext& ctx, const Opts& op, Output& o) {
  const Int M = parse_int(op.m);
  o.inputs["m"] = M.get_str();
  if (op.out.empty()) throw CLI::ValidationError("plot needs --out");
  if (M == 0) throw DomainError("plot needs M != 0");
  if (abs(M) > Int("1000000000000")) throw DomainError("plot needs |M| <= 10^12");
  Output scratch;
  const SolutionReport rep = run_solve(ctx, M, op.verify, scratch);
  o.warnings = scratch.warnings;
  Int r = std::max(Int(5), Int(3 * isqrt(abs(M)) + 3));
  for (const auto& cs : rep.canonical) r = std::max(r, sup(cs.elem));
  const auto lattice = lattice_in_view(ctx, M, rep, r);
  std::string svg;
  const cli::PlotSummary s = cli::render_svg(ctx, M, lattice, svg);
  std::ofstream f(op.out, std::ios::binary);
  if (!f || !(f << svg)) throw DomainError("cannot write " + op.out);
  o.result["out"] = op.out;
  o.result["branches"] = s.branches;
  o.result["points_per_branch"] = s.points_per_branch;
  o.result["lattice_points"] = elems(lattice);
  o.result["solvable"] = rep.solvable;
}

void emit(const Opts& op, const std::string& command, const ZContext& ctx, const Output& o) {
  std::string body;
  if (o.raw) {
    body = *o.raw;
  } else if (op.as_json) {
    json doc;
    doc["command"] = command;
    doc["z"] = ctx.z.get_str();
    doc["inputs"] = o.inputs;
    doc["result"] = o.result;
    doc["warnings"] = o.warnings;
    body = doc.dump(2) + "\n";
  } else {
    for (const auto& [k, v] : o.result.items()) body += k + ": " + text_value(v) + "\n";
  }
  if (!o.raw && !op.as_json)
    for (const auto& w : o.warnings) std::cerr << "warning: " << w << "\n";
  const bool to_file = !op.out.empty() && command != "plot";
  if (to_file) {
    std::ofstream f(op.out, std::ios::binary);
    if (!f || !(f << body)) throw DomainError("cannot write " + op.out);
  } else {
    std::cout << body;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact solver for x^2 + zxy + y^2 = M over the ring Z[i_z]"};
  app.require_subcommand(1);
  Opts op;
  const auto integer = CLI::Validator(
      [](std::string& s) {
        static const std::regex re("^[+-]?[0-9]+$");
        return std::regex_match(s, re) ? std::string() : "not an integer: " + s;
      },
      "INT");

  struct Sub {
    const char* name;
    const char* help;
    std::function<void(const ZContext&, const Opts&, Output&)> run;
    bool m, p, quadrant, range, csv, out_required;
  };
  const std::vector<Sub> subs = {
      {"solve", "canonical solutions of x^2 + zxy + y^2 = M",
       [](const ZContext& c, const Opts& o, Output& out) {
         const Int M = parse_int(o.m);
         out.inputs["m"] = M.get_str();
         run_solve(c, M, o.verify, out);
       },
       true, false, false, false, false, false},
      {"quadrant", "solutions in one closed quadrant, smallest first", cmd_quadrant, true, false, true, false, false,
       false},
      {"classify", "classify a prime p relative to the z-ring", cmd_classify, false, true, false, false, false, false},
      {"classify-table", "classify every signed prime in a range", cmd_classify_table, false, false, false, true, true,
       false},
      {"units", "unit group descriptor and units (-1)^k g^n for n in the range", cmd_units, false, false, false, true,
       false, false},
      {"count", "number of positive primitive solutions", cmd_count, true, false, false, false, false, false},
      {"factor", "factorization of M in the z-ring", cmd_factor, true, false, false, false, false, false},
      {"non-ufd", "explicit failure of unique factorization", cmd_non_ufd, false, false, false, false, false, false},
      {"plot", "SVG of the level set with lattice solutions", cmd_plot, true, false, false, false, false, true},
  };

  std::vector<std::pair<CLI::App*, const Sub*>> apps;
  for (const auto& s : subs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    sub->add_option("--z", op.z, "ring parameter z")->required()->check(integer);
    if (s.m) sub->add_option("--m", op.m, "level M")->required()->check(integer);
    if (s.p) sub->add_option("--p", op.p, "prime p (either sign)")->required()->check(integer);
    if (s.quadrant) {
      sub->add_option("--quadrant", op.quadrant, "quadrant 1-4")->required();
      sub->add_option("--limit", op.limit, "maximum number of elements")->capture_default_str();
    }
    if (s.range) {
      sub->add_option("--range-lo", op.range_lo, "lower end of the range")->check(integer);
      sub->add_option("--range-hi", op.range_hi, "upper end of the range")->check(integer);
    }
    if (s.m) sub->add_option("--factor-bound", op.factor_bound, "trial-division cap")->capture_default_str();
    auto* j = sub->add_flag("--json", op.as_json, "JSON output");
    if (s.csv) sub->add_flag("--csv", op.as_csv, "CSV output")->excludes(j);
    auto* out = sub->add_option("--out", op.out, s.out_required ? "SVG output file" : "write output to a file");
    if (s.out_required) out->required();
    sub->add_flag("--verify", op.verify, "re-check the result against the brute-force oracle");
    apps.emplace_back(sub, &s);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  for (const auto& [sub, s] : apps) {
    if (!sub->parsed()) continue;
    ZContext ctx;
    Output o;
    try {
      ctx = ZContext::make(parse_int(op.z));
      s->run(ctx, op, o);
      emit(op, s->name, ctx, o);
      return 0;
    } catch (const CLI::ValidationError& e) {
      std::cerr << s->name << ": " << e.what() << "\n";
      return 2;
    } catch (const DomainError& e) {
      json err;
      err["command"] = s->name;
      err["z"] = op.z;
      err["error"] = {{"type", dynamic_cast<const VerifyError*>(&e) ? "verification-failed" : "domain-error"},
                      {"message", e.what()}};
      (op.as_json ? std::cout : std::cerr) << err.dump(2) << "\n";
      return 1;
    }
  }
  return 2;
}
