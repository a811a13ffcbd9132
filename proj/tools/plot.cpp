#include "plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <utility>

namespace zring::cli {

namespace {

constexpr int kSamples = 256;
constexpr double kSize = 600.0;

using Pt = std::pair<double, double>;

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

// Branches in (u, v) eigen-coordinates, u along (1,1)/sqrt2 and v along (1,-1)/sqrt2,
// where the form reads l1 u^2 + l2 v^2.
std::vector<std::vector<Pt>> sample_branches(double z, double m, double radius) {
  const double l1 = 1 + z / 2, l2 = 1 - z / 2;
  const double r2 = std::sqrt(0.5);
  auto to_xy = [&](double u, double v) { return Pt{r2 * (u + v), r2 * (u - v)}; };
  std::vector<std::vector<Pt>> out;
  const double span = 1.5 * radius;

  if (l1 > 0 && l2 > 0) {
    if (m <= 0) return out;
    const double a = std::sqrt(m / l1), b = std::sqrt(m / l2);
    std::vector<Pt> br;
    for (int i = 0; i < kSamples; ++i) {
      const double t = 2 * M_PI * i / (kSamples - 1);
      br.push_back(to_xy(a * std::cos(t), b * std::sin(t)));
    }
    out.push_back(std::move(br));
    return out;
  }

  // One of l1, l2 vanishes when |z| = 2: a pair of parallel lines.
  if (l1 == 0 || l2 == 0) {
    const double l = l1 == 0 ? l2 : l1;
    if (m / l <= 0) return out;
    const double c = std::sqrt(m / l);
    for (double sgn : {1.0, -1.0}) {
      std::vector<Pt> br;
      for (int i = 0; i < kSamples; ++i) {
        const double w = -span + 2 * span * i / (kSamples - 1);
        br.push_back(l1 == 0 ? to_xy(w, sgn * c) : to_xy(sgn * c, w));
      }
      out.push_back(std::move(br));
    }
    return out;
  }

  // Hyperbola: la * s^2 - |lb| * w^2 = m with la of the sign of m.
  const bool u_major = (l1 > 0) == (m > 0);
  const double la = std::abs(u_major ? l1 : l2), lb = std::abs(u_major ? l2 : l1);
  const double a = std::sqrt(std::abs(m) / la), b = std::sqrt(std::abs(m) / lb);
  const double tmax = std::acosh(std::max(1.0, span / std::min(a, b)));
  for (double sgn : {1.0, -1.0}) {
    std::vector<Pt> br;
    for (int i = 0; i < kSamples; ++i) {
      const double t = -tmax + 2 * tmax * i / (kSamples - 1);
      const double s = sgn * a * std::cosh(t), w = b * std::sinh(t);
      br.push_back(u_major ? to_xy(s, w) : to_xy(w, s));
    }
    out.push_back(std::move(br));
  }
  return out;
}

}  // namespace

PlotSummary render_svg(const ZContext& ctx, const Int& M, const std::vector<ZElem>& lattice,
                       std::string& svg) {
  const double z = ctx.z.get_d(), m = M.get_d();
  double radius = std::max(5.0, 3 * std::sqrt(std::abs(m)));
  for (const ZElem& p : lattice)
    radius = std::max(radius, 1.2 * std::max(std::abs(p.re.get_d()), std::abs(p.im.get_d())));

  const double scale = kSize / (2 * radius);
  auto px = [&](double x) { return fmt(kSize / 2 + x * scale); };
  auto py = [&](double y) { return fmt(kSize / 2 - y * scale); };

  svg.clear();
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"600\" height=\"600\" viewBox=\"0 0 600 600\">\n";
  svg += "<defs><clipPath id=\"view\"><rect x=\"0\" y=\"0\" width=\"600\" height=\"600\"/></clipPath></defs>\n";
  svg += "<rect x=\"0\" y=\"0\" width=\"600\" height=\"600\" fill=\"white\"/>\n";
  svg += "<g clip-path=\"url(#view)\">\n";
  svg += "<line x1=\"0\" y1=\"300\" x2=\"600\" y2=\"300\" stroke=\"#bbb\" stroke-width=\"1\"/>\n";
  svg += "<line x1=\"300\" y1=\"0\" x2=\"300\" y2=\"600\" stroke=\"#bbb\" stroke-width=\"1\"/>\n";

  // zx + 2y = 0, direction (2, -z).
  const double dn = std::hypot(2.0, z), ext = 2 * radius;
  const double dx = 2 / dn * ext, dy = -z / dn * ext;
  svg += "<line x1=\"" + px(-dx) + "\" y1=\"" + py(-dy) + "\" x2=\"" + px(dx) + "\" y2=\"" + py(dy) +
         "\" stroke=\"#555\" stroke-width=\"1\" stroke-dasharray=\"6 4\"/>\n";

  const auto branches = sample_branches(z, m, radius);
  for (const auto& br : branches) {
    svg += "<polyline fill=\"none\" stroke=\"#1f4e9c\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < br.size(); ++i) {
      if (i) svg += ' ';
      svg += px(br[i].first) + "," + py(br[i].second);
    }
    svg += "\"/>\n";
  }
  for (const ZElem& p : lattice)
    svg += "<circle cx=\"" + px(p.re.get_d()) + "\" cy=\"" + py(p.im.get_d()) + "\" r=\"3\" fill=\"#c0392b\"/>\n";
  svg += "</g>\n</svg>\n";

  PlotSummary s;
  s.branches = static_cast<int>(branches.size());
  s.points_per_branch = branches.empty() ? 0 : kSamples;
  s.lattice_points = lattice.size();
  s.view_radius = radius;
  return s;
}

}  // namespace zring::cli
