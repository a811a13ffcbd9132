#pragma once

#include "zring/core.hpp"

#include <string>
#include <vector>

namespace zring::cli {

struct PlotSummary {
  int branches = 0;
  int points_per_branch = 0;
  std::size_t lattice_points = 0;
  double view_radius = 0;
};

// SVG of the level set x^2 + zxy + y^2 = M with the given lattice points as dots.
// Floating point is confined to this file.
PlotSummary render_svg(const ZContext& ctx, const Int& M, const std::vector<ZElem>& lattice,
                       std::string& svg);

}  // namespace zring::cli
