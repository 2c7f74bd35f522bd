#pragma once

#include "asymlab/polytope.hpp"
#include "asymlab/report.hpp"

#include <string>
#include <vector>

namespace asymlab {

struct PlotLayer {
  Polytope body;
  std::string label;
  std::string color;  // any SVG colour
};

/// Closed paths, one per layer, on a common square frame. Planar bodies only.
std::string polygons_svg(const std::vector<PlotLayer>& layers);

/// K with -K, its symmetric kernel (K + x) ∩ -K at the pseudo-center and its
/// Blaschke body, all in K's coordinates.
std::string body_overlay_svg(const Polytope& k);

/// One bar per check, green when it passed.
std::string report_svg(const Report& r);

}  // namespace asymlab
