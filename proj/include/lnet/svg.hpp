#pragma once

// SVG 1.1 drawings of planar patterns.  Layers are <g> groups with ids "quads",
// "circles", "lines", "centers", "points" (companion layers get a "companion-"
// prefix); circle elements carry class "circle", "center" or "point".

#include <string>

#include "lnet/packing.hpp"
#include "lnet/patterns.hpp"

namespace lnet {

struct SvgOptions {
  double width = 800.0;  // pixels; the height follows the aspect ratio
  double margin = 20.0;
  bool centers = true;
  bool points = true;
  bool lines = true;
  int precision = 4;  // decimals in coordinates
};

// All throw EmptyNet when nothing finite is left to draw.
std::string render_svg(const CirclePattern& p, const SvgOptions& options = {});
// Tangent lines are drawn as segments around their face contact region.
std::string render_svg(const CyclePattern& p, const SvgOptions& options = {});
// Black quads, white incircles and centers.  A companion net (for instance the
// black sweep of the same null congruence) is drawn in its own layer.
std::string render_svg(const IncircularNet& net, const SvgOptions& options = {},
                       const IncircularNet* companion = nullptr);

}  // namespace lnet
