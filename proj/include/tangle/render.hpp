#pragma once

#include <string>

#include "tangle/instance.hpp"

namespace tangle {

/// Pixel geometry of the drawing; all values are SVG user units.
struct RenderOptions {
  double leaf_spacing = 22;
  double margin = 24;
  double tree_span = 160;   // horizontal room for each tree
  double middle_gap = 240;  // room between the two leaf columns
  bool labels = true;
};

/// SVG 1.1 document of the drawing the layout selects: leaves on two
/// vertical columns in drawn order, parents strictly outside their
/// children, inter-tree edges as straight segments in a <g id="intertree">
/// group. Byte-deterministic for fixed inputs.
std::string render_svg(const TanglegramInstance& inst, const Layout& layout,
                       const RenderOptions& options = {});

}  // namespace tangle
