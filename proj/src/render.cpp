#include "tangle/render.hpp"

#include <cstdio>
#include <vector>

namespace tangle {

namespace {

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f", x);
  return buf;
}

std::string escape_xml(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (const char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
  return out;
}

struct Placement {
  std::vector<double> x, y;
};

/// Leaves sit on the column at x = column; inner nodes approach it with
/// depth, so every parent is strictly on `dir`'s side of its children.
Placement place(const Tree& tree, const std::vector<std::uint8_t>& swaps,
                double column, double dir, const RenderOptions& opt) {
  Placement p;
  p.x.assign(tree.node_count(), column);
  p.y.assign(tree.node_count(), 0);
  const std::vector<int> order = leaf_order_nodes(tree, swaps);
  for (int i = 0; i < static_cast<int>(order.size()); ++i)
    p.y[order[i]] = opt.margin + i * opt.leaf_spacing;
  const int h = tree.height();
  const double step = h > 0 ? opt.tree_span / h : 0;
  // Children precede parents in reverse preorder.
  for (int v = tree.node_count() - 1; v >= 0; --v) {
    if (tree.is_leaf(v)) continue;
    p.x[v] = column - dir * (opt.tree_span - tree.depth(v) * step);
    double sum = 0;
    for (const int c : tree.node(v).children) sum += p.y[c];
    p.y[v] = sum / static_cast<double>(tree.node(v).children.size());
  }
  return p;
}

void emit_tree_edges(std::string& svg, const Tree& tree, const Placement& p) {
  for (int v = 0; v < tree.node_count(); ++v)
    for (const int c : tree.node(v).children) {
      svg += "    <line x1=\"" + fmt(p.x[v]) + "\" y1=\"" + fmt(p.y[v]) +
             "\" x2=\"" + fmt(p.x[c]) + "\" y2=\"" + fmt(p.y[c]) + "\"/>\n";
    }
}

}  // namespace

std::string render_svg(const TanglegramInstance& inst, const Layout& layout,
                       const RenderOptions& opt) {
  validate_layout(inst, layout);
  const Tree& left = inst.left();
  const Tree& right = inst.right();
  const int n = inst.leaf_count();
  const double col_left = opt.margin + opt.tree_span;
  const double col_right = col_left + opt.middle_gap;
  const double width = col_right + opt.tree_span + opt.margin;
  const double height = 2 * opt.margin + (n - 1) * opt.leaf_spacing;

  const Placement pl = place(left, layout.left_swaps, col_left, 1, opt);
  const Placement pr = place(right, layout.right_swaps, col_right, -1, opt);

  std::string svg;
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
         fmt(width) + "\" height=\"" + fmt(height) + "\" viewBox=\"0 0 " +
         fmt(width) + " " + fmt(height) + "\">\n";
  svg += "  <g id=\"left-tree\" stroke=\"#444\" fill=\"none\">\n";
  emit_tree_edges(svg, left, pl);
  svg += "  </g>\n";
  svg += "  <g id=\"right-tree\" stroke=\"#444\" fill=\"none\">\n";
  emit_tree_edges(svg, right, pr);
  svg += "  </g>\n";
  svg += "  <g id=\"intertree\" stroke=\"#c33\" fill=\"none\">\n";
  for (const int leaf : left.leaves()) {
    const int partner = inst.partner_of_left(leaf);
    svg += "    <line x1=\"" + fmt(pl.x[leaf]) + "\" y1=\"" +
           fmt(pl.y[leaf]) + "\" x2=\"" + fmt(pr.x[partner]) + "\" y2=\"" +
           fmt(pr.y[partner]) + "\"/>\n";
  }
  svg += "  </g>\n";
  if (opt.labels) {
    svg += "  <g id=\"labels\" font-family=\"monospace\" font-size=\"10\" "
           "fill=\"#222\">\n";
    for (const int leaf : left.leaves())
      svg += "    <text x=\"" + fmt(pl.x[leaf] + 4) + "\" y=\"" +
             fmt(pl.y[leaf] - 3) + "\">" + escape_xml(left.node(leaf).label) +
             "</text>\n";
    for (const int leaf : right.leaves())
      svg += "    <text x=\"" + fmt(pr.x[leaf] - 4) + "\" y=\"" +
             fmt(pr.y[leaf] - 3) + "\" text-anchor=\"end\">" +
             escape_xml(right.node(leaf).label) + "</text>\n";
    svg += "  </g>\n";
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace tangle
