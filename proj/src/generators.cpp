#include "tangle/generators.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <utility>

#include "tangle/crossings.hpp"
#include "tangle/error.hpp"
#include "tangle/rng.hpp"

namespace tangle {

namespace {

bool power_of_two(int x) { return x > 0 && (x & (x - 1)) == 0; }

/// Builds a tree over labels[lo, hi); split(count) gives the size of the
/// first (upper) part of every internal split.
template <typename Split>
int build_subtree(std::vector<TreeNode>& nodes,
                  const std::vector<std::string>& labels, int lo, int hi,
                  Split&& split) {
  if (hi - lo == 1) {
    nodes.push_back(TreeNode{{}, -1, labels[lo]});
    return static_cast<int>(nodes.size()) - 1;
  }
  const int mid = lo + split(hi - lo);
  const int a = build_subtree(nodes, labels, lo, mid, split);
  const int b = build_subtree(nodes, labels, mid, hi, split);
  nodes.push_back(TreeNode{{a, b}, -1, ""});
  return static_cast<int>(nodes.size()) - 1;
}

template <typename Split>
Tree tree_over(const std::vector<std::string>& labels, Split&& split) {
  std::vector<TreeNode> nodes;
  nodes.reserve(2 * labels.size());
  const int root = build_subtree(nodes, labels, 0,
                                 static_cast<int>(labels.size()), split);
  return Tree(std::move(nodes), root);
}

int balanced_split(int count) { return count / 2; }

std::vector<int> leaf_positions(const Tree& tree,
                                const std::vector<std::uint8_t>& swaps) {
  const std::vector<int> order = leaf_order_nodes(tree, swaps);
  std::vector<int> pos(tree.node_count(), -1);
  for (int i = 0; i < static_cast<int>(order.size()); ++i) pos[order[i]] = i;
  return pos;
}

void check_simple(const MinUncutGraph& graph) {
  if (graph.vertex_count < 1) throw Error("graph needs at least one vertex");
  std::set<std::pair<int, int>> seen;
  for (const auto& [a, b] : graph.edges) {
    if (a < 0 || b < 0 || a >= graph.vertex_count || b >= graph.vertex_count)
      throw Error("edge endpoint out of range");
    if (a == b) throw Error("self-loops are not allowed");
    if (!seen.insert(std::minmax(a, b)).second)
      throw Error("duplicate edge");
  }
}

std::uint64_t count_meta_impl(const MetaInstance& meta, const Layout& layout,
                              bool parallel) {
  const std::vector<int> pos_left =
      leaf_positions(meta.left, layout.left_swaps);
  const std::vector<int> pos_right =
      leaf_positions(meta.right, layout.right_swaps);
  const int count = static_cast<int>(meta.edges.size());
  std::uint64_t sum = 0;
#pragma omp parallel for schedule(dynamic, 16) reduction(+ : sum) \
    if (parallel)
  for (int i = 0; i < count; ++i) {
    const MetaEdge& e = meta.edges[i];
    std::uint64_t local = 0;
    for (int j = i + 1; j < count; ++j) {
      const MetaEdge& f = meta.edges[j];
      if (e.left_leaf == f.left_leaf || e.right_leaf == f.right_leaf)
        continue;  // shared endpoints never count as crossings
      if (edges_cross(pos_left[e.left_leaf], pos_left[f.left_leaf],
                      pos_right[e.right_leaf], pos_right[f.right_leaf]))
        local += e.weight * f.weight;
    }
    sum += local;
  }
  return sum;
}

}  // namespace

TanglegramInstance gen_tight(int m) {
  if (!power_of_two(m)) throw Error("m must be a positive power of two");
  const int n = 4 * m;
  std::vector<std::string> left_labels;
  left_labels.reserve(n);
  for (int i = 1; i <= n; ++i) left_labels.push_back(std::to_string(i));
  std::vector<std::string> right_labels;
  right_labels.reserve(n);
  for (int i = 1; i <= m; ++i) right_labels.push_back(std::to_string(i));
  for (int i = 3 * m; i >= 2 * m + 1; --i)
    right_labels.push_back(std::to_string(i));
  for (int i = m + 1; i <= 2 * m; ++i)
    right_labels.push_back(std::to_string(i));
  for (int i = 3 * m + 1; i <= 4 * m; ++i)
    right_labels.push_back(std::to_string(i));
  return {tree_over(left_labels, balanced_split),
          tree_over(right_labels, balanced_split)};
}

Layout tight_optimal_layout(int m) {
  if (!power_of_two(m)) throw Error("m must be a positive power of two");
  const int n = 4 * m;
  Layout layout;
  layout.left_swaps.assign(n - 1, 0);
  layout.right_swaps.assign(n - 1, 0);
  // Preorder walk of the balanced shape; flipping every bit inside the
  // subtree over positions [m, 2m) reverses that block's leaf order.
  const auto walk = [&](auto&& self, int lo, int hi, int ord) -> void {
    if (lo == m && hi == 2 * m) {
      for (int o = 0; o < hi - lo - 1; ++o) layout.right_swaps[ord + o] = 1;
      return;
    }
    if (hi - lo == 1) return;
    const int mid = lo + (hi - lo) / 2;
    self(self, lo, mid, ord + 1);
    self(self, mid, hi, ord + (mid - lo));
  };
  walk(walk, 0, n, 0);
  return layout;
}

MinUncutGraph parse_edge_list(std::string_view text) {
  MinUncutGraph graph;
  std::set<std::pair<int, int>> seen;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream fields(line);
    long long a = 0, b = 0;
    if (!(fields >> a)) {
      if (line.find_first_not_of(" \t\r") != std::string::npos)
        throw Error("line " + std::to_string(lineno) + ": expected integers");
      continue;  // blank line
    }
    std::string rest;
    if (!(fields >> b)) {
      // single integer: vertex-count declaration (covers isolated vertices)
      if (a < 1)
        throw Error("line " + std::to_string(lineno) +
                    ": vertex count must be positive");
      graph.vertex_count =
          std::max<long long>(graph.vertex_count, a);
      continue;
    }
    if (fields >> rest)
      throw Error("line " + std::to_string(lineno) + ": trailing content");
    if (a < 1 || b < 1)
      throw Error("line " + std::to_string(lineno) +
                  ": vertices are 1-indexed");
    if (a == b)
      throw Error("line " + std::to_string(lineno) + ": self-loop");
    if (!seen.insert(std::minmax(a, b)).second)
      throw Error("line " + std::to_string(lineno) + ": duplicate edge");
    graph.edges.emplace_back(static_cast<int>(a - 1),
                             static_cast<int>(b - 1));
    graph.vertex_count =
        std::max<long long>(graph.vertex_count, std::max(a, b));
  }
  return graph;
}

MetaInstance gen_minuncut(const MinUncutGraph& graph, std::uint64_t wa,
                          std::uint64_t wb) {
  check_simple(graph);
  if (wa < 1 || wb < 1) throw Error("weights must be positive");
  const int n = graph.vertex_count;

  // Backbone caterpillar, built from the central leaf upwards.
  std::vector<TreeNode> nodes;
  nodes.push_back(TreeNode{{}, -1, "a"});
  int below = 0;
  for (int b = 2 * n - 1; b >= 0; --b) {
    const int i = b / 2 + 1, j = b % 2 + 1;
    nodes.push_back(TreeNode{
        {}, -1, "l" + std::to_string(i) + "." + std::to_string(j)});
    const int leaf = static_cast<int>(nodes.size()) - 1;
    nodes.push_back(TreeNode{{leaf, below}, -1, ""});
    below = static_cast<int>(nodes.size()) - 1;
  }
  Tree tree(std::move(nodes), below);

  std::map<std::string, int> by_label;
  for (const int leaf : tree.leaves()) by_label[tree.node(leaf).label] = leaf;
  const auto leaf_of = [&](int i, int j) {
    return by_label.at("l" + std::to_string(i + 1) + "." +
                       std::to_string(j));
  };

  MetaInstance meta{tree, tree, {}};
  meta.edges.push_back({by_label.at("a"), by_label.at("a"), wa});
  for (int i = 0; i < n; ++i) {
    meta.edges.push_back({leaf_of(i, 1), leaf_of(i, 2), wb});
    meta.edges.push_back({leaf_of(i, 2), leaf_of(i, 1), wb});
  }
  for (const auto& [u, v] : graph.edges)
    meta.edges.push_back({leaf_of(u, 1), leaf_of(v, 1), 1});
  return meta;
}

Layout minuncut_partition_layout(const MinUncutGraph& graph,
                                 const std::vector<std::uint8_t>& in_first) {
  check_simple(graph);
  const int n = graph.vertex_count;
  if (static_cast<int>(in_first.size()) != n)
    throw Error("partition must assign every vertex");
  Layout layout;
  layout.left_swaps.assign(2 * n, 0);
  layout.right_swaps.assign(2 * n, 0);
  for (int i = 0; i < n; ++i) {
    if (in_first[i] > 1) throw Error("partition entries must be 0 or 1");
    // Backbone inner ordinals run root-down: v_i1 = 2i, v_i2 = 2i + 1.
    // Bit 0 places the attached leaf above the rest of the backbone.
    layout.left_swaps[2 * i] = in_first[i] ? 0 : 1;
    layout.left_swaps[2 * i + 1] = in_first[i] ? 1 : 0;
    layout.right_swaps[2 * i] = in_first[i] ? 1 : 0;
    layout.right_swaps[2 * i + 1] = in_first[i] ? 0 : 1;
  }
  return layout;
}

Layout meta_identity_layout(const MetaInstance& meta) {
  Layout layout;
  layout.left_swaps.assign(meta.left.inner_count(), 0);
  layout.right_swaps.assign(meta.right.inner_count(), 0);
  return layout;
}

std::uint64_t count_meta_crossings(const MetaInstance& meta,
                                   const Layout& layout) {
  return count_meta_impl(meta, layout, true);
}

std::uint64_t count_meta_crossings_serial(const MetaInstance& meta,
                                          const Layout& layout) {
  return count_meta_impl(meta, layout, false);
}

Expansion expand_meta(const MetaInstance& meta) {
  const int edge_count = static_cast<int>(meta.edges.size());
  std::set<std::pair<int, int>> seen;
  for (const MetaEdge& e : meta.edges) {
    if (e.weight < 1) throw Error("meta-edge weights must be positive");
    if (!seen.insert({e.left_leaf, e.right_leaf}).second)
      throw Error("duplicate meta edge");
  }

  const std::vector<int> pos_left =
      leaf_positions(meta.left, std::vector<std::uint8_t>(
                                    meta.left.inner_count(), 0));
  const std::vector<int> pos_right =
      leaf_positions(meta.right, std::vector<std::uint8_t>(
                                     meta.right.inner_count(), 0));

  // Incident edges per meta leaf, ordered by the opposite endpoint's
  // initial position so bundles leave a leaf in non-crossing order.
  std::vector<std::vector<std::pair<int, int>>> left_inc(
      meta.left.node_count());
  std::vector<std::vector<std::pair<int, int>>> right_inc(
      meta.right.node_count());
  for (int k = 0; k < edge_count; ++k) {
    const MetaEdge& e = meta.edges[k];
    if (e.left_leaf < 0 || e.left_leaf >= meta.left.node_count() ||
        !meta.left.is_leaf(e.left_leaf) || e.right_leaf < 0 ||
        e.right_leaf >= meta.right.node_count() ||
        !meta.right.is_leaf(e.right_leaf))
      throw Error("meta edge endpoint is not a leaf");
    left_inc[e.left_leaf].push_back({pos_right[e.right_leaf], k});
    right_inc[e.right_leaf].push_back({pos_left[e.left_leaf], k});
  }

  const auto expand_tree = [&](const Tree& t, const auto& incidence) {
    std::vector<TreeNode> nodes;
    std::vector<int> built(t.node_count(), -1);
    // Children carry larger preorder ids, so a reverse scan sees them
    // before their parent.
    for (int v = t.node_count() - 1; v >= 0; --v) {
      if (t.is_leaf(v)) {
        auto inc = incidence[v];
        if (inc.empty())
          throw Error("meta leaf \"" + t.node(v).label +
                      "\" has no incident edge");
        std::sort(inc.begin(), inc.end());
        // Comb over the unit leaves, assembled bottom-up.
        int below = -1;
        for (int x = static_cast<int>(inc.size()) - 1; x >= 0; --x) {
          const int k = inc[x].second;
          for (int u = static_cast<int>(meta.edges[k].weight) - 1; u >= 0;
               --u) {
            nodes.push_back(TreeNode{
                {},
                -1,
                "e" + std::to_string(k) + "." + std::to_string(u)});
            const int leaf = static_cast<int>(nodes.size()) - 1;
            if (below == -1) {
              below = leaf;
            } else {
              nodes.push_back(TreeNode{{leaf, below}, -1, ""});
              below = static_cast<int>(nodes.size()) - 1;
            }
          }
        }
        built[v] = below;
      } else {
        std::vector<int> children;
        children.reserve(t.node(v).children.size());
        for (const int c : t.node(v).children) children.push_back(built[c]);
        nodes.push_back(TreeNode{std::move(children), -1, ""});
        built[v] = static_cast<int>(nodes.size()) - 1;
      }
    }
    return Tree(std::move(nodes), built[t.root()]);
  };

  Expansion out{TanglegramInstance(expand_tree(meta.left, left_inc),
                                   expand_tree(meta.right, right_inc)),
                {},
                {}};

  // The expanded tree repeats the meta skeleton with the same child
  // order, so a joint descent recovers where each meta inner node went.
  const auto map_inners = [](const Tree& mt, const Tree& et) {
    std::vector<int> map(mt.inner_count(), -1);
    std::vector<std::pair<int, int>> stack{{mt.root(), et.root()}};
    while (!stack.empty()) {
      const auto [mv, ev] = stack.back();
      stack.pop_back();
      if (mt.is_leaf(mv)) continue;
      map[mt.inner_ordinal(mv)] = et.inner_ordinal(ev);
      const auto& mc = mt.node(mv).children;
      const auto& ec = et.node(ev).children;
      for (std::size_t c = 0; c < mc.size(); ++c)
        stack.push_back({mc[c], ec[c]});
    }
    return map;
  };
  out.left_inner_map = map_inners(meta.left, out.instance.left());
  out.right_inner_map = map_inners(meta.right, out.instance.right());
  return out;
}

Layout expand_layout(const Expansion& expansion, const Layout& meta_layout) {
  if (meta_layout.left_swaps.size() != expansion.left_inner_map.size() ||
      meta_layout.right_swaps.size() != expansion.right_inner_map.size())
    throw Error("meta layout does not match the expansion");
  Layout out = identity_layout(expansion.instance);
  for (std::size_t o = 0; o < expansion.left_inner_map.size(); ++o)
    out.left_swaps[expansion.left_inner_map[o]] = meta_layout.left_swaps[o];
  for (std::size_t o = 0; o < expansion.right_inner_map.size(); ++o)
    out.right_swaps[expansion.right_inner_map[o]] =
        meta_layout.right_swaps[o];
  return out;
}

std::uint64_t expansion_slack_bound(const MetaInstance& meta) {
  std::uint64_t bound = 0;
  const int count = static_cast<int>(meta.edges.size());
  for (int i = 0; i < count; ++i)
    for (int j = i + 1; j < count; ++j) {
      const MetaEdge& e = meta.edges[i];
      const MetaEdge& f = meta.edges[j];
      if (e.left_leaf == f.left_leaf || e.right_leaf == f.right_leaf)
        bound += e.weight * f.weight;
    }
  return bound;
}

TanglegramInstance gen_random(int n, RandomShape shape, std::uint64_t seed) {
  if (n < 2) throw Error("n must be at least 2");
  if (shape == RandomShape::Complete && !power_of_two(n))
    throw Error("complete shape requires n to be a power of two");
  Rng rng(seed);
  const auto random_split = [&rng](int count) {
    return 1 + static_cast<int>(rng.below(count - 1));
  };
  const auto build = [&](const std::vector<std::string>& labels) {
    return shape == RandomShape::Complete ? tree_over(labels, balanced_split)
                                          : tree_over(labels, random_split);
  };

  std::vector<std::string> labels;
  labels.reserve(n);
  for (int i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
  Tree left = build(labels);

  std::vector<std::string> shuffled = labels;
  for (int i = n - 1; i >= 1; --i) {
    const auto j = static_cast<int>(rng.below(i + 1));
    std::swap(shuffled[i], shuffled[j]);
  }
  return {std::move(left), build(shuffled)};
}

}  // namespace tangle
