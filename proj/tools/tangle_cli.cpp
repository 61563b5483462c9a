#include <chrono>
#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tangle/approx.hpp"
#include "tangle/crossings.hpp"
#include "tangle/error.hpp"
#include "tangle/exact.hpp"
#include "tangle/fpt.hpp"
#include "tangle/generators.hpp"
#include "tangle/io.hpp"
#include "tangle/maxcut.hpp"
#include "tangle/render.hpp"

namespace {

using namespace tangle;

struct CommonOut {
  std::string out_path;
  std::string svg_path;
  bool as_json = false;
  bool timing = false;
};

void add_output_flags(CLI::App* cmd, CommonOut& out, bool with_svg = true) {
  cmd->add_option("-o,--output", out.out_path, "write the result here");
  if (with_svg)
    cmd->add_option("--svg", out.svg_path, "also write an SVG drawing here");
  cmd->add_flag("--json", out.as_json, "emit JSON instead of plain text");
  cmd->add_flag("--timing", out.timing, "include elapsed milliseconds");
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty())
    std::cout << text;
  else
    write_file(path, text);
}

class Stopwatch {
 public:
  std::uint64_t elapsed_ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ =
      std::chrono::steady_clock::now();
};

void finish(const TanglegramInstance& inst, const Layout& layout,
            ResultRecord record, const CommonOut& out) {
  emit(out.as_json ? result_to_json(record) : result_to_text(record),
       out.out_path);
  if (!out.svg_path.empty()) write_file(out.svg_path, render_svg(inst, layout));
}

Layout load_layout_or_identity(const TanglegramInstance& inst,
                               const std::string& path) {
  if (path.empty()) return identity_layout(inst);
  Layout layout = layout_from_json(read_file(path));
  validate_layout(inst, layout);
  return layout;
}

std::vector<std::uint8_t> parse_partition(const std::string& text, int n) {
  std::vector<std::uint8_t> bits;
  for (const char c : text) {
    if (c == ',' || c == ' ') continue;
    if (c != '0' && c != '1')
      throw Error("partition must be a string of 0s and 1s");
    bits.push_back(c == '1');
  }
  if (static_cast<int>(bits.size()) != n)
    throw Error("partition names " + std::to_string(bits.size()) +
                " vertices, graph has " + std::to_string(n));
  return bits;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tangle: compute, count and draw tanglegram layouts"};
  app.require_subcommand(1);

  std::string inst_path, layout_path, graph_path, partition_text;
  std::string approx_method = "auto", dual_method = "local",
              shape_text = "random";
  std::uint64_t k = 0, seed = 0, wa = 1, wb = 1;
  int cap = kDefaultExactCap, cut_cap = kDefaultCutCap, restarts = 8, m = 1,
      n = 8;
  bool expand = false;
  CommonOut out;

  auto* count_cmd = app.add_subcommand("count", "count crossings of a layout");
  count_cmd->add_option("-i,--instance", inst_path)->required();
  count_cmd->add_option("--layout", layout_path,
                        "layout file (default: all-zero bits)");
  add_output_flags(count_cmd, out);

  auto* approx_cmd =
      app.add_subcommand("approx", "top-down split 2-approximation");
  approx_cmd->add_option("-i,--instance", inst_path)->required();
  approx_cmd->add_option("--method", approx_method)
      ->check(CLI::IsMember({"auto", "recsplit", "general"}));
  add_output_flags(approx_cmd, out);

  auto* fpt_cmd = app.add_subcommand(
      "fpt", "decide a crossing budget k (complete instances)");
  fpt_cmd->add_option("-i,--instance", inst_path)->required();
  fpt_cmd->add_option("-k", k, "allowed crossings")->required();
  add_output_flags(fpt_cmd, out);

  auto* exact_cmd =
      app.add_subcommand("exact", "exact optimum by enumeration");
  exact_cmd->add_option("-i,--instance", inst_path)->required();
  exact_cmd->add_option("--cap", cap, "inner-node budget");
  add_output_flags(exact_cmd, out);

  auto* opt_cmd = app.add_subcommand(
      "opt", "optimum via the budget search (complete instances)");
  opt_cmd->add_option("-i,--instance", inst_path)->required();
  add_output_flags(opt_cmd, out);

  auto* dual_cmd =
      app.add_subcommand("dual", "max-cut form: maximize non-crossing pairs");
  dual_cmd->add_option("-i,--instance", inst_path)->required();
  dual_cmd->add_option("--layout", layout_path,
                       "reference drawing (default: all-zero bits)");
  dual_cmd->add_option("--method", dual_method)
      ->check(CLI::IsMember({"exact", "local"}));
  dual_cmd->add_option("--restarts", restarts);
  dual_cmd->add_option("--seed", seed);
  dual_cmd->add_option("--cap", cut_cap, "constrained-pair budget");
  add_output_flags(dual_cmd, out);

  auto* gen_cmd = app.add_subcommand("gen", "instance generators");
  gen_cmd->require_subcommand(1);
  auto* tight_cmd =
      gen_cmd->add_subcommand("tight", "worst case for the split heuristic");
  tight_cmd->add_option("--m", m, "block size (power of two)")->required();
  tight_cmd->add_option("-o,--output", out.out_path);
  auto* minuncut_cmd = gen_cmd->add_subcommand(
      "minuncut", "graph-partition hardness instance");
  minuncut_cmd->add_option("--graph", graph_path, "edge-list file")
      ->required();
  minuncut_cmd->add_option("--wa", wa, "central-bundle weight")->required();
  minuncut_cmd->add_option("--wb", wb, "twin-bundle weight")->required();
  minuncut_cmd->add_flag("--expand", expand,
                         "emit the unit-edge expansion instead");
  minuncut_cmd->add_option(
      "--partition", partition_text,
      "0/1 per vertex for the reference layout (default: all 1)");
  minuncut_cmd->add_option("-o,--output", out.out_path);
  auto* random_cmd = gen_cmd->add_subcommand("random", "seeded random pair");
  random_cmd->add_option("--n", n, "leaf count")->required();
  random_cmd->add_option("--seed", seed);
  random_cmd->add_option("--shape", shape_text)
      ->check(CLI::IsMember({"complete", "random"}));
  random_cmd->add_option("-o,--output", out.out_path);

  auto* render_cmd = app.add_subcommand("render", "draw an instance as SVG");
  render_cmd->add_option("-i,--instance", inst_path)->required();
  render_cmd->add_option("--layout", layout_path);
  render_cmd->add_option("--svg", out.svg_path, "output file");
  render_cmd->add_option("-o,--output", out.out_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (count_cmd->parsed()) {
      const TanglegramInstance inst = instance_from_json(read_file(inst_path));
      const Layout layout = load_layout_or_identity(inst, layout_path);
      const Stopwatch watch;
      ResultRecord record = make_result(inst, layout, "count");
      if (out.timing) record.elapsed_ms = watch.elapsed_ms();
      finish(inst, layout, std::move(record), out);
    } else if (approx_cmd->parsed()) {
      const TanglegramInstance inst = instance_from_json(read_file(inst_path));
      const Stopwatch watch;
      const bool complete =
          inst.left().is_complete() && inst.right().is_complete();
      const bool use_split = approx_method == "recsplit" ||
                             (approx_method == "auto" && complete);
      const ApproxResult res =
          use_split ? rec_split(inst) : approx_general(inst);
      ResultRecord record = make_result(
          inst, res.layout, use_split ? "rec_split" : "approx_general");
      record.counted = res.counted;
      if (out.timing) record.elapsed_ms = watch.elapsed_ms();
      finish(inst, res.layout, std::move(record), out);
    } else if (fpt_cmd->parsed()) {
      const TanglegramInstance inst = instance_from_json(read_file(inst_path));
      const Stopwatch watch;
      const auto layout = solve_fpt(inst, k);
      if (!layout) {
        std::cerr << "no layout with at most " << k << " crossings\n";
        return 1;
      }
      ResultRecord record = make_result(inst, *layout, "fpt");
      if (out.timing) record.elapsed_ms = watch.elapsed_ms();
      finish(inst, *layout, std::move(record), out);
    } else if (exact_cmd->parsed()) {
      const TanglegramInstance inst = instance_from_json(read_file(inst_path));
      const Stopwatch watch;
      const ExactResult res = solve_exact(inst, cap);
      ResultRecord record = make_result(inst, res.layout, "exact");
      if (record.crossings != res.crossings)
        throw Error("internal: exact optimum failed its recount");
      if (out.timing) record.elapsed_ms = watch.elapsed_ms();
      finish(inst, res.layout, std::move(record), out);
    } else if (opt_cmd->parsed()) {
      const TanglegramInstance inst = instance_from_json(read_file(inst_path));
      const Stopwatch watch;
      const auto [layout, value] = min_crossings_fpt(inst);
      ResultRecord record = make_result(inst, layout, "opt");
      if (record.crossings != value)
        throw Error("internal: optimum failed its recount");
      if (out.timing) record.elapsed_ms = watch.elapsed_ms();
      finish(inst, layout, std::move(record), out);
    } else if (dual_cmd->parsed()) {
      const TanglegramInstance inst = instance_from_json(read_file(inst_path));
      const Layout initial = load_layout_or_identity(inst, layout_path);
      const Stopwatch watch;
      const CutGraph graph = build_cut_graph(inst, initial);
      const Cut cut = dual_method == "exact"
                          ? exact_cut(graph, cut_cap)
                          : local_search_cut_restarts(graph, restarts, seed);
      const Layout layout = decode_cut(graph, cut, initial);
      ResultRecord record =
          make_result(inst, layout, "dual_" + dual_method);
      record.cut_weight = cut_weight(graph, cut);
      record.pair_total = total_weight(graph);
      if (*record.cut_weight + record.crossings != *record.pair_total)
        throw Error("internal: cut weight does not complement the crossings");
      if (out.timing) record.elapsed_ms = watch.elapsed_ms();
      finish(inst, layout, std::move(record), out);
    } else if (tight_cmd->parsed()) {
      emit(instance_to_json(gen_tight(m)), out.out_path);
    } else if (minuncut_cmd->parsed()) {
      const MinUncutGraph graph = parse_edge_list(read_file(graph_path));
      const MetaInstance meta = gen_minuncut(graph, wa, wb);
      const std::vector<std::uint8_t> part =
          partition_text.empty()
              ? std::vector<std::uint8_t>(graph.vertex_count, 1)
              : parse_partition(partition_text, graph.vertex_count);
      const Layout canonical = minuncut_partition_layout(graph, part);
      if (expand) {
        const Expansion expansion = expand_meta(meta);
        emit(instance_to_json(expansion.instance), out.out_path);
      } else {
        emit(meta_to_json(meta, &canonical), out.out_path);
      }
    } else if (random_cmd->parsed()) {
      const RandomShape shape = shape_text == "complete"
                                    ? RandomShape::Complete
                                    : RandomShape::RandomBinary;
      emit(instance_to_json(gen_random(n, shape, seed)), out.out_path);
    } else if (render_cmd->parsed()) {
      const TanglegramInstance inst = instance_from_json(read_file(inst_path));
      const Layout layout = load_layout_or_identity(inst, layout_path);
      const std::string svg = render_svg(inst, layout);
      emit(svg, out.svg_path.empty() ? out.out_path : out.svg_path);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
