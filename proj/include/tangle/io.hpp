#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tangle/generators.hpp"
#include "tangle/instance.hpp"

namespace tangle {

/// Whole-file read/write; both throw Error on I/O failure.
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

/// Instance file: {"left": "<newick>", "right": "<newick>"}. The reader
/// ignores unknown keys.
std::string instance_to_json(const TanglegramInstance& inst);
TanglegramInstance instance_from_json(const std::string& text);

/// Layout file: {"left_swaps": [0|1, ...], "right_swaps": [0|1, ...]},
/// bits by preorder inner-node ordinal.
std::string layout_to_json(const Layout& layout);
Layout layout_from_json(const std::string& text);

/// Meta instance file: trees as Newick plus an "edges" array of
/// {"left": label, "right": label, "weight": positive int} objects; an
/// optional "layout" object may accompany the instance.
std::string meta_to_json(const MetaInstance& meta,
                         const Layout* layout = nullptr);
MetaInstance meta_from_json(const std::string& text);

/// One solver answer as reported by the command-line tool. The crossing
/// number is always recomputed from the instance and layout, never taken
/// from the solver.
struct ResultRecord {
  std::string method;
  std::uint64_t crossings = 0;
  std::vector<std::string> left_order;
  std::vector<std::string> right_order;
  std::vector<std::uint8_t> left_swaps;
  std::vector<std::uint8_t> right_swaps;
  std::optional<std::uint64_t> counted;     // split tally (lower bound)
  std::optional<std::uint64_t> cut_weight;  // dual solvers
  std::optional<std::uint64_t> pair_total;  // dual solvers: n(n-1)/2
  std::optional<std::uint64_t> elapsed_ms;  // present only when timing
};

ResultRecord make_result(const TanglegramInstance& inst, const Layout& layout,
                         std::string method);

/// Stable-key-order JSON (alphabetical, two-space indent, trailing
/// newline); byte-identical across runs for equal records.
std::string result_to_json(const ResultRecord& record);

/// Line-per-field plain text for terminals.
std::string result_to_text(const ResultRecord& record);

}  // namespace tangle
