#include "tangle/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "json.hpp"
#include "tangle/crossings.hpp"
#include "tangle/error.hpp"

namespace tangle {

namespace {

using nlohmann::json;

json parse_json(const std::string& text, const char* what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(std::string(what) + ": " + e.what());
  }
}

std::string require_string(const json& j, const char* key, const char* what) {
  if (!j.is_object() || !j.contains(key) || !j.at(key).is_string())
    throw Error(std::string(what) + ": missing string field \"" + key + "\"");
  return j.at(key).get<std::string>();
}

std::vector<std::uint8_t> require_bits(const json& j, const char* key,
                                       const char* what) {
  if (!j.is_object() || !j.contains(key) || !j.at(key).is_array())
    throw Error(std::string(what) + ": missing array field \"" + key + "\"");
  std::vector<std::uint8_t> bits;
  for (const json& b : j.at(key)) {
    if (!b.is_number_integer() || (b != 0 && b != 1))
      throw Error(std::string(what) + ": \"" + key +
                  "\" entries must be 0 or 1");
    bits.push_back(b.get<int>() ? 1 : 0);
  }
  return bits;
}

json layout_to_json_obj(const Layout& layout) {
  json j;
  j["left_swaps"] = json::array();
  for (const auto b : layout.left_swaps) j["left_swaps"].push_back(int(b));
  j["right_swaps"] = json::array();
  for (const auto b : layout.right_swaps) j["right_swaps"].push_back(int(b));
  return j;
}

Layout layout_from_json_obj(const json& j, const char* what) {
  Layout layout;
  layout.left_swaps = require_bits(j, "left_swaps", what);
  layout.right_swaps = require_bits(j, "right_swaps", what);
  return layout;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open \"" + path + "\" for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw Error("failed reading \"" + path + "\"");
  return std::move(buf).str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open \"" + path + "\" for writing");
  out << content;
  out.flush();
  if (!out) throw Error("failed writing \"" + path + "\"");
}

std::string instance_to_json(const TanglegramInstance& inst) {
  json j;
  j["left"] = serialize_newick(inst.left());
  j["right"] = serialize_newick(inst.right());
  return dump(j);
}

TanglegramInstance instance_from_json(const std::string& text) {
  const json j = parse_json(text, "instance");
  return {parse_newick(require_string(j, "left", "instance")),
          parse_newick(require_string(j, "right", "instance"))};
}

std::string layout_to_json(const Layout& layout) {
  return dump(layout_to_json_obj(layout));
}

Layout layout_from_json(const std::string& text) {
  return layout_from_json_obj(parse_json(text, "layout"), "layout");
}

std::string meta_to_json(const MetaInstance& meta, const Layout* layout) {
  json j;
  j["left"] = serialize_newick(meta.left);
  j["right"] = serialize_newick(meta.right);
  j["edges"] = json::array();
  for (const MetaEdge& e : meta.edges) {
    json edge;
    edge["left"] = meta.left.node(e.left_leaf).label;
    edge["right"] = meta.right.node(e.right_leaf).label;
    edge["weight"] = e.weight;
    j["edges"].push_back(edge);
  }
  if (layout) j["layout"] = layout_to_json_obj(*layout);
  return dump(j);
}

MetaInstance meta_from_json(const std::string& text) {
  const json j = parse_json(text, "meta instance");
  MetaInstance meta{parse_newick(require_string(j, "left", "meta instance")),
                    parse_newick(require_string(j, "right", "meta instance")),
                    {}};
  std::map<std::string, int> left_leaf, right_leaf;
  for (const int v : meta.left.leaves()) left_leaf[meta.left.node(v).label] = v;
  for (const int v : meta.right.leaves())
    right_leaf[meta.right.node(v).label] = v;

  if (!j.contains("edges") || !j.at("edges").is_array())
    throw Error("meta instance: missing array field \"edges\"");
  for (const json& edge : j.at("edges")) {
    const std::string l = require_string(edge, "left", "meta edge");
    const std::string r = require_string(edge, "right", "meta edge");
    if (!edge.contains("weight") || !edge.at("weight").is_number_unsigned() ||
        edge.at("weight") == 0)
      throw Error("meta edge: \"weight\" must be a positive integer");
    const auto li = left_leaf.find(l);
    const auto ri = right_leaf.find(r);
    if (li == left_leaf.end())
      throw Error("meta edge: unknown left leaf \"" + l + "\"");
    if (ri == right_leaf.end())
      throw Error("meta edge: unknown right leaf \"" + r + "\"");
    meta.edges.push_back(
        {li->second, ri->second, edge.at("weight").get<std::uint64_t>()});
  }
  return meta;
}

ResultRecord make_result(const TanglegramInstance& inst, const Layout& layout,
                         std::string method) {
  validate_layout(inst, layout);
  ResultRecord r;
  r.method = std::move(method);
  r.crossings = count_crossings(inst, layout);
  r.left_order = leaf_order(inst, layout, Side::Left);
  r.right_order = leaf_order(inst, layout, Side::Right);
  r.left_swaps = layout.left_swaps;
  r.right_swaps = layout.right_swaps;
  return r;
}

std::string result_to_json(const ResultRecord& record) {
  json j;
  j["method"] = record.method;
  j["crossings"] = record.crossings;
  j["left_order"] = record.left_order;
  j["right_order"] = record.right_order;
  j["left_swaps"] = json::array();
  for (const auto b : record.left_swaps) j["left_swaps"].push_back(int(b));
  j["right_swaps"] = json::array();
  for (const auto b : record.right_swaps) j["right_swaps"].push_back(int(b));
  if (record.counted) j["counted"] = *record.counted;
  if (record.cut_weight) j["cut_weight"] = *record.cut_weight;
  if (record.pair_total) j["pair_total"] = *record.pair_total;
  if (record.elapsed_ms) j["elapsed_ms"] = *record.elapsed_ms;
  return dump(j);
}

std::string result_to_text(const ResultRecord& record) {
  std::ostringstream out;
  const auto join = [](const std::vector<std::string>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) s += ' ';
      s += v[i];
    }
    return s;
  };
  const auto bits = [](const std::vector<std::uint8_t>& v) {
    std::string s;
    for (const auto b : v) s += b ? '1' : '0';
    return s;
  };
  out << "method: " << record.method << '\n';
  out << "crossings: " << record.crossings << '\n';
  if (record.counted) out << "counted: " << *record.counted << '\n';
  if (record.cut_weight) out << "cut_weight: " << *record.cut_weight << '\n';
  if (record.pair_total) out << "pair_total: " << *record.pair_total << '\n';
  out << "left_order: " << join(record.left_order) << '\n';
  out << "right_order: " << join(record.right_order) << '\n';
  out << "left_swaps: " << bits(record.left_swaps) << '\n';
  out << "right_swaps: " << bits(record.right_swaps) << '\n';
  if (record.elapsed_ms) out << "elapsed_ms: " << *record.elapsed_ms << '\n';
  return std::move(out).str();
}

}  // namespace tangle
