#pragma once

// Finite crystal graphs: breadth-first closure under the f_i within a degree
// bound, connectivity with e-word witnesses, and DOT/JSON export.

#include "crystal_grid/cartan.hpp"
#include "crystal_grid/crystal.hpp"
#include "crystal_grid/operator_word.hpp"

#include <json.hpp>  // vendored nlohmann::json

#include <algorithm>
#include <array>
#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <tuple>
#include <unordered_map>
#include <vector>

namespace crystal_grid {

struct GraphNode {
  std::string id;
  std::vector<int> dims;
  std::optional<std::array<int, 2>> ranks;
  std::vector<std::int64_t> wt;
  friend bool operator==(const GraphNode&, const GraphNode&) = default;
};

struct GraphEdge {
  std::string src;
  Color color = 0;
  std::string dst;
  friend bool operator==(const GraphEdge&, const GraphEdge&) = default;
};

struct CrystalGraph {
  std::vector<GraphNode> nodes;
  std::vector<GraphEdge> edges;

  std::optional<std::size_t> find(const std::string& id) const {
    for (std::size_t k = 0; k < nodes.size(); ++k)
      if (nodes[k].id == id) return k;
    return std::nullopt;
  }
  friend bool operator==(const CrystalGraph&, const CrystalGraph&) = default;
};

namespace detail {

template <Crystal C>
auto node_key(const C& crystal, const typename C::element_type& b) {
  std::array<int, 2> ranks{-1, -1};
  if constexpr (RankedCrystal<C>) ranks = crystal.ranks(b);
  return std::make_tuple(crystal.degree(b), crystal.dims(b), ranks, crystal.label(b));
}

}  // namespace detail

/// Closes `seeds` under every f_i whose image has degree <= bound. Nodes are
/// ordered by (total dimension, dims, ranks); edges by (source order, color).
template <Crystal C>
CrystalGraph build_crystal_graph(const C& crystal, std::span<const typename C::element_type> seeds, int bound) {
  using E = typename C::element_type;
  using Key = decltype(detail::node_key(crystal, std::declval<const E&>()));
  std::map<Key, E> found;
  std::deque<E> queue;
  for (const auto& s : seeds) {
    if (crystal.degree(s) > bound) continue;
    if (found.emplace(detail::node_key(crystal, s), s).second) queue.push_back(s);
  }
  const auto n = static_cast<Color>(crystal.cartan().size());
  while (!queue.empty()) {
    const E b = queue.front();
    queue.pop_front();
    for (Color i = 1; i <= n; ++i) {
      const auto fb = crystal.f(b, i);
      if (!fb || crystal.degree(*fb) > bound) continue;
      if (found.emplace(detail::node_key(crystal, *fb), *fb).second) queue.push_back(*fb);
    }
  }

  CrystalGraph g;
  g.nodes.reserve(found.size());
  for (const auto& [key, b] : found) {
    GraphNode node;
    node.id = crystal.label(b);
    node.dims = crystal.dims(b);
    if constexpr (RankedCrystal<C>) node.ranks = crystal.ranks(b);
    node.wt = crystal.weight(b).coeffs;
    g.nodes.push_back(std::move(node));
  }
  for (const auto& [key, b] : found) {
    for (Color i = 1; i <= n; ++i) {
      const auto fb = crystal.f(b, i);
      if (!fb || crystal.degree(*fb) > bound) continue;
      g.edges.push_back({crystal.label(b), i, crystal.label(*fb)});
    }
  }
  return g;
}

struct ConnectivityResult {
  bool connected = false;
  /// For each reached node, a word that carries it back to the root.
  std::map<std::string, OperatorWord> witnesses;
  std::vector<std::string> unreached;
};

/// Undirected reachability from `root`. Every node of `expected` (default: all
/// graph nodes) must be reached. Witness words use e_i against an edge
/// direction and f_i along it; on graphs generated from the root they are
/// pure e-words because breadth-first paths are monotone in degree.
inline ConnectivityResult is_connected_within(const CrystalGraph& g, const std::string& root,
                                              const std::vector<std::string>& expected = {}) {
  ConnectivityResult out;
  std::unordered_map<std::string, std::vector<std::pair<std::string, OpStep>>> adj;
  for (const auto& e : g.edges) {
    // Walking dst -> src along an edge src -f_i-> dst is e_i.
    adj[e.src].push_back({e.dst, {OpKind::f, e.color}});
    adj[e.dst].push_back({e.src, {OpKind::e, e.color}});
  }
  // steps[x] lists the operators along the path root -> x.
  std::map<std::string, std::vector<OpStep>> steps;
  if (g.find(root)) {
    steps[root] = {};
    std::deque<std::string> queue{root};
    while (!queue.empty()) {
      const auto x = queue.front();
      queue.pop_front();
      for (const auto& [y, op] : adj[x]) {
        if (steps.count(y)) continue;
        auto path = steps[x];
        path.push_back(op);
        steps[y] = std::move(path);
        queue.push_back(y);
      }
    }
  }
  for (const auto& [id, path] : steps) {
    // Undo root -> id from id's side: invert each step and reverse the order.
    // Written order is application order reversed, so the inverted steps keep
    // their original positions.
    std::vector<OpStep> word;
    for (const auto& s : path) word.push_back({s.kind == OpKind::f ? OpKind::e : OpKind::f, s.color});
    out.witnesses.emplace(id, OperatorWord(std::move(word)));
  }
  std::vector<std::string> want = expected;
  if (want.empty())
    for (const auto& n : g.nodes) want.push_back(n.id);
  for (const auto& id : want)
    if (!steps.count(id)) out.unreached.push_back(id);
  out.connected = out.unreached.empty() && g.find(root).has_value();
  return out;
}

inline std::string export_dot(const CrystalGraph& g) {
  std::ostringstream os;
  os << "digraph crystal {\n";
  for (const auto& n : g.nodes) os << "  \"" << n.id << "\";\n";
  for (const auto& e : g.edges) os << "  \"" << e.src << "\" -> \"" << e.dst << "\" [label=\"" << e.color << "\"];\n";
  os << "}\n";
  return os.str();
}

inline nlohmann::ordered_json graph_to_json(const CrystalGraph& g) {
  nlohmann::ordered_json nodes = nlohmann::ordered_json::array();
  for (const auto& n : g.nodes) {
    nlohmann::ordered_json j;
    j["id"] = n.id;
    j["dims"] = n.dims;
    if (n.ranks) {
      j["ranks"] = *n.ranks;
    } else {
      j["ranks"] = nullptr;
    }
    j["wt"] = n.wt;
    nodes.push_back(std::move(j));
  }
  nlohmann::ordered_json edges = nlohmann::ordered_json::array();
  for (const auto& e : g.edges) {
    nlohmann::ordered_json j;
    j["src"] = e.src;
    j["color"] = e.color;
    j["dst"] = e.dst;
    edges.push_back(std::move(j));
  }
  nlohmann::ordered_json out;
  out["nodes"] = std::move(nodes);
  out["edges"] = std::move(edges);
  return out;
}

inline std::string export_json(const CrystalGraph& g) { return graph_to_json(g).dump() + "\n"; }

/// Inverse of export_json; throws nlohmann::json::exception on malformed input.
inline CrystalGraph import_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  CrystalGraph g;
  for (const auto& n : j.at("nodes")) {
    GraphNode node;
    node.id = n.at("id").get<std::string>();
    node.dims = n.at("dims").get<std::vector<int>>();
    if (!n.at("ranks").is_null()) node.ranks = n.at("ranks").get<std::array<int, 2>>();
    node.wt = n.at("wt").get<std::vector<std::int64_t>>();
    g.nodes.push_back(std::move(node));
  }
  for (const auto& e : j.at("edges"))
    g.edges.push_back({e.at("src").get<std::string>(), e.at("color").get<int>(), e.at("dst").get<std::string>()});
  return g;
}

}  // namespace crystal_grid
