#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "puregraph/vertex_set.hpp"

namespace puregraph {

// Raised for malformed arguments (out-of-range vertices, overlapping sets, bad files).
class InputError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

using Edge = std::pair<int, int>;

// Immutable simple graph on vertices 0..n-1 with bitset rows.
class Graph {
public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, const std::vector<Edge>& edges);
  static auto from_rows(std::vector<VertexSet> rows) -> Graph;

  auto n() const -> int { return n_; }
  auto adjacent(int u, int v) const -> bool { return rows_[u].contains(v); }
  auto neighbours(int v) const -> const VertexSet& { return rows_[v]; }
  auto degree(int v) const -> int { return rows_[v].size(); }
  auto max_degree() const -> int;
  auto edge_count() const -> long;
  auto edges() const -> std::vector<Edge>;
  auto vertices() const -> VertexSet { return VertexSet::full(n_); }
  auto empty_set() const -> VertexSet { return VertexSet(n_); }
  auto set_of(const std::vector<int>& members) const -> VertexSet;

  friend auto operator==(const Graph& a, const Graph& b) -> bool = default;

private:
  int n_ = 0;
  std::vector<VertexSet> rows_;
};

struct Induced {
  Graph graph;
  std::vector<int> to_host;  // local index -> host vertex
};

struct BfsLayers {
  std::vector<VertexSet> layers;
  VertexSet unreached;
};

auto complement(const Graph& g) -> Graph;
auto induced_subgraph(const Graph& g, const VertexSet& x) -> Induced;
auto induced_subgraph(const Graph& g, const std::vector<int>& order) -> Induced;
auto open_nbhd(const Graph& g, const VertexSet& x) -> VertexSet;
auto closed_nbhd(const Graph& g, const VertexSet& x) -> VertexSet;
auto is_complete_pair(const Graph& g, const VertexSet& a, const VertexSet& b) -> bool;
auto is_anticomplete_pair(const Graph& g, const VertexSet& a, const VertexSet& b) -> bool;
auto covers(const Graph& g, const VertexSet& a, const VertexSet& b) -> bool;
auto bfs_layers(const Graph& g, int u) -> BfsLayers;
// BFS restricted to G[within]; u must lie in within.
auto bfs_layers(const Graph& g, int u, const VertexSet& within) -> BfsLayers;
auto distances(const Graph& g, int u, const VertexSet& within) -> std::vector<int>;
auto is_connected_set(const Graph& g, const VertexSet& x) -> bool;
auto disjoint_union(const Graph& a, const Graph& b) -> Graph;

// True iff seq is an induced path (or induced cycle when cycle is set) in g.
auto is_induced_path(const Graph& g, const std::vector<int>& seq, bool cycle = false) -> bool;

auto read_edge_list(std::istream& in) -> Graph;
auto read_edge_list_file(const std::string& path) -> Graph;
auto write_edge_list(std::ostream& out, const Graph& g) -> void;
auto to_edge_list(const Graph& g) -> std::string;

}  // namespace puregraph
