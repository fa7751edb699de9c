#include "puregraph/graph.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace puregraph {

auto VertexSet::to_string() const -> std::string {
  std::string s;
  for (int v : *this) {
    if (!s.empty()) s += ' ';
    s += std::to_string(v);
  }
  return s;
}

namespace {

auto check_vertex(const Graph& g, int v) -> void {
  if (v < 0 || v >= g.n()) throw InputError("vertex " + std::to_string(v) + " out of range");
}

auto check_set(const Graph& g, const VertexSet& x) -> void {
  if (x.universe() != g.n()) throw InputError("vertex set universe does not match graph order");
}

auto check_disjoint(const Graph& g, const VertexSet& a, const VertexSet& b) -> void {
  check_set(g, a);
  check_set(g, b);
  if (a.intersects(b)) throw InputError("sets are not disjoint");
}

}  // namespace

Graph::Graph(int n) : n_(n), rows_(n, VertexSet(n)) {
  if (n < 0) throw InputError("negative vertex count");
}

Graph::Graph(int n, const std::vector<Edge>& edges) : Graph(n) {
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) throw InputError("edge endpoint out of range");
    if (u == v) throw InputError("loop at vertex " + std::to_string(u));
    rows_[u].insert(v);
    rows_[v].insert(u);
  }
}

auto Graph::from_rows(std::vector<VertexSet> rows) -> Graph {
  Graph g;
  g.n_ = static_cast<int>(rows.size());
  for (int v = 0; v < g.n_; ++v) {
    if (rows[v].universe() != g.n_) throw InputError("row universe mismatch");
    rows[v].erase(v);
  }
  for (int u = 0; u < g.n_; ++u)
    for (int v : rows[u])
      if (!rows[v].contains(u)) throw InputError("adjacency is not symmetric");
  g.rows_ = std::move(rows);
  return g;
}

auto Graph::max_degree() const -> int {
  int d = 0;
  for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
  return d;
}

auto Graph::edge_count() const -> long {
  long m = 0;
  for (int v = 0; v < n_; ++v) m += degree(v);
  return m / 2;
}

auto Graph::edges() const -> std::vector<Edge> {
  std::vector<Edge> out;
  for (int u = 0; u < n_; ++u)
    for (int v = rows_[u].next(u); v >= 0; v = rows_[u].next(v)) out.emplace_back(u, v);
  return out;
}

auto Graph::set_of(const std::vector<int>& members) const -> VertexSet {
  VertexSet s(n_);
  for (int v : members) {
    check_vertex(*this, v);
    s.insert(v);
  }
  return s;
}

auto complement(const Graph& g) -> Graph {
  std::vector<VertexSet> rows;
  rows.reserve(g.n());
  for (int v = 0; v < g.n(); ++v) {
    VertexSet r = g.neighbours(v).inverted();
    r.erase(v);
    rows.push_back(std::move(r));
  }
  return Graph::from_rows(std::move(rows));
}

auto induced_subgraph(const Graph& g, const std::vector<int>& order) -> Induced {
  std::vector<int> index(g.n(), -1);
  for (std::size_t i = 0; i < order.size(); ++i) {
    check_vertex(g, order[i]);
    if (index[order[i]] >= 0) throw InputError("repeated vertex in induced subgraph");
    index[order[i]] = static_cast<int>(i);
  }
  int k = static_cast<int>(order.size());
  std::vector<VertexSet> rows(k, VertexSet(k));
  for (int i = 0; i < k; ++i)
    for (int w : g.neighbours(order[i]))
      if (index[w] >= 0) rows[i].insert(index[w]);
  return {Graph::from_rows(std::move(rows)), order};
}

auto induced_subgraph(const Graph& g, const VertexSet& x) -> Induced {
  check_set(g, x);
  return induced_subgraph(g, x.to_vector());
}

auto open_nbhd(const Graph& g, const VertexSet& x) -> VertexSet {
  check_set(g, x);
  VertexSet r(g.n());
  for (int v : x) r |= g.neighbours(v);
  return r - x;
}

auto closed_nbhd(const Graph& g, const VertexSet& x) -> VertexSet {
  return open_nbhd(g, x) | x;
}

auto is_complete_pair(const Graph& g, const VertexSet& a, const VertexSet& b) -> bool {
  check_disjoint(g, a, b);
  for (int v : a)
    if (!b.subset_of(g.neighbours(v))) return false;
  return true;
}

auto is_anticomplete_pair(const Graph& g, const VertexSet& a, const VertexSet& b) -> bool {
  check_disjoint(g, a, b);
  for (int v : a)
    if (g.neighbours(v).intersects(b)) return false;
  return true;
}

auto covers(const Graph& g, const VertexSet& a, const VertexSet& b) -> bool {
  check_disjoint(g, a, b);
  VertexSet reach(g.n());
  for (int v : a) reach |= g.neighbours(v);
  return b.subset_of(reach);
}

auto bfs_layers(const Graph& g, int u, const VertexSet& within) -> BfsLayers {
  check_vertex(g, u);
  check_set(g, within);
  if (!within.contains(u)) throw InputError("BFS root outside the allowed set");
  BfsLayers out;
  VertexSet seen(g.n());
  VertexSet frontier(g.n());
  frontier.insert(u);
  seen.insert(u);
  while (!frontier.empty()) {
    out.layers.push_back(frontier);
    VertexSet nxt(g.n());
    for (int v : frontier) nxt |= g.neighbours(v);
    nxt &= within;
    nxt -= seen;
    seen |= nxt;
    frontier = std::move(nxt);
  }
  out.unreached = within - seen;
  return out;
}

auto bfs_layers(const Graph& g, int u) -> BfsLayers { return bfs_layers(g, u, g.vertices()); }

auto distances(const Graph& g, int u, const VertexSet& within) -> std::vector<int> {
  std::vector<int> dist(g.n(), -1);
  auto bl = bfs_layers(g, u, within);
  for (std::size_t i = 0; i < bl.layers.size(); ++i)
    for (int v : bl.layers[i]) dist[v] = static_cast<int>(i);
  return dist;
}

auto is_connected_set(const Graph& g, const VertexSet& x) -> bool {
  check_set(g, x);
  if (x.empty()) return true;
  return bfs_layers(g, x.first(), x).unreached.empty();
}

auto disjoint_union(const Graph& a, const Graph& b) -> Graph {
  std::vector<Edge> edges = a.edges();
  for (auto [u, v] : b.edges()) edges.emplace_back(u + a.n(), v + a.n());
  return Graph(a.n() + b.n(), edges);
}

auto is_induced_path(const Graph& g, const std::vector<int>& seq, bool cycle) -> bool {
  int k = static_cast<int>(seq.size());
  if (k == 0) return false;
  if (cycle && k < 3) return false;
  VertexSet seen(g.n());
  for (int v : seq) {
    if (v < 0 || v >= g.n() || seen.contains(v)) return false;
    seen.insert(v);
  }
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      bool consecutive = (j == i + 1) || (cycle && i == 0 && j == k - 1);
      if (g.adjacent(seq[i], seq[j]) != consecutive) return false;
    }
  return true;
}

auto read_edge_list(std::istream& in) -> Graph {
  std::string line;
  auto next_line = [&](std::string& out) {
    while (std::getline(in, line)) {
      auto pos = line.find_first_not_of(" \t\r");
      if (pos == std::string::npos || line[pos] == '#') continue;
      out = line;
      return true;
    }
    return false;
  };
  std::string header;
  if (!next_line(header)) throw InputError("missing header line");
  long n = -1, m = -1;
  {
    std::istringstream hs(header);
    std::string extra;
    if (!(hs >> n >> m) || (hs >> extra) || n < 0 || m < 0)
      throw InputError("bad header line: " + header);
  }
  std::vector<Edge> edges;
  std::vector<VertexSet> rows(n, VertexSet(static_cast<int>(n)));
  for (long i = 0; i < m; ++i) {
    std::string el;
    if (!next_line(el)) throw InputError("expected " + std::to_string(m) + " edges");
    std::istringstream es(el);
    long u = -1, v = -1;
    std::string extra;
    if (!(es >> u >> v) || (es >> extra)) throw InputError("bad edge line: " + el);
    if (!(0 <= u && u < v && v < n)) throw InputError("edge must satisfy 0 <= u < v < n: " + el);
    if (rows[u].contains(static_cast<int>(v))) throw InputError("duplicate edge: " + el);
    rows[u].insert(static_cast<int>(v));
    rows[v].insert(static_cast<int>(u));
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  std::string rest;
  if (next_line(rest)) throw InputError("trailing content after edge list");
  return Graph(static_cast<int>(n), edges);
}

auto read_edge_list_file(const std::string& path) -> Graph {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  return read_edge_list(in);
}

auto write_edge_list(std::ostream& out, const Graph& g) -> void {
  auto es = g.edges();
  out << g.n() << ' ' << es.size() << '\n';
  for (auto [u, v] : es) out << u << ' ' << v << '\n';
}

auto to_edge_list(const Graph& g) -> std::string {
  std::ostringstream os;
  write_edge_list(os, g);
  return os.str();
}

}  // namespace puregraph
