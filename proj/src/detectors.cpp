#include "puregraph/detectors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

namespace puregraph {

auto to_string(Status s) -> std::string {
  switch (s) {
    case Status::Verified: return "Verified";
    case Status::WitnessFound: return "WitnessFound";
    case Status::Unknown: return "Unknown";
  }
  return "?";
}

auto parse_mode(const std::string& s) -> Mode {
  if (s == "exact") return Mode::Exact;
  if (s == "heuristic") return Mode::Heuristic;
  throw InputError("mode must be exact or heuristic");
}

auto ceil_threshold(double x) -> int {
  if (x <= 0) return 0;
  return static_cast<int>(std::ceil(x - 1e-9));
}

auto is_eps_sparse(const Graph& g, double eps) -> SparsityResult {
  if (eps <= 0) throw InputError("eps must be positive");
  SparsityResult r;
  for (int v = 0; v < g.n(); ++v)
    if (r.witness < 0 || g.degree(v) > r.max_degree) {
      r.witness = v;
      r.max_degree = g.degree(v);
    }
  r.sparse = g.n() == 0 || r.max_degree < eps * g.n() - 1e-9;
  return r;
}

auto is_eps_sparse_within(const Graph& g, const VertexSet& x, double eps) -> bool {
  double bound = eps * x.size() - 1e-9;
  for (int v : x)
    if (g.neighbours(v).intersection_size(x) >= bound) return false;
  return true;
}

namespace {

struct Budget {
  std::uint64_t limit;
  std::uint64_t used = 0;
  auto tick() -> bool { return ++used <= limit; }
  auto exhausted() const -> bool { return used > limit; }
};

// Exact search for A with |A| = na and |V \ N[A]| >= nb.
struct AnticompleteSearch {
  const Graph& g;
  int na, nb;
  Budget& budget;
  std::vector<int> chosen;
  VertexSet found_a;
  bool found = false;

  auto run(int start, const VertexSet& avail) -> void {
    if (found || budget.exhausted()) return;
    if (static_cast<int>(chosen.size()) == na) {
      found = true;
      found_a = VertexSet::of(g.n(), chosen);
      return;
    }
    int need = na - static_cast<int>(chosen.size());
    for (int v = start; v <= g.n() - need; ++v) {
      if (!budget.tick()) return;
      VertexSet next = avail;
      next -= g.neighbours(v);
      next.erase(v);
      if (next.size() < nb) continue;
      chosen.push_back(v);
      run(v + 1, next);
      chosen.pop_back();
      if (found || budget.exhausted()) return;
    }
  }
};

auto witness_pair(const Graph& g, const VertexSet& a, int nb, bool swapped) -> SearchOutcome {
  SearchOutcome out;
  out.status = Status::WitnessFound;
  VertexSet b = g.vertices() - closed_nbhd(g, a);
  VertexSet bt(g.n());
  int k = 0;
  for (int v : b) {
    if (k++ == nb) break;
    bt.insert(v);
  }
  out.a = swapped ? bt : a;
  out.b = swapped ? a : bt;
  return out;
}

auto coherence_exact(const Graph& g, int na, int nb, std::uint64_t limit) -> SearchOutcome {
  bool swapped = nb < na;
  if (swapped) std::swap(na, nb);
  SearchOutcome out;
  if (na + nb > g.n()) {
    out.status = Status::Verified;
    return out;
  }
  Budget budget{limit};
  AnticompleteSearch s{g, na, nb, budget, {}, {}, false};
  s.run(0, g.vertices());
  if (s.found) {
    out = witness_pair(g, s.found_a, nb, swapped);
  } else {
    out.status = budget.exhausted() ? Status::Unknown : Status::Verified;
  }
  out.expansions = budget.used;
  return out;
}

// Greedy growth of A followed by bilateral peeling over seeded random splits.
auto coherence_heuristic(const Graph& g, int na, int nb, std::uint64_t limit) -> SearchOutcome {
  SearchOutcome out;
  Budget budget{limit};
  int n = g.n();
  auto accept = [&](const VertexSet& a, const VertexSet& b) {
    if (a.size() >= na && b.size() >= nb && is_anticomplete_pair(g, a, b)) {
      out.status = Status::WitnessFound;
      out.a = a;
      out.b = b;
      return true;
    }
    if (b.size() >= na && a.size() >= nb && is_anticomplete_pair(g, b, a)) {
      out.status = Status::WitnessFound;
      out.a = b;
      out.b = a;
      return true;
    }
    return false;
  };
  if (na + nb <= n) {
    for (int s = 0; s < n && out.status != Status::WitnessFound; ++s) {
      VertexSet a(n);
      a.insert(s);
      VertexSet b = g.vertices() - closed_nbhd(g, a);
      while (budget.tick()) {
        if (accept(a, b)) break;
        if (a.size() >= std::max(na, nb) || b.size() < std::min(na, nb)) break;
        int best = -1, best_loss = n + 1;
        for (int w = 0; w < n; ++w) {
          if (a.contains(w)) continue;
          int loss = g.neighbours(w).intersection_size(b) + (b.contains(w) ? 1 : 0);
          if (loss < best_loss) {
            best_loss = loss;
            best = w;
          }
        }
        if (best < 0) break;
        a.insert(best);
        b -= g.neighbours(best);
        b.erase(best);
      }
      if (budget.exhausted()) break;
    }
    std::mt19937_64 rng(0x5eed);
    while (out.status != Status::WitnessFound && budget.tick()) {
      VertexSet a(n), b(n);
      for (int v = 0; v < n; ++v) (rng() & 1 ? a : b).insert(v);
      while (true) {
        int worst = -1, worst_cross = 0;
        for (int v = 0; v < n; ++v) {
          int cross = 0;
          if (a.contains(v)) cross = g.neighbours(v).intersection_size(b);
          else if (b.contains(v)) cross = g.neighbours(v).intersection_size(a);
          if (cross > worst_cross) {
            worst_cross = cross;
            worst = v;
          }
        }
        if (worst < 0) break;
        a.erase(worst);
        b.erase(worst);
      }
      accept(a, b);
      if (budget.used > static_cast<std::uint64_t>(64) * (n + 1) + n) break;
    }
  }
  out.expansions = budget.used;
  return out;
}

}  // namespace

auto coherence_violation(const Graph& g, CoherenceParams p, Mode mode, std::uint64_t budget,
                         ExactCaps caps) -> SearchOutcome {
  if (p.alpha < 0 || p.beta < 0) throw InputError("coherence thresholds must be non-negative");
  int na = ceil_threshold(p.alpha), nb = ceil_threshold(p.beta);
  if (mode == Mode::Exact) {
    if (g.n() > caps.coherence)
      throw BudgetError("exact coherence search capped at n <= " + std::to_string(caps.coherence));
    return coherence_exact(g, na, nb, budget);
  }
  return coherence_heuristic(g, na, nb, budget);
}

namespace {

auto violates_expansion(int closed, int x, double tau, int n) -> bool {
  double bound = std::min(tau * x, n / 2.0);
  return closed < bound - 1e-9;
}

struct ExpansionDfs {
  const Graph& g;
  const VertexSet& within;
  std::vector<int> order;
  double tau;
  int n;
  Budget& budget;
  std::vector<int> chosen;
  bool found = false;

  auto run(std::size_t start, const VertexSet& closed) -> void {
    for (std::size_t i = start; i < order.size(); ++i) {
      if (found || !budget.tick()) return;
      int v = order[i];
      VertexSet next = closed | (g.neighbours(v) & within);
      next.insert(v);
      int sz = next.size();
      if (sz >= n / 2.0 - 1e-9) continue;  // supersets only grow N[X]
      chosen.push_back(v);
      if (violates_expansion(sz, static_cast<int>(chosen.size()), tau, n)) {
        found = true;
        return;
      }
      run(i + 1, next);
      if (found) return;
      chosen.pop_back();
    }
  }
};

}  // namespace

auto is_tau_expanding_within(const Graph& g, const VertexSet& within, double tau, Mode mode,
                             std::uint64_t limit, ExactCaps caps, ExpansionSearch search)
    -> SearchOutcome {
  if (tau < 1) throw InputError("tau must be at least 1");
  SearchOutcome out;
  Budget budget{limit};
  int n = within.size();
  auto order = within.to_vector();
  auto closed_in = [&](const VertexSet& x) { return (closed_nbhd(g, x) & within).size(); };
  if (mode == Mode::Exact) {
    if (n > caps.expansion)
      throw BudgetError("exact expansion search capped at n <= " + std::to_string(caps.expansion));
    if (search == ExpansionSearch::Plain) {
      for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        if (!budget.tick()) break;
        VertexSet x(g.n());
        for (int i = 0; i < n; ++i)
          if (mask >> i & 1U) x.insert(order[i]);
        if (violates_expansion(closed_in(x), x.size(), tau, n)) {
          out.status = Status::WitnessFound;
          out.a = x;
          break;
        }
      }
    } else {
      ExpansionDfs dfs{g, within, order, tau, n, budget, {}, false};
      dfs.run(0, VertexSet(g.n()));
      if (dfs.found) {
        out.status = Status::WitnessFound;
        out.a = VertexSet::of(g.n(), dfs.chosen);
      }
    }
    if (out.status != Status::WitnessFound)
      out.status = budget.exhausted() ? Status::Unknown : Status::Verified;
    out.expansions = budget.used;
    return out;
  }
  // Heuristic: singletons, closed neighbourhoods, then greedy growth from each vertex.
  for (int v : order) {
    VertexSet x(g.n());
    x.insert(v);
    for (int step = 0; step < n && budget.tick(); ++step) {
      int cl = closed_in(x);
      if (violates_expansion(cl, x.size(), tau, n)) {
        out.status = Status::WitnessFound;
        out.a = x;
        out.expansions = budget.used;
        return out;
      }
      VertexSet frontier = (closed_nbhd(g, x) & within) - x;
      if (frontier.empty()) break;
      int best = -1, best_growth = n + 1;
      for (int w : frontier) {
        int growth = (g.neighbours(w) & within).size() - (g.neighbours(w) & closed_nbhd(g, x)).size();
        if (growth < best_growth) {
          best_growth = growth;
          best = w;
        }
      }
      x.insert(best);
    }
  }
  out.expansions = budget.used;
  return out;
}

auto is_tau_expanding(const Graph& g, double tau, Mode mode, std::uint64_t budget, ExactCaps caps,
                      ExpansionSearch search) -> SearchOutcome {
  return is_tau_expanding_within(g, g.vertices(), tau, mode, budget, caps, search);
}

namespace {

// Induced cycles of length ell whose least vertex is the start; heuristic mode caps branching.
struct HoleDfs {
  const Graph& g;
  int ell;
  int branch_cap;
  Budget& budget;
  std::vector<int> path;
  VertexSet forbidden;  // neighbours of interior path vertices
  bool found = false;

  auto run() -> void {
    if (found || budget.exhausted()) return;
    int start = path.front(), last = path.back();
    int len = static_cast<int>(path.size());
    if (len == ell) {
      if (g.adjacent(last, start)) found = true;
      return;
    }
    VertexSet cand = g.neighbours(last);
    cand -= forbidden;
    for (int v : path) cand.erase(v);
    int tried = 0;
    for (int w = cand.next(start); w >= 0; w = cand.next(w)) {
      if (!budget.tick()) return;
      // w must not close the cycle early.
      bool adj_start = g.adjacent(w, start);
      if (len >= 2 && adj_start != (len + 1 == ell)) continue;
      if (branch_cap > 0 && tried++ >= branch_cap) break;
      VertexSet saved = forbidden;
      if (len >= 2) forbidden |= g.neighbours(last);
      path.push_back(w);
      run();
      if (found) return;
      path.pop_back();
      forbidden = saved;
    }
  }
};

}  // namespace

auto find_hole_of_length(const Graph& g, int ell, Mode mode, std::uint64_t limit) -> SearchOutcome {
  if (ell < 4) throw InputError("hole length must be at least 4");
  SearchOutcome out;
  Budget budget{limit};
  int cap = mode == Mode::Heuristic ? 3 : 0;
  for (int s = 0; s < g.n() && !budget.exhausted(); ++s) {
    HoleDfs dfs{g, ell, cap, budget, {s}, VertexSet(g.n()), false};
    dfs.run();
    if (dfs.found) {
      out.status = Status::WitnessFound;
      out.sequence = dfs.path;
      out.expansions = budget.used;
      return out;
    }
  }
  if (mode == Mode::Exact && !budget.exhausted()) out.status = Status::Verified;
  out.expansions = budget.used;
  return out;
}

auto find_antihole_of_length(const Graph& g, int ell, Mode mode, std::uint64_t budget)
    -> SearchOutcome {
  return find_hole_of_length(complement(g), ell, mode, budget);
}

auto girth(const Graph& h) -> std::optional<int> {
  std::optional<int> best;
  for (int r = 0; r < h.n(); ++r) {
    std::vector<int> dist(h.n(), -1), parent(h.n(), -1);
    std::vector<int> queue{r};
    dist[r] = 0;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      int u = queue[qi];
      for (int w : h.neighbours(u)) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push_back(w);
        } else if (parent[u] != w) {
          int len = dist[u] + dist[w] + 1;
          if (!best || len < *best) best = len;
        }
      }
    }
  }
  return best;
}

auto branch_length(const Graph& h) -> std::optional<int> {
  std::optional<int> best = girth(h);
  for (int u = 0; u < h.n(); ++u) {
    if (h.degree(u) < 3) continue;
    auto dist = distances(h, u, h.vertices());
    for (int v = u + 1; v < h.n(); ++v)
      if (h.degree(v) >= 3 && dist[v] > 0 && (!best || dist[v] < *best)) best = dist[v];
  }
  return best;
}

auto is_induced_embedding(const Graph& g, const Graph& h, const std::vector<int>& map) -> bool {
  if (static_cast<int>(map.size()) != h.n()) return false;
  VertexSet used(g.n());
  for (int v : map) {
    if (v < 0 || v >= g.n() || used.contains(v)) return false;
    used.insert(v);
  }
  for (int i = 0; i < h.n(); ++i)
    for (int j = i + 1; j < h.n(); ++j)
      if (h.adjacent(i, j) != g.adjacent(map[i], map[j])) return false;
  return true;
}

auto contains_induced(const Graph& g, const Graph& h, std::uint64_t limit) -> SearchOutcome {
  SearchOutcome out;
  Budget budget{limit};
  int k = h.n();
  // Connected-first ordering so each pattern vertex is constrained by earlier ones.
  std::vector<int> order;
  VertexSet placed(k);
  for (int r = 0; r < k; ++r) {
    if (placed.contains(r)) continue;
    for (const auto& layer : bfs_layers(h, r).layers)
      for (int v : layer) {
        order.push_back(v);
        placed.insert(v);
      }
  }
  std::vector<int> map(k, -1);
  VertexSet used(g.n());
  bool found = false;
  auto rec = [&](auto&& self, int i) -> void {
    if (found || budget.exhausted()) return;
    if (i == k) {
      found = true;
      return;
    }
    int p = order[i];
    VertexSet cand = g.vertices() - used;
    for (int j = 0; j < i; ++j) {
      int q = order[j];
      if (h.adjacent(p, q)) cand &= g.neighbours(map[q]);
      else cand -= g.neighbours(map[q]);
    }
    for (int v : cand) {
      if (!budget.tick()) return;
      if (g.degree(v) < h.degree(p)) continue;
      map[p] = v;
      used.insert(v);
      self(self, i + 1);
      if (found) return;
      used.erase(v);
      map[p] = -1;
    }
  };
  rec(rec, 0);
  if (found) {
    out.status = Status::WitnessFound;
    out.sequence = map;
  } else if (!budget.exhausted()) {
    out.status = Status::Verified;
  }
  out.expansions = budget.used;
  return out;
}

namespace {

auto peel_to_sparse(const Graph& g, double eta, std::uint64_t limit) -> VertexSet {
  VertexSet x = g.vertices();
  std::uint64_t steps = 0;
  while (!x.empty() && !is_eps_sparse_within(g, x, eta)) {
    int worst = -1, worst_deg = -1;
    for (int v : x) {
      int d = g.neighbours(v).intersection_size(x);
      if (d > worst_deg) {
        worst_deg = d;
        worst = v;
      }
    }
    x.erase(worst);
    if (++steps > limit) break;
  }
  return x;
}

}  // namespace

auto find_sparse_side(const Graph& g, double eta, std::uint64_t budget) -> SparseSide {
  if (!(eta > 0 && eta <= 1)) throw InputError("eta must lie in (0, 1]");
  long pairs = static_cast<long>(g.n()) * (g.n() - 1) / 2;
  bool graph_first = g.edge_count() * 2 <= pairs;
  Graph comp = complement(g);
  VertexSet xg = peel_to_sparse(g, eta, budget);
  VertexSet xc = peel_to_sparse(comp, eta, budget);
  SparseSide r;
  if (xg.size() > xc.size() || (xg.size() == xc.size() && graph_first)) {
    r.x = xg;
    r.side = Side::Graph;
  } else {
    r.x = xc;
    r.side = Side::Complement;
  }
  if (r.x.empty() && g.n() > 0) {
    r.x = VertexSet(g.n());
    r.x.insert(0);
  }
  return r;
}

}  // namespace puregraph
