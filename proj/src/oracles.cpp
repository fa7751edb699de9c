#include "puregraph/oracles.hpp"

#include <algorithm>

namespace puregraph {

namespace {

struct Budget {
  std::uint64_t limit;
  std::uint64_t used = 0;
  auto tick() -> bool { return ++used <= limit; }
  auto exhausted() const -> bool { return used > limit; }
};

auto rank_key(const PurePairResult& r) -> std::pair<int, int> {
  return {r.objective, r.a.size() + r.b.size()};
}

}  // namespace

auto better_pair(const PurePairResult& x, const PurePairResult& y) -> bool {
  auto kx = rank_key(x), ky = rank_key(y);
  if (kx != ky) return kx > ky;
  auto ax = x.a.to_vector(), ay = y.a.to_vector();
  if (ax != ay) return ax < ay;
  return x.b.to_vector() < y.b.to_vector();
}

auto validate_pure_pair(const Graph& g, const PurePairResult& r) -> bool {
  if (r.objective == 0) return true;
  if (r.a.universe() != g.n() || r.b.universe() != g.n()) return false;
  if (r.a.empty() || r.b.empty() || r.a.intersects(r.b)) return false;
  if (std::min(r.a.size(), r.b.size()) != r.objective) return false;
  return r.kind == PairKind::Complete ? is_complete_pair(g, r.a, r.b)
                                      : is_anticomplete_pair(g, r.a, r.b);
}

namespace {

auto make_pair_result(const Graph& g, const VertexSet& a, PairKind kind) -> PurePairResult {
  PurePairResult r;
  r.kind = kind;
  r.a = a;
  r.b = g.vertices() - closed_nbhd(g, a);
  r.objective = std::min(r.a.size(), r.b.size());
  if (r.objective == 0) {
    r.a = VertexSet(g.n());
    r.b = VertexSet(g.n());
  }
  return r;
}

// Closes a pair: B = V \ N[A], then A = V \ N[B], which never shrinks either side.
auto close_pair(const Graph& g, const VertexSet& a, PairKind kind) -> PurePairResult {
  auto r = make_pair_result(g, a, kind);
  if (r.objective == 0) return r;
  VertexSet a2 = g.vertices() - closed_nbhd(g, r.b);
  PurePairResult r2;
  r2.kind = kind;
  r2.a = a2;
  r2.b = r.b;
  r2.objective = std::min(a2.size(), r.b.size());
  return better_pair(r2, r) ? r2 : r;
}

// Branch and bound over A in index order with B = V \ N[A].
struct AnticompleteBnB {
  const Graph& g;
  Budget& budget;
  PurePairResult best;
  std::vector<int> chosen;

  auto consider(const VertexSet& a, const VertexSet& b) -> void {
    PurePairResult r;
    r.kind = PairKind::Anticomplete;
    r.a = a;
    r.b = b;
    r.objective = std::min(a.size(), b.size());
    if (r.objective > 0 && better_pair(r, best)) best = r;
  }

  auto run(int start, const VertexSet& a, const VertexSet& b) -> void {
    int n = g.n();
    for (int v = start; v < n; ++v) {
      if (!budget.tick()) return;
      VertexSet nb = b - g.neighbours(v);
      nb.erase(v);
      int asz = a.size() + 1;
      int remaining = n - v - 1;
      int ub_min = std::min(asz + remaining, nb.size());
      int ub_sum = asz + remaining + nb.size();
      if (ub_min < best.objective || (ub_min == best.objective && ub_sum < best.a.size() + best.b.size()))
        continue;
      if (nb.empty()) continue;
      VertexSet na = a;
      na.insert(v);
      consider(na, nb);
      run(v + 1, na, nb);
      if (budget.exhausted()) return;
    }
  }
};

auto growth_heuristic(const Graph& g, std::uint64_t limit) -> PurePairResult {
  int n = g.n();
  Budget budget{limit};
  PurePairResult best;
  best.kind = PairKind::Anticomplete;
  for (int s = 0; s < n && !budget.exhausted(); ++s) {
    VertexSet a(n);
    a.insert(s);
    VertexSet b = g.vertices() - closed_nbhd(g, a);
    while (!b.empty() && budget.tick()) {
      auto r = close_pair(g, a, PairKind::Anticomplete);
      if (r.objective > 0 && better_pair(r, best)) best = r;
      if (a.size() >= b.size()) break;
      int pick = -1, loss = n + 1;
      for (int w = 0; w < n; ++w) {
        if (a.contains(w)) continue;
        int l = g.neighbours(w).intersection_size(b) + (b.contains(w) ? 1 : 0);
        if (l < loss) {
          loss = l;
          pick = w;
        }
      }
      if (pick < 0) break;
      a.insert(pick);
      b -= g.neighbours(pick);
      b.erase(pick);
    }
  }
  // Greedy independent set split into halves.
  VertexSet alive = g.vertices();
  std::vector<int> indep;
  while (!alive.empty()) {
    int pick = -1, deg = n + 1;
    for (int v : alive) {
      int d = g.neighbours(v).intersection_size(alive);
      if (d < deg) {
        deg = d;
        pick = v;
      }
    }
    indep.push_back(pick);
    alive -= g.neighbours(pick);
    alive.erase(pick);
  }
  if (indep.size() >= 2) {
    std::sort(indep.begin(), indep.end());
    VertexSet a(n);
    for (std::size_t i = 0; i < indep.size() / 2; ++i) a.insert(indep[i]);
    auto r = close_pair(g, a, PairKind::Anticomplete);
    if (r.objective > 0 && better_pair(r, best)) best = r;
  }
  best.expansions = budget.used;
  return best;
}

auto exact_anticomplete(const Graph& g, std::uint64_t limit, const PurePairResult& seed)
    -> PurePairResult {
  Budget budget{limit};
  AnticompleteBnB bnb{g, budget, seed, {}};
  bnb.run(0, VertexSet(g.n()), g.vertices());
  auto r = bnb.best;
  r.kind = PairKind::Anticomplete;
  r.exact = !budget.exhausted();
  r.expansions = budget.used;
  return r;
}

auto swap_kind(PurePairResult r) -> PurePairResult {
  r.kind = r.kind == PairKind::Anticomplete ? PairKind::Complete : PairKind::Anticomplete;
  return r;
}

}  // namespace

auto max_anticomplete_pair(const Graph& g, Mode mode, std::uint64_t budget, OracleCaps caps)
    -> PurePairResult {
  if (mode == Mode::Exact) {
    if (g.n() > caps.pure_pair)
      throw BudgetError("exact pure-pair search capped at n <= " + std::to_string(caps.pure_pair));
    PurePairResult seed;
    seed.a = VertexSet(g.n());
    seed.b = VertexSet(g.n());
    return exact_anticomplete(g, budget, seed);
  }
  return growth_heuristic(g, budget);
}

auto max_pure_pair(const Graph& g, Mode mode, std::uint64_t budget, OracleCaps caps)
    -> PurePairResult {
  auto anti = max_anticomplete_pair(g, mode, budget, caps);
  auto comp = swap_kind(max_anticomplete_pair(complement(g), mode, budget, caps));
  comp.expansions += anti.expansions;
  anti.expansions = comp.expansions;
  bool exact = anti.exact && comp.exact;
  auto& pick = better_pair(comp, anti) ? comp : anti;
  pick.exact = exact;
  return pick;
}

auto max_pure_pair_with_fallback(const Graph& g, double target, std::uint64_t budget) -> PurePairResult {
  auto heur = max_pure_pair(g, Mode::Heuristic, budget);
  if (heur.objective >= ceil_threshold(target)) return heur;
  PurePairResult none;
  none.a = VertexSet(g.n());
  none.b = VertexSet(g.n());
  auto anti = exact_anticomplete(g, budget, heur.kind == PairKind::Anticomplete ? heur : none);
  auto comp = swap_kind(exact_anticomplete(complement(g), budget, heur.kind == PairKind::Complete ? swap_kind(heur) : none));
  bool exact = anti.exact && comp.exact;
  auto pick = better_pair(comp, anti) ? comp : anti;
  pick.exact = exact;
  pick.expansions = heur.expansions + anti.expansions + comp.expansions;
  return pick;
}

auto max_anticomplete_pair_plain(const Graph& g) -> PurePairResult {
  int n = g.n();
  if (n > 12) throw BudgetError("plain enumeration limited to n <= 12");
  PurePairResult best;
  best.a = VertexSet(n);
  best.b = VertexSet(n);
  // Each vertex goes to A, B or neither.
  long total = 1;
  for (int i = 0; i < n; ++i) total *= 3;
  for (long code = 0; code < total; ++code) {
    VertexSet a(n), b(n);
    long c = code;
    for (int v = 0; v < n; ++v, c /= 3) {
      if (c % 3 == 1) a.insert(v);
      else if (c % 3 == 2) b.insert(v);
    }
    if (a.empty() || b.empty()) continue;
    bool ok = true;
    for (int v : a)
      if (g.neighbours(v).intersects(b)) {
        ok = false;
        break;
      }
    if (!ok) continue;
    PurePairResult r;
    r.a = a;
    r.b = b;
    r.objective = std::min(a.size(), b.size());
    if (better_pair(r, best)) best = r;
  }
  best.exact = true;
  return best;
}

auto asymmetric_pair_feasible(const Graph& g, double alpha, double beta, Mode mode,
                              std::uint64_t budget) -> Status {
  ExactCaps caps;
  caps.coherence = std::max(caps.coherence, g.n());
  auto out = coherence_violation(g, {alpha, beta}, mode, budget, caps);
  if (out.status == Status::WitnessFound) return Status::WitnessFound;
  return out.status;
}

auto induced_path_oracle_within(const Graph& g, const VertexSet& within, int a, int b, int ell,
                                bool cycle, std::uint64_t limit) -> PathOracleResult {
  if (a < 0 || b < 0 || a >= g.n() || b >= g.n()) throw InputError("endpoint out of range");
  if (ell < 0) throw InputError("negative length");
  if (a == b && !cycle && ell != 0) throw InputError("equal endpoints require the cycle flag");
  if (cycle && a != b) throw InputError("cycle search needs a == b");
  PathOracleResult res;
  Budget budget{limit};
  if (!within.contains(a) || !within.contains(b)) {
    res.status = Status::Verified;
    return res;
  }
  if (!cycle && a == b) {
    res.status = Status::WitnessFound;
    res.witness = {a};
    return res;
  }
  if (cycle && ell < 3) {
    res.status = Status::Verified;
    return res;
  }
  // Path mode: seq grows to ell+1 vertices ending at b. Cycle mode: ell vertices, closing edge back to a.
  int target_len = cycle ? ell : ell + 1;
  std::vector<int> seq{a};
  VertexSet used(g.n());
  used.insert(a);
  bool found = false;
  auto rec = [&](auto&& self) -> void {
    if (found || budget.exhausted()) return;
    int len = static_cast<int>(seq.size());
    int last = seq.back();
    if (len == target_len) {
      if (cycle) found = g.adjacent(last, a);
      else found = last == b;
      return;
    }
    for (int w : g.neighbours(last) & within) {
      if (!budget.tick()) return;
      if (used.contains(w)) continue;
      int pos = len;  // index w would take
      bool ok = true;
      for (int i = 0; i + 1 < len && ok; ++i) {
        bool allowed = cycle && i == 0 && pos == target_len - 1;
        if (g.adjacent(seq[i], w) && !allowed) ok = false;
      }
      if (!ok) continue;
      if (cycle && pos == target_len - 1 && !g.adjacent(w, a)) continue;
      if (!cycle) {
        if (w == b && pos != target_len - 1) continue;
        if (w != b && pos == target_len - 1) continue;
        if (w != b && g.adjacent(w, b) && pos != target_len - 2) continue;
      }
      seq.push_back(w);
      used.insert(w);
      self(self);
      if (found) return;
      seq.pop_back();
      used.erase(w);
    }
  };
  rec(rec);
  if (found) {
    res.status = Status::WitnessFound;
    res.witness = seq;
  } else {
    res.status = budget.exhausted() ? Status::Unknown : Status::Verified;
  }
  res.expansions = budget.used;
  return res;
}

auto induced_path_oracle(const Graph& g, int a, int b, int ell, bool cycle, std::uint64_t budget)
    -> PathOracleResult {
  return induced_path_oracle_within(g, g.vertices(), a, b, ell, cycle, budget);
}

auto canonical_cycle(std::vector<int> cyc) -> std::vector<int> {
  if (cyc.empty()) return cyc;
  auto it = std::min_element(cyc.begin(), cyc.end());
  std::rotate(cyc.begin(), it, cyc.end());
  if (cyc.size() > 2 && cyc.back() < cyc[1]) std::reverse(cyc.begin() + 1, cyc.end());
  return cyc;
}

auto enumerate_induced_cycles(const Graph& g, int ell, std::uint64_t limit) -> CycleEnumeration {
  CycleEnumeration out;
  int n = g.n();
  if (ell < 3 || ell > n) return out;
  Budget budget{limit};
  std::vector<int> chosen;
  // Choose vertex subsets of size ell where every vertex has at most two chosen neighbours.
  auto check = [&]() {
    VertexSet s = VertexSet::of(n, chosen);
    for (int v : chosen)
      if (g.neighbours(v).intersection_size(s) != 2) return;
    if (!is_connected_set(g, s)) return;
    std::vector<int> cyc{chosen.front()};
    int prev = -1, cur = chosen.front();
    while (static_cast<int>(cyc.size()) < ell) {
      VertexSet nb = g.neighbours(cur) & s;
      int nxt = nb.first();
      if (nxt == prev) nxt = nb.next(nxt);
      prev = cur;
      cur = nxt;
      cyc.push_back(cur);
    }
    out.cycles.push_back(canonical_cycle(cyc));
    ++out.count;
  };
  auto rec = [&](auto&& self, int start) -> void {
    if (budget.exhausted()) return;
    if (static_cast<int>(chosen.size()) == ell) {
      check();
      return;
    }
    for (int v = start; v <= n - (ell - static_cast<int>(chosen.size())); ++v) {
      if (!budget.tick()) return;
      bool ok = true;
      VertexSet s = VertexSet::of(n, chosen);
      if (g.neighbours(v).intersection_size(s) > 2) ok = false;
      for (int u : chosen)
        if (ok && g.adjacent(u, v) && g.neighbours(u).intersection_size(s) >= 2) ok = false;
      if (!ok) continue;
      chosen.push_back(v);
      self(self, v + 1);
      chosen.pop_back();
    }
  };
  rec(rec, 0);
  out.complete = !budget.exhausted();
  std::sort(out.cycles.begin(), out.cycles.end());
  return out;
}

auto are_isomorphic(const Graph& a, const Graph& b) -> bool {
  int n = a.n();
  if (n != b.n() || a.edge_count() != b.edge_count()) return false;
  std::vector<int> da, db;
  for (int v = 0; v < n; ++v) {
    da.push_back(a.degree(v));
    db.push_back(b.degree(v));
  }
  auto sa = da, sb = db;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) return false;
  std::vector<int> map(n, -1);
  std::vector<bool> used(n, false);
  auto rec = [&](auto&& self, int i) -> bool {
    if (i == n) return true;
    for (int v = 0; v < n; ++v) {
      if (used[v] || da[i] != db[v]) continue;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j)
        if (a.adjacent(i, j) != b.adjacent(v, map[j])) ok = false;
      if (!ok) continue;
      map[i] = v;
      used[v] = true;
      if (self(self, i + 1)) return true;
      used[v] = false;
    }
    return false;
  };
  return rec(rec, 0);
}

}  // namespace puregraph
