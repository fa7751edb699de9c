// Runs the nine acceptance checks and prints one PASS/FAIL line per check.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "puregraph/constructions.hpp"
#include "puregraph/detectors.hpp"
#include "puregraph/generators.hpp"
#include "puregraph/oracles.hpp"
#include "puregraph/structures.hpp"

using namespace puregraph;

namespace {

struct Verdict {
  bool pass = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

auto seconds_since(Clock::time_point t0) -> double {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// ---------------------------------------------------------------------------
// Definition transcriptions on adjacency matrices and sorted vectors.

using Adj = std::vector<std::vector<char>>;
using Set = std::vector<int>;

auto adj_of(const Graph& g) -> Adj {
  Adj a(g.n(), std::vector<char>(g.n(), 0));
  for (auto [u, v] : g.edges()) a[u][v] = a[v][u] = 1;
  return a;
}

auto graph_of(const Adj& a) -> Graph {
  std::vector<Edge> e;
  int n = static_cast<int>(a.size());
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (a[u][v]) e.emplace_back(u, v);
  return Graph(n, e);
}

auto has(const Set& s, int v) -> bool { return std::find(s.begin(), s.end(), v) != s.end(); }

auto meet(const Set& a, const Set& b) -> bool {
  for (int v : a)
    if (has(b, v)) return true;
  return false;
}

auto no_edges(const Adj& g, const Set& a, const Set& b) -> bool {
  for (int u : a)
    for (int v : b)
      if (g[u][v]) return false;
  return true;
}

auto covers_def(const Adj& g, const Set& a, const Set& b) -> bool {
  for (int v : b) {
    bool hit = false;
    for (int u : a) hit = hit || g[u][v];
    if (!hit) return false;
  }
  return true;
}

auto without(Set s, int v) -> Set {
  s.erase(std::remove(s.begin(), s.end(), v), s.end());
  return s;
}

auto join(const Set& a, const Set& b) -> Set {
  Set s = a;
  for (int v : b)
    if (!has(s, v)) s.push_back(v);
  return s;
}

// Distances inside g[h] from a; -1 for unreachable members.
auto dist_within(const Adj& g, const Set& h, int a) -> std::vector<int> {
  std::vector<int> d(h.size(), -1);
  auto idx = [&](int v) { return static_cast<int>(std::find(h.begin(), h.end(), v) - h.begin()); };
  int s = idx(a);
  if (s == static_cast<int>(h.size())) return d;
  d[s] = 0;
  std::vector<int> queue{s};
  for (std::size_t q = 0; q < queue.size(); ++q)
    for (std::size_t j = 0; j < h.size(); ++j)
      if (d[j] < 0 && g[h[queue[q]]][h[j]]) {
        d[j] = d[queue[q]] + 1;
        queue.push_back(static_cast<int>(j));
      }
  return d;
}

struct Cov {
  int a = -1;
  Set h, b;
};

auto def_levelling(const Adj& g, const std::vector<Set>& L) -> bool {
  if (L.size() < 2) return false;
  for (std::size_t i = 0; i < L.size(); ++i)
    for (std::size_t j = i + 1; j < L.size(); ++j)
      if (meet(L[i], L[j])) return false;
  for (const auto& l : L)
    for (std::size_t i = 0; i < l.size(); ++i)
      for (std::size_t j = i + 1; j < l.size(); ++j)
        if (l[i] == l[j]) return false;
  if (L[0].size() != 1) return false;
  for (std::size_t i = 1; i < L.size(); ++i)
    if (!covers_def(g, L[i - 1], L[i])) return false;
  for (std::size_t i = 2; i < L.size(); ++i)
    for (std::size_t j = 0; j + 2 <= i; ++j)
      if (!no_edges(g, L[j], L[i])) return false;
  return true;
}

auto lev_heart(const std::vector<Set>& L) -> Set {
  Set h;
  for (std::size_t i = 0; i + 1 < L.size(); ++i) h = join(h, L[i]);
  return h;
}

auto lev_all(const std::vector<Set>& L) -> Set {
  Set h;
  for (const auto& l : L) h = join(h, l);
  return h;
}

auto def_covering(const Adj& g, const Cov& c) -> bool {
  if (meet(c.h, c.b)) return false;
  if (!has(c.h, c.a)) return false;
  if (!covers_def(g, c.h, c.b)) return false;
  auto d = dist_within(g, c.h, c.a);
  return std::all_of(d.begin(), d.end(), [](int x) { return x >= 0; });
}

auto cov_height(const Adj& g, const Cov& c) -> int {
  auto d = dist_within(g, c.h, c.a);
  return 1 + *std::max_element(d.begin(), d.end());
}

auto def_sequence(const Adj& g, const std::vector<Cov>& s) -> bool {
  for (const auto& c : s)
    if (!def_covering(g, c)) return false;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (meet(s[i].h, s[j].h) || !no_edges(g, s[i].h, s[j].h)) return false;
  return true;
}

auto same_set(Set a, Set b) -> bool {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

auto def_multicovering(const Adj& g, const std::vector<Cov>& s) -> bool {
  if (!def_sequence(g, s)) return false;
  for (const auto& c : s)
    if (!same_set(c.b, s.front().b)) return false;
  return true;
}

auto def_battery(const Adj& g, const std::vector<std::vector<Cov>>& parts, const std::vector<int>& type, double c,
                 double x) -> bool {
  std::size_t t = parts.size();
  if (type.size() != t) return false;
  std::vector<Set> vs;
  for (std::size_t i = 0; i < t; ++i) {
    if (parts[i].empty() || !def_multicovering(g, parts[i])) return false;
    if (static_cast<int>(parts[i].size()) != type[i]) return false;
    Set v;
    for (const auto& cv : parts[i]) v = join(v, join(cv.h, cv.b));
    vs.push_back(v);
  }
  for (std::size_t i = 0; i < t; ++i)
    for (std::size_t j = i + 1; j < t; ++j)
      if (meet(vs[i], vs[j])) return false;
  for (std::size_t i = 0; i < t; ++i)
    for (std::size_t j = 0; j < parts[i].size(); ++j) {
      double cap = j == 0 ? 1 / c : 1 + 1 / c;
      if (cov_height(g, parts[i][j]) > cap + 1e-9) return false;
    }
  double n = static_cast<double>(g.size());
  for (std::size_t i = 0; i < t; ++i)
    if (static_cast<double>(parts[i].front().b.size()) < x * std::pow(3.0, 1 - type[i]) * n - 1e-9) return false;
  for (std::size_t i = 0; i < t; ++i)
    for (std::size_t j = 0; j < t; ++j) {
      if (i == j) continue;
      for (int u : vs[i])
        for (int v : vs[j])
          if (g[u][v] && !(has(parts[i].front().b, u) && has(parts[j].front().b, v))) return false;
    }
  return true;
}

struct Spd {
  int a = -1;
  std::vector<Cov> m;
};

auto def_spider(const Adj& g, const Spd& s) -> bool {
  for (const auto& c : s.m)
    if (c.a != s.a || !def_covering(g, c)) return false;
  for (std::size_t i = 0; i < s.m.size(); ++i)
    for (std::size_t j = i + 1; j < s.m.size(); ++j) {
      Set hi = without(s.m[i].h, s.a), hj = without(s.m[j].h, s.a);
      if (meet(hi, hj) || !no_edges(g, hi, hj)) return false;
    }
  return true;
}

struct Lob {
  int a = -1;
  std::vector<std::vector<Set>> m;
};

auto def_lobster(const Adj& g, const Lob& l) -> bool {
  for (const auto& L : l.m)
    if (!def_levelling(g, L) || L[0][0] != l.a) return false;
  for (std::size_t i = 0; i < l.m.size(); ++i)
    for (std::size_t j = i + 1; j < l.m.size(); ++j)
      if (meet(without(lev_heart(l.m[i]), l.a), without(lev_heart(l.m[j]), l.a))) return false;
  for (std::size_t i = 0; i < l.m.size(); ++i)
    for (std::size_t j = 0; j < l.m.size(); ++j) {
      if (i == j) continue;
      const Set& pen = l.m[i][l.m[i].size() - 2];
      const Set& base = l.m[j].back();
      for (int u : without(lev_heart(l.m[i]), l.a))
        for (int v : without(lev_all(l.m[j]), l.a))
          if (g[u][v] && !((has(pen, u) && has(base, v)) || (has(pen, v) && has(base, u)))) return false;
    }
  return true;
}

auto def_spider_troupe(const Adj& g, const std::vector<Spd>& t) -> bool {
  std::vector<Set> hearts;
  for (const auto& s : t) {
    if (!def_spider(g, s)) return false;
    Set h;
    for (const auto& c : s.m) h = join(h, c.h);
    hearts.push_back(h);
  }
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = i + 1; j < t.size(); ++j)
      if (meet(hearts[i], hearts[j]) || !no_edges(g, hearts[i], hearts[j])) return false;
  return true;
}

auto def_lobster_troupe(const Adj& g, const std::vector<Lob>& t) -> bool {
  std::vector<Set> hearts;
  std::vector<const std::vector<Set>*> members;
  for (const auto& l : t) {
    if (!def_lobster(g, l)) return false;
    Set h;
    for (const auto& L : l.m) {
      h = join(h, lev_heart(L));
      members.push_back(&L);
    }
    hearts.push_back(h);
  }
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = i + 1; j < t.size(); ++j)
      if (meet(hearts[i], hearts[j]) || !no_edges(g, hearts[i], hearts[j])) return false;
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = 0; j < members.size(); ++j) {
      if (i == j) continue;
      const auto& L = *members[i];
      Set low;
      for (std::size_t s = 0; s + 2 < L.size(); ++s) low = join(low, L[s]);
      if (!no_edges(g, low, members[j]->back())) return false;
    }
  return true;
}

// ---------------------------------------------------------------------------
// Random candidate structures: random roles, an optional repair pass on the graph,
// then optional mutations of the graph or of one set.

struct Pool {
  std::vector<int> order;
  std::size_t next = 0;

  auto take(int k) -> Set {
    Set s;
    while (k-- > 0 && next < order.size()) s.push_back(order[next++]);
    return s;
  }
  auto rest() const -> Set { return Set(order.begin() + static_cast<long>(next), order.end()); }
};

auto sample_of(Rng& rng, const Set& s, double p) -> Set {
  Set out;
  for (int v : s)
    if (rng.chance(p)) out.push_back(v);
  return out;
}

auto pick(Rng& rng, const Set& s) -> int { return s[rng.below(s.size())]; }

auto link(Adj& g, int u, int v) -> void {
  if (u != v) g[u][v] = g[v][u] = 1;
}

auto cut(Adj& g, const Set& a, const Set& b) -> void {
  for (int u : a)
    for (int v : b)
      if (u != v) g[u][v] = g[v][u] = 0;
}

auto repair_levelling(Rng& rng, Adj& g, const std::vector<Set>& L) -> void {
  for (std::size_t i = 2; i < L.size(); ++i)
    for (std::size_t j = 0; j + 2 <= i; ++j) cut(g, L[j], L[i]);
  for (std::size_t i = 1; i < L.size(); ++i)
    for (int v : L[i])
      if (!L[i - 1].empty() && !covers_def(g, L[i - 1], {v})) link(g, pick(rng, L[i - 1]), v);
}

auto repair_covering(Rng& rng, Adj& g, const Cov& c) -> void {
  for (std::size_t i = 1; i < c.h.size(); ++i) {
    Set earlier(c.h.begin(), c.h.begin() + static_cast<long>(i));
    if (!covers_def(g, earlier, {c.h[i]})) link(g, pick(rng, earlier), c.h[i]);
  }
  for (int v : c.b)
    if (!c.h.empty() && !covers_def(g, c.h, {v})) link(g, pick(rng, c.h), v);
}

auto make_levelling(Rng& rng, Pool& pool, int apex) -> std::vector<Set> {
  std::vector<Set> L{{apex}};
  int k = rng.between(1, 3);
  for (int i = 1; i <= k; ++i) L.push_back(pool.take(rng.between(1, 2)));
  return L;
}

auto make_covering(Rng& rng, Pool& pool, const Set& outside, double base_p) -> Cov {
  Cov c;
  c.h = pool.take(rng.between(1, 3));
  if (c.h.empty()) c.h = {0};
  c.a = c.h[0];
  c.b = sample_of(rng, outside, base_p);
  return c;
}

auto to_vs(int n, const Set& s) -> VertexSet { return VertexSet::of(n, s); }

auto to_levelling(int n, const std::vector<Set>& L) -> Levelling {
  Levelling lv;
  for (const auto& l : L) lv.layers.push_back(to_vs(n, l));
  return lv;
}

auto to_covering(int n, const Cov& c) -> Covering { return {c.a, to_vs(n, c.h), to_vs(n, c.b)}; }

auto to_sequence(int n, const std::vector<Cov>& s) -> CoveringSequence {
  CoveringSequence seq;
  for (const auto& c : s) seq.terms.push_back(to_covering(n, c));
  return seq;
}

auto toggle(Rng& rng, Set& s, int n) -> void {
  int v = static_cast<int>(rng.below(n));
  if (has(s, v)) s = without(s, v);
  else s.push_back(v);
}

auto criterion_definitions() -> Verdict {
  auto t0 = Clock::now();
  Rng rng(20240601);
  const char* names[] = {"levelling", "covering", "sequence", "multicovering", "battery", "spider", "lobster", "troupe"};
  std::vector<long> agree(8, 0), valid(8, 0), total(8, 0);
  std::string first_mismatch;
  for (int trial = 0; trial < 1000; ++trial) {
    int n = rng.between(6, 12);
    for (int kind = 0; kind < 8; ++kind) {
      Adj g = adj_of(gnp(n, 0.1 + 0.5 * rng.uniform(), rng.next()));
      Pool pool{rng.permutation(n)};
      bool repair = rng.chance(0.7);
      std::vector<Set*> sets;
      std::function<bool(const Adj&, const Graph&)> compare;

      std::vector<Set> lev;
      Cov cov;
      std::vector<Cov> seq;
      std::vector<std::vector<Cov>> parts;
      std::vector<int> type;
      double bc = 1, bx = 0;
      Spd spd;
      Lob lob;
      std::vector<Spd> spds;
      std::vector<Lob> lobs;

      auto build_spider = [&](Pool& p) {
        Spd s;
        Set first = p.take(1);
        if (first.empty()) first = {0};
        s.a = first[0];
        int m = rng.between(1, 3);
        std::vector<Cov> ms;
        for (int i = 0; i < m; ++i) {
          Cov c;
          c.a = s.a;
          c.h = join({s.a}, p.take(rng.between(0, 2)));
          ms.push_back(c);
        }
        Set outside = p.rest();
        for (auto& c : ms) c.b = sample_of(rng, outside, 0.4);
        s.m = ms;
        return s;
      };
      auto repair_spider = [&](Adj& a, const Spd& s) {
        for (const auto& c : s.m) repair_covering(rng, a, c);
        for (std::size_t i = 0; i < s.m.size(); ++i)
          for (std::size_t j = i + 1; j < s.m.size(); ++j) cut(a, without(s.m[i].h, s.a), without(s.m[j].h, s.a));
      };
      auto build_lobster = [&](Pool& p) {
        Lob l;
        Set first = p.take(1);
        if (first.empty()) first = {0};
        l.a = first[0];
        int m = rng.between(1, 3);
        for (int i = 0; i < m; ++i) l.m.push_back(make_levelling(rng, p, l.a));
        // Sometimes members share base vertices.
        if (m > 1 && rng.chance(0.4)) {
          Set extra = p.take(2);
          for (auto& L : l.m) L.back() = join(L.back(), sample_of(rng, extra, 0.6));
        }
        return l;
      };
      auto repair_lobster = [&](Adj& a, const Lob& l) {
        for (const auto& L : l.m) repair_levelling(rng, a, L);
        for (std::size_t i = 0; i < l.m.size(); ++i)
          for (std::size_t j = 0; j < l.m.size(); ++j) {
            if (i == j) continue;
            const Set& pen = l.m[i][l.m[i].size() - 2];
            const Set& base = l.m[j].back();
            for (int u : without(lev_heart(l.m[i]), l.a))
              for (int v : without(lev_all(l.m[j]), l.a))
                if (!((has(pen, u) && has(base, v)) || (has(pen, v) && has(base, u)))) cut(a, {u}, {v});
          }
        for (const auto& L : l.m) repair_levelling(rng, a, L);
      };

      switch (kind) {
        case 0: {
          lev = make_levelling(rng, pool, pool.take(1)[0]);
          if (repair) repair_levelling(rng, g, lev);
          for (auto& l : lev) sets.push_back(&l);
          compare = [&](const Adj& a, const Graph& gg) {
            bool mine = def_levelling(a, lev);
            bool lib = static_cast<bool>(validate_levelling(gg, to_levelling(n, lev)));
            valid[0] += lib;
            return mine == lib;
          };
          break;
        }
        case 1: {
          cov = make_covering(rng, pool, {}, 0);
          cov.b = pool.take(rng.between(0, 4));
          if (repair) repair_covering(rng, g, cov);
          sets = {&cov.h, &cov.b};
          compare = [&](const Adj& a, const Graph& gg) {
            bool mine = def_covering(a, cov);
            bool lib = static_cast<bool>(validate_covering(gg, to_covering(n, cov)));
            valid[1] += lib;
            return mine == lib;
          };
          break;
        }
        case 2:
        case 3: {
          int m = rng.between(1, 3);
          for (int i = 0; i < m; ++i) seq.push_back(make_covering(rng, pool, {}, 0));
          Set outside = pool.rest();
          Set common = sample_of(rng, outside, 0.5);
          for (auto& c : seq) c.b = kind == 3 ? common : sample_of(rng, outside, 0.4);
          if (repair) {
            for (const auto& c : seq) repair_covering(rng, g, c);
            for (std::size_t i = 0; i < seq.size(); ++i)
              for (std::size_t j = i + 1; j < seq.size(); ++j) cut(g, seq[i].h, seq[j].h);
          }
          for (auto& c : seq) {
            sets.push_back(&c.h);
            sets.push_back(&c.b);
          }
          compare = [&, kind](const Adj& a, const Graph& gg) {
            bool mine = kind == 3 ? def_multicovering(a, seq) : def_sequence(a, seq);
            auto s = to_sequence(n, seq);
            bool lib = static_cast<bool>(kind == 3 ? validate_multicovering(gg, s) : validate_sequence(gg, s));
            valid[kind] += lib;
            return mine == lib;
          };
          break;
        }
        case 4: {
          bc = rng.chance(0.5) ? 1.0 : 0.5;
          bx = 0.3 * rng.uniform();
          int t = rng.between(1, 3);
          for (int i = 0; i < t; ++i) {
            std::vector<Cov> part;
            int d = rng.between(1, 2);
            for (int j = 0; j < d; ++j) {
              Cov c;
              c.h = pool.take(rng.between(1, 2));
              if (c.h.empty()) c.h = {0};
              c.a = c.h[0];
              part.push_back(c);
            }
            Set base = pool.take(rng.between(1, 3));
            for (auto& c : part) c.b = base;
            parts.push_back(part);
            type.push_back(d);
          }
          if (rng.chance(0.1)) type[0] += 1;
          if (repair) {
            std::vector<Set> vs;
            for (const auto& part : parts) {
              for (const auto& c : part) repair_covering(rng, g, c);
              for (std::size_t i = 0; i < part.size(); ++i)
                for (std::size_t j = i + 1; j < part.size(); ++j) cut(g, part[i].h, part[j].h);
              Set v;
              for (const auto& c : part) v = join(v, join(c.h, c.b));
              vs.push_back(v);
            }
            for (std::size_t i = 0; i < parts.size(); ++i)
              for (std::size_t j = 0; j < parts.size(); ++j) {
                if (i == j) continue;
                Set inner;
                for (int v : vs[i])
                  if (!has(parts[i].front().b, v)) inner.push_back(v);
                cut(g, inner, vs[j]);
              }
          }
          for (auto& part : parts)
            for (auto& c : part) {
              sets.push_back(&c.h);
              sets.push_back(&c.b);
            }
          compare = [&](const Adj& a, const Graph& gg) {
            bool mine = def_battery(a, parts, type, bc, bx);
            Battery bat;
            for (const auto& part : parts) bat.parts.push_back(to_sequence(n, part));
            bat.type = type;
            bool lib = static_cast<bool>(validate_battery(gg, bat, bc, bx));
            valid[4] += lib;
            return mine == lib;
          };
          break;
        }
        case 5: {
          spd = build_spider(pool);
          if (repair) repair_spider(g, spd);
          for (auto& c : spd.m) {
            sets.push_back(&c.h);
            sets.push_back(&c.b);
          }
          compare = [&](const Adj& a, const Graph& gg) {
            bool mine = def_spider(a, spd);
            Spider sp;
            sp.apex = spd.a;
            for (const auto& c : spd.m) sp.members.push_back(to_covering(n, c));
            bool lib = static_cast<bool>(validate_spider(gg, sp));
            valid[5] += lib;
            return mine == lib;
          };
          break;
        }
        case 6: {
          lob = build_lobster(pool);
          if (repair) repair_lobster(g, lob);
          for (auto& L : lob.m)
            for (auto& l : L) sets.push_back(&l);
          compare = [&](const Adj& a, const Graph& gg) {
            bool mine = def_lobster(a, lob);
            Lobster lb;
            lb.apex = lob.a;
            for (const auto& L : lob.m) lb.members.push_back(to_levelling(n, L));
            bool lib = static_cast<bool>(validate_lobster(gg, lb));
            valid[6] += lib;
            return mine == lib;
          };
          break;
        }
        default: {
          bool lobsters = rng.chance(0.5);
          int m = rng.between(1, 2);
          for (int i = 0; i < m; ++i) {
            if (lobsters) lobs.push_back(build_lobster(pool));
            else spds.push_back(build_spider(pool));
          }
          if (repair) {
            if (lobsters) {
              for (const auto& l : lobs) repair_lobster(g, l);
              std::vector<const std::vector<Set>*> members;
              for (const auto& l : lobs)
                for (const auto& L : l.m) members.push_back(&L);
              for (std::size_t i = 0; i < members.size(); ++i)
                for (std::size_t j = 0; j < members.size(); ++j) {
                  if (i == j) continue;
                  Set low;
                  for (std::size_t s = 0; s + 2 < members[i]->size(); ++s) low = join(low, (*members[i])[s]);
                  cut(g, low, members[j]->back());
                }
              for (std::size_t i = 0; i < lobs.size(); ++i)
                for (std::size_t j = i + 1; j < lobs.size(); ++j) {
                  Set hi, hj;
                  for (const auto& L : lobs[i].m) hi = join(hi, lev_heart(L));
                  for (const auto& L : lobs[j].m) hj = join(hj, lev_heart(L));
                  cut(g, hi, hj);
                }
              for (const auto& l : lobs)
                for (const auto& L : l.m) repair_levelling(rng, g, L);
            } else {
              for (const auto& s : spds) repair_spider(g, s);
              for (std::size_t i = 0; i < spds.size(); ++i)
                for (std::size_t j = i + 1; j < spds.size(); ++j) {
                  Set hi, hj;
                  for (const auto& c : spds[i].m) hi = join(hi, c.h);
                  for (const auto& c : spds[j].m) hj = join(hj, c.h);
                  cut(g, hi, hj);
                }
            }
          }
          for (auto& l : lobs)
            for (auto& L : l.m)
              for (auto& s : L) sets.push_back(&s);
          for (auto& s : spds)
            for (auto& c : s.m) {
              sets.push_back(&c.h);
              sets.push_back(&c.b);
            }
          compare = [&, lobsters](const Adj& a, const Graph& gg) {
            Troupe tr;
            bool mine;
            if (lobsters) {
              mine = def_lobster_troupe(a, lobs);
              tr.kind = TroupeKind::Lobsters;
              for (const auto& l : lobs) {
                Lobster lb;
                lb.apex = l.a;
                for (const auto& L : l.m) lb.members.push_back(to_levelling(n, L));
                tr.lobsters.push_back(lb);
              }
            } else {
              mine = def_spider_troupe(a, spds);
              tr.kind = TroupeKind::Spiders;
              for (const auto& s : spds) {
                Spider sp;
                sp.apex = s.a;
                for (const auto& c : s.m) sp.members.push_back(to_covering(n, c));
                tr.spiders.push_back(sp);
              }
            }
            bool lib = static_cast<bool>(validate_troupe(gg, tr));
            valid[7] += lib;
            return mine == lib;
          };
          break;
        }
      }
      if (rng.chance(0.3)) {
        int u = static_cast<int>(rng.below(n)), v = static_cast<int>(rng.below(n));
        if (u != v) g[u][v] = g[v][u] = !g[u][v];
      }
      if (rng.chance(0.25) && !sets.empty()) toggle(rng, *sets[rng.below(sets.size())], n);
      ++total[kind];
      if (compare(g, graph_of(g))) ++agree[kind];
      else if (first_mismatch.empty()) first_mismatch = std::string(names[kind]) + " at trial " + std::to_string(trial);
    }
  }
  Verdict v;
  std::ostringstream d;
  for (int k = 0; k < 8; ++k) {
    d << names[k] << " " << agree[k] << "/" << total[k] << " (" << valid[k] << " valid)";
    if (k < 7) d << ", ";
    v.pass = v.pass && agree[k] == total[k];
  }
  double secs = seconds_since(t0);
  d << "; " << secs << " s";
  if (secs >= 60) v.pass = false;
  if (!first_mismatch.empty()) d << "; first mismatch: " << first_mismatch;
  v.detail = d.str();
  return v;
}

// ---------------------------------------------------------------------------

auto criterion_repeat() -> Verdict {
  auto t0 = Clock::now();
  long checked = 0, hypothesis = 0, failures = 0;
  for (int K = 2; K <= 8; ++K) {
    long total = 1;
    for (int i = 0; i < K; ++i) total *= 4;
    std::vector<long long> v(K);
    for (long code = 0; code < total; ++code) {
      long c = code;
      for (int i = 0; i < K; ++i, c /= 4) v[i] = c % 4;
      for (int k = 1; k < K; ++k)
        for (int rho : {1, 2, 3}) {
          ++checked;
          auto got = repeat_index(rho, k, v);
          double bound = std::pow(static_cast<double>(rho), static_cast<double>(K) / k - 2 - 1.0 / k);
          bool holds = std::all_of(v.begin(), v.end(), [&](long long x) { return static_cast<double>(x) < bound; });
          if (holds) {
            ++hypothesis;
            if (!got) ++failures;
          }
          if (got) {
            int i = *got;
            if (i < 1 || i > K - k) {
              ++failures;
              continue;
            }
            for (int j = i + 1; j <= i + k; ++j)
              if (rho * v[i - 1] < v[j - 1]) ++failures;
          }
        }
    }
  }
  double secs = seconds_since(t0);
  std::ostringstream d;
  d << checked << " cases, " << hypothesis << " meeting the bound, " << failures << " failures; " << secs << " s";
  return {failures == 0 && secs < 120, d.str()};
}

// ---------------------------------------------------------------------------

auto chordless(const Graph& g, const std::vector<int>& seq, bool cycle) -> bool {
  int m = static_cast<int>(seq.size());
  std::set<int> distinct(seq.begin(), seq.end());
  if (static_cast<int>(distinct.size()) != m) return false;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      bool consecutive = j == i + 1 || (cycle && i == 0 && j == m - 1);
      if (g.adjacent(seq[i], seq[j]) != consecutive) return false;
    }
  return true;
}

auto criterion_pathfinder() -> Verdict {
  Rng rng(777);
  long gp_success = 0, gp_runs = 0, fp_paths = 0, fp_parts = 0, failures = 0;
  std::string first;
  auto fail = [&](const std::string& why) {
    ++failures;
    if (first.empty()) first = why;
  };
  for (int inst = 0; inst < 250; ++inst) {
    LevellingPairSpec spec;
    spec.s = rng.between(1, 3);
    spec.t = rng.between(1, 3);
    spec.width = rng.between(1, 3);
    spec.base1 = rng.between(3, 8);
    spec.base2 = rng.between(3, 8);
    spec.cross_density = 0.4 * rng.uniform();
    spec.matching = rng.chance(0.7);
    spec.base_density = 0.3 * rng.uniform();
    spec.shared_apex = rng.chance(0.2);
    bool relaxed = rng.chance(0.5);
    if (relaxed) {
      spec.shared_base = !spec.shared_apex && rng.chance(0.5);
      spec.penultimate_cross = 0.3 * rng.uniform();
    }
    auto lp = engineered_levelling_pair(spec, rng.next());
    int ell = rng.between(1, 2);
    auto ps = ParamSet::make(1, 0.01, 0);
    auto r = relaxed ? get_path_relaxed(lp.graph, lp.l1, lp.l2, ell, ps, Strictness::Permissive)
                     : get_path(lp.graph, lp.l1, lp.l2, ell, ps, Strictness::Permissive);
    ++gp_runs;
    if (!r.path) continue;
    ++gp_success;
    const auto& cert = *r.path;
    int want = ell + spec.s + spec.t;
    bool cycle = lp.l1.apex() == lp.l2.apex();
    VertexSet allowed = lp.l1.vertices() | lp.l2.vertices();
    int edges = static_cast<int>(cert.sequence.size()) - (cert.cycle ? 0 : 1);
    if (cert.length != want || edges != want) fail("get_path length at instance " + std::to_string(inst));
    if (cert.cycle != cycle) fail("get_path cycle flag at instance " + std::to_string(inst));
    if (!chordless(lp.graph, cert.sequence, cert.cycle)) fail("get_path chord at instance " + std::to_string(inst));
    for (int v : cert.sequence)
      if (!allowed.contains(v)) fail("get_path leaves the levellings at instance " + std::to_string(inst));
    if (cert.sequence.front() != lp.l1.apex() || (!cycle && cert.sequence.back() != lp.l2.apex()))
      fail("get_path endpoints at instance " + std::to_string(inst));
    auto oracle = induced_path_oracle_within(lp.graph, allowed, lp.l1.apex(), lp.l2.apex(), want, cycle);
    if (oracle.status != Status::WitnessFound) fail("oracle disagrees at instance " + std::to_string(inst));
  }
  for (int inst = 0; inst < 250; ++inst) {
    double c = rng.chance(0.5) ? 1.0 : 0.5;
    int ell = rng.between(1, 2);
    auto probe = ParamSet::make(c, 0.5, 1);
    int blocks_needed = static_cast<int>(probe.K(ell));
    int b0_size = rng.between(1, 4);
    std::vector<int> sizes(blocks_needed);
    int n = b0_size;
    for (auto& s : sizes) {
      s = rng.between(2, 4);
      n += s;
    }
    int min_block = *std::min_element(sizes.begin(), sizes.end());
    // Largest eps for which every block meets the size hypothesis.
    double eps = min_block / (std::pow(static_cast<double>(probe.r()), 2.0 * ell) * n) * (0.5 + 0.5 * rng.uniform());
    double p = 0.4 * rng.uniform();
    std::vector<Edge> e;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng.chance(p)) e.emplace_back(u, v);
    Graph g(n, e);
    VertexSet b0(n);
    for (int v = 0; v < b0_size; ++v) b0.insert(v);
    std::vector<VertexSet> blocks;
    int at = b0_size;
    for (int s : sizes) {
      VertexSet b(n);
      for (int i = 0; i < s; ++i) b.insert(at++);
      blocks.push_back(b);
    }
    auto ps = ParamSet::make(c, eps, n);
    auto r = find_path(g, b0, blocks, ell, ps, Strictness::Permissive);
    if (r.kind == FindPathResult::Kind::InducedPath) {
      ++fp_paths;
      bool ok = static_cast<int>(r.path.size()) == ell + 1 && static_cast<int>(r.t.size()) == ell &&
                chordless(g, r.path, false) && b0.contains(r.path[0]);
      for (int i = 0; ok && i < ell; ++i) {
        ok = r.t[i] >= 1 && r.t[i] <= blocks_needed && blocks[r.t[i] - 1].contains(r.path[i + 1]);
        if (i > 0) ok = ok && r.t[i] > r.t[i - 1];
      }
      if (!ok) fail("find_path path at instance " + std::to_string(inst));
    } else if (r.kind == FindPathResult::Kind::Partition) {
      ++fp_parts;
      double bound = std::pow(static_cast<double>(ps.r()), 2.0 * ell - 2) * eps * n;
      VertexSet uni(n);
      for (const auto& part : r.parts) uni |= part;
      if (!(uni == b0)) fail("find_path partition union at instance " + std::to_string(inst));
      for (std::size_t i = 0; i < r.parts.size(); ++i)
        for (int j = static_cast<int>(i); j <= static_cast<int>(i) + r.k && j < blocks_needed; ++j) {
          int free = 0;
          for (int v : blocks[j]) {
            bool seen = false;
            for (int u : r.parts[i]) seen = seen || g.adjacent(u, v);
            free += !seen;
          }
          if (free < bound - 1e-9) fail("find_path counting bound at instance " + std::to_string(inst));
        }
    }
  }
  std::ostringstream d;
  d << "get_path " << gp_success << "/" << gp_runs << " successes; find_path " << fp_paths << " paths, " << fp_parts
    << " partitions; " << failures << " soundness failures";
  if (!first.empty()) d << "; first: " << first;
  return {failures == 0, d.str()};
}

// ---------------------------------------------------------------------------

auto criterion_expansion() -> Verdict {
  Rng rng(4242);
  int verified = 0, attempts = 0, failures = 0, radius_checked = 0;
  std::string first;
  auto fail = [&](const std::string& why) {
    ++failures;
    if (first.empty()) first = why;
  };
  while (verified < 300 && attempts < 20000) {
    ++attempts;
    int n = rng.between(6, 18);
    double c = rng.chance(0.5) ? 1.0 : 0.5;
    auto g = gnp(n, 0.45 + 0.5 * rng.uniform(), rng.next());
    auto ps = ParamSet::make(c, 0.1, n);
    auto ex = make_expanding(g, ps, Strictness::Strict);
    if (!ex.report.all_hypotheses_hold()) continue;
    ++verified;
    std::string tag = " (n=" + std::to_string(n) + ", c=" + std::to_string(c) + ", attempt " + std::to_string(attempts) + ")";
    if (!ex.report.success) {
      fail("make_expanding failed: " + ex.report.reason + tag);
      continue;
    }
    if (ex.y.size() > std::pow(n, 1 - c) / 4 + 1e-9) fail("|Y| too large" + tag);
    auto rest = induced_subgraph(g, g.vertices() - ex.y);
    if (rest.graph.n() > 0 && is_tau_expanding(rest.graph, std::pow(n, c), Mode::Exact).status != Status::Verified)
      fail("G - Y not expanding" + tag);
    auto sr = small_rad(g, ps, Strictness::Strict);
    if (!sr.report.success) {
      fail("small_rad failed: " + sr.report.reason + tag);
      continue;
    }
    ++radius_checked;
    auto dist = distances(g, sr.u, g.vertices());
    int inner = 0, exact = 0;
    for (int v = 0; v < n; ++v) {
      if (dist[v] >= 0 && dist[v] < sr.k) ++inner;
      if (dist[v] == sr.k) ++exact;
    }
    if (!(sr.k < 1 + 1 / c - 1e-9)) fail("k too large" + tag);
    if (inner > n / 2.0 + 1e-9) fail("more than n/2 vertices below k" + tag);
    if (exact < n / 4.0 - 1e-9) fail("fewer than n/4 vertices at distance k" + tag);
    if (ex.y.contains(sr.u)) fail("u inside Y" + tag);
  }
  std::ostringstream d;
  d << verified << " hypothesis-verified graphs (" << attempts << " drawn), " << radius_checked
    << " radius checks, " << failures << " failures";
  if (!first.empty()) d << "; first: " << first;
  return {failures == 0 && verified >= 300, d.str()};
}

// ---------------------------------------------------------------------------

auto criterion_battery() -> Verdict {
  Rng rng(99);
  long merges = 0, violations = 0, worst_steps = 0;
  for (int s = 0; s < 10000; ++s) {
    int target = rng.between(2, 8);
    std::vector<int> type(rng.between(2, 12));
    for (auto& d : type) d = rng.between(1, target);
    std::size_t initial = type.size();
    long steps = 0;
    while (type.size() > 1) {
      int t = battery_merge_source(type);
      int i = t == 0 ? 1 : 0;
      auto before = battery_potential(type);
      auto next = battery_merge_type(type, t, i);
      ++merges;
      ++steps;
      if (next.size() + 1 != type.size()) ++violations;
      if (battery_potential(next) < before) ++violations;
      for (int d : next)
        if (d < 1) ++violations;
      type = next;
    }
    if (steps > static_cast<long>(initial)) ++violations;
    worst_steps = std::max(worst_steps, steps);
  }
  std::ostringstream d;
  d << "10000 sequences, " << merges << " merges, longest run " << worst_steps << " steps, " << violations
    << " violations";
  return {violations == 0, d.str()};
}

// ---------------------------------------------------------------------------

auto criterion_small_graphs() -> Verdict {
  Rng rng(31337);
  const double epsilons[] = {0.2, 0.34, 0.5};
  long samples = 0, hits = 0, sparse_seen = 0;
  for (int s = 0; s < 100000; ++s) {
    double eps = epsilons[s % 3];
    int top = std::min(30, static_cast<int>(std::floor(1 / eps + 1e-9)));
    int n = rng.between(2, top);
    auto g = gnp(n, rng.uniform(), rng.next());
    ++samples;
    if (!is_eps_sparse(g, eps).sparse) continue;
    ++sparse_seen;
    if (coherence_violation(g, {eps * n, eps * n}, Mode::Exact).status == Status::Verified) ++hits;
  }
  std::ostringstream d;
  d << samples << " samples, " << sparse_seen << " sparse, " << hits << " sparse and coherent";
  return {hits == 0, d.str()};
}

// ---------------------------------------------------------------------------

auto criterion_holes() -> Verdict {
  auto t0 = Clock::now();
  Rng rng(2718);
  long checks = 0, disagreements = 0;
  for (int s = 0; s < 500; ++s) {
    int n = rng.between(4, 10);
    auto g = gnp(n, 0.15 + 0.6 * rng.uniform(), rng.next());
    for (int ell = 4; ell <= 8; ++ell) {
      ++checks;
      auto hole = find_hole_of_length(g, ell);
      auto all = enumerate_induced_cycles(g, ell);
      bool ok = hole.found() == (all.count > 0);
      if (hole.found()) {
        auto canon = canonical_cycle(hole.sequence);
        ok = ok && std::find(all.cycles.begin(), all.cycles.end(), canon) != all.cycles.end();
      } else {
        ok = ok && hole.status == Status::Verified;
      }
      disagreements += !ok;
    }
  }
  auto pet = petersen_graph();
  bool petersen = find_hole_of_length(pet, 4).status == Status::Verified && find_hole_of_length(pet, 5).found();
  double secs = seconds_since(t0);
  std::ostringstream d;
  d << checks << " checks, " << disagreements << " disagreements, Petersen " << (petersen ? "ok" : "wrong") << "; "
    << secs << " s";
  return {disagreements == 0 && petersen && secs < 60, d.str()};
}

// ---------------------------------------------------------------------------

auto criterion_embedding() -> Verdict {
  std::vector<PatternGraph> patterns{cycle_pattern(9), theta_pattern(3, 9), cycle_pattern(11), theta_pattern(2, 11)};
  int successes = 0, refuted = 0;
  std::string first;
  for (int i = 0; i < 100; ++i) {
    const auto& p = patterns[i % patterns.size()];
    LobsterSpec spec;
    spec.noise = i % 3 == 0 ? 6 : 0;
    // Alternate groups pick heights leaving one edge between the bases; the rest keep height 4.
    if ((i / 4) % 2 == 1) spec.height = (p.min_length() - 1) / 2;
    auto inst = engineered_lobster_instance(p, spec, 1000 + i);
    auto ps = ParamSet::make(1, 1e-9, inst.graph.n());
    auto r = find_pattern(inst.graph, p, ps, Strictness::Permissive, inst.troupe);
    if (!r.report.success) continue;
    ++successes;
    bool ok = is_induced_embedding(inst.graph, r.pattern, r.embedding);
    if (ok) {
      auto sub = induced_subgraph(inst.graph, inst.graph.set_of(r.embedding));
      ok = static_cast<int>(r.embedding.size()) == r.pattern.n() && sub.graph.n() == r.pattern.n() &&
           contains_induced(sub.graph, r.pattern).found();
    }
    if (!ok) {
      ++refuted;
      if (first.empty()) first = p.name + " seed " + std::to_string(1000 + i);
    }
  }
  std::ostringstream d;
  d << successes << "/100 instances embedded, " << refuted << " refuted";
  if (!first.empty()) d << "; first: " << first;
  return {refuted == 0, d.str()};
}

// ---------------------------------------------------------------------------

auto criterion_comparability() -> Verdict {
  auto t0 = Clock::now();
  int trials = 0, met = 0;
  std::ostringstream shortfalls;
  for (int n : {40, 80, 120})
    for (int t = 0; t < 20; ++t) {
      std::uint64_t seed = 1ULL * 1000003 + static_cast<std::uint64_t>(n) * 1009 + t;
      auto g = comparability_graph(n, 2, seed);
      double bound = n / (4 * std::log2(static_cast<double>(n)));
      auto r = max_pure_pair_with_fallback(g, bound);
      ++trials;
      if (validate_pure_pair(g, r) && r.objective >= bound) {
        ++met;
      } else {
        shortfalls << " n=" << n << " trial " << t << " objective " << r.objective;
        std::fprintf(stderr, "pure pair shortfall: n=%d trial=%d objective=%d bound=%.3f\n", n, t, r.objective, bound);
      }
    }
  double secs = seconds_since(t0);
  std::ostringstream d;
  d << met << "/" << trials << " trials at or above n/(4 log2 n); " << secs << " s";
  if (met < trials) d << "; shortfalls:" << shortfalls.str();
  return {met * 100 >= 95 * trials && secs < 600, d.str()};
}

}  // namespace

int main() {
  struct Entry {
    const char* name;
    Verdict (*run)();
  };
  const Entry criteria[] = {
      {"1 definition-validator equivalence", criterion_definitions},
      {"2 repeat exhaustive", criterion_repeat},
      {"3 pathfinder soundness", criterion_pathfinder},
      {"4 expansion and radius", criterion_expansion},
      {"5 battery ledger", criterion_battery},
      {"6 small sparse coherent graphs", criterion_small_graphs},
      {"7 hole detector agreement", criterion_holes},
      {"8 end-to-end embedding", criterion_embedding},
      {"9 pure pairs in comparability graphs", criterion_comparability},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    std::printf("%s criterion %s: %s\n", v.pass ? "PASS" : "FAIL", c.name, v.detail.c_str());
    std::fflush(stdout);
    failed += !v.pass;
  }
  return failed == 0 ? 0 : 1;
}
