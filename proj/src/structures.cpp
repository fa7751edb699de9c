#include "puregraph/structures.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include "puregraph/detectors.hpp"

namespace puregraph {

auto Report::to_string() const -> std::string {
  if (ok) return "ok";
  std::string s = "violation: " + bullet + ": " + detail;
  if (!witness.empty()) {
    s += " [witness:";
    for (int v : witness) s += " " + std::to_string(v);
    s += "]";
  }
  return s;
}

auto Levelling::heart() const -> VertexSet {
  VertexSet h(layers.front().universe());
  for (std::size_t i = 0; i + 1 < layers.size(); ++i) h |= layers[i];
  return h;
}

auto Levelling::vertices() const -> VertexSet {
  VertexSet h(layers.front().universe());
  for (const auto& l : layers) h |= l;
  return h;
}

auto Levelling::with_base(VertexSet b) const -> Levelling {
  Levelling r = *this;
  r.layers.back() = std::move(b);
  return r;
}

auto CoveringSequence::vertices() const -> VertexSet {
  VertexSet v;
  for (const auto& t : terms) v = v.universe() == 0 ? t.vertices() : (v | t.vertices());
  return v;
}

auto Spider::mass() const -> int {
  int m = -1;
  for (const auto& c : members) m = m < 0 ? c.base.size() : std::min(m, c.base.size());
  return std::max(m, 0);
}

auto Spider::heart() const -> VertexSet {
  VertexSet h;
  for (const auto& c : members) h = h.universe() == 0 ? c.heart : (h | c.heart);
  return h;
}

auto Lobster::mass() const -> int {
  int m = -1;
  for (const auto& l : members) m = m < 0 ? l.base().size() : std::min(m, l.base().size());
  return std::max(m, 0);
}

auto Lobster::heart() const -> VertexSet {
  VertexSet h;
  for (const auto& l : members) h = h.universe() == 0 ? l.heart() : (h | l.heart());
  return h;
}

namespace {

auto pad(const std::string& s) -> std::string { return s.empty() ? "-" : s; }

auto universe_ok(const Graph& g, const VertexSet& s) -> bool { return s.universe() == g.n(); }

// First edge between two sets, or {-1,-1}.
auto find_edge(const Graph& g, const VertexSet& a, const VertexSet& b) -> std::pair<int, int> {
  for (int u : a) {
    VertexSet hit = g.neighbours(u) & b;
    if (!hit.empty()) return {u, hit.first()};
  }
  return {-1, -1};
}

auto prefixed(const std::string& prefix, Report r) -> Report {
  if (!r.ok) r.bullet = prefix + r.bullet;
  return r;
}

}  // namespace

auto covering_height(const Graph& g, const Covering& cov) -> int {
  if (cov.apex < 0 || !cov.heart.contains(cov.apex)) return -1;
  auto bl = bfs_layers(g, cov.apex, cov.heart);
  if (!bl.unreached.empty()) return -1;
  return static_cast<int>(bl.layers.size());
}

auto sequence_height(const Graph& g, const CoveringSequence& seq) -> int {
  int h = 0;
  for (const auto& t : seq.terms) {
    int th = covering_height(g, t);
    if (th < 0) return -1;
    h = std::max(h, th);
  }
  return h;
}

auto levelling_as_covering(const Levelling& lv) -> Covering {
  return {lv.apex(), lv.heart(), lv.base()};
}

auto validate_levelling(const Graph& g, const Levelling& lv) -> Report {
  if (lv.layers.size() < 2) return Report::fail("well-formed", "a levelling needs layers L0..Lk with k >= 1");
  for (const auto& l : lv.layers)
    if (!universe_ok(g, l)) return Report::fail("well-formed", "layer universe does not match graph");
  VertexSet seen(g.n());
  for (std::size_t i = 0; i < lv.layers.size(); ++i) {
    VertexSet clash = seen & lv.layers[i];
    if (!clash.empty())
      return Report::fail("disjoint", "layer " + std::to_string(i) + " repeats a vertex", {clash.first()});
    seen |= lv.layers[i];
  }
  if (lv.layers[0].size() != 1)
    return Report::fail("apex", "|L0| = " + std::to_string(lv.layers[0].size()), lv.layers[0].to_vector());
  for (std::size_t i = 1; i < lv.layers.size(); ++i) {
    VertexSet reach(g.n());
    for (int v : lv.layers[i - 1]) reach |= g.neighbours(v);
    VertexSet miss = lv.layers[i] - reach;
    if (!miss.empty())
      return Report::fail("covers", "L" + std::to_string(i - 1) + " does not cover L" + std::to_string(i),
                          {miss.first()});
  }
  VertexSet below(g.n());
  for (std::size_t i = 2; i < lv.layers.size(); ++i) {
    below |= lv.layers[i - 2];
    auto [u, v] = find_edge(g, below, lv.layers[i]);
    if (u >= 0)
      return Report::fail("anticomplete", "L0..L" + std::to_string(i - 2) + " has an edge to L" + std::to_string(i),
                          {u, v});
  }
  return Report::pass();
}

auto validate_covering(const Graph& g, const Covering& cov) -> Report {
  if (!universe_ok(g, cov.heart) || !universe_ok(g, cov.base))
    return Report::fail("well-formed", "set universe does not match graph");
  VertexSet clash = cov.heart & cov.base;
  if (!clash.empty()) return Report::fail("disjoint", "heart meets base", {clash.first()});
  if (!cov.heart.contains(cov.apex)) return Report::fail("apex", "apex not in heart", {cov.apex});
  VertexSet reach(g.n());
  for (int v : cov.heart) reach |= g.neighbours(v);
  VertexSet miss = cov.base - reach;
  if (!miss.empty()) return Report::fail("covers", "base vertex without a heart neighbour", {miss.first()});
  auto bl = bfs_layers(g, cov.apex, cov.heart);
  if (!bl.unreached.empty())
    return Report::fail("connected", "heart is not connected", {bl.unreached.first()});
  return Report::pass();
}

auto validate_sequence(const Graph& g, const CoveringSequence& seq) -> Report {
  for (std::size_t i = 0; i < seq.terms.size(); ++i) {
    auto r = validate_covering(g, seq.terms[i]);
    if (!r) return prefixed("term " + std::to_string(i) + ": ", r);
  }
  for (std::size_t i = 0; i < seq.terms.size(); ++i)
    for (std::size_t j = i + 1; j < seq.terms.size(); ++j) {
      VertexSet clash = seq.terms[i].heart & seq.terms[j].heart;
      if (!clash.empty())
        return Report::fail("hearts-disjoint", "hearts " + std::to_string(i) + "," + std::to_string(j) + " meet",
                            {clash.first()});
      auto [u, v] = find_edge(g, seq.terms[i].heart, seq.terms[j].heart);
      if (u >= 0)
        return Report::fail("hearts-anticomplete",
                            "edge between hearts " + std::to_string(i) + "," + std::to_string(j), {u, v});
    }
  return Report::pass();
}

auto validate_multicovering(const Graph& g, const Multicovering& mc) -> Report {
  auto r = validate_sequence(g, mc);
  if (!r) return r;
  for (std::size_t i = 1; i < mc.terms.size(); ++i)
    if (!(mc.terms[i].base == mc.terms[0].base))
      return Report::fail("common-base", "term " + std::to_string(i) + " has a different base");
  return Report::pass();
}

auto validate_battery(const Graph& g, const Battery& bat, double c, double x) -> Report {
  int t = static_cast<int>(bat.parts.size());
  for (int i = 0; i < t; ++i) {
    auto r = validate_multicovering(g, bat.parts[i]);
    if (!r) return prefixed("part " + std::to_string(i) + ": ", r);
    if (bat.parts[i].terms.empty()) return Report::fail("length", "part " + std::to_string(i) + " is empty");
  }
  std::vector<VertexSet> vs;
  for (const auto& p : bat.parts) vs.push_back(p.vertices());
  for (int i = 0; i < t; ++i)
    for (int j = i + 1; j < t; ++j) {
      VertexSet clash = vs[i] & vs[j];
      if (!clash.empty())
        return Report::fail("disjoint", "parts " + std::to_string(i) + "," + std::to_string(j) + " meet",
                            {clash.first()});
    }
  if (!bat.type.empty() && static_cast<int>(bat.type.size()) != t)
    return Report::fail("length", "type vector has the wrong size");
  for (int i = 0; i < t; ++i) {
    int d = bat.parts[i].length();
    if (!bat.type.empty() && bat.type[i] != d)
      return Report::fail("length", "part " + std::to_string(i) + " has length " + std::to_string(d) +
                                        ", type says " + std::to_string(bat.type[i]));
  }
  double inv_c = 1.0 / c;
  for (int i = 0; i < t; ++i) {
    const auto& terms = bat.parts[i].terms;
    for (std::size_t j = 0; j < terms.size(); ++j) {
      int h = covering_height(g, terms[j]);
      double cap = j == 0 ? inv_c : 1 + inv_c;
      if (h > cap + 1e-9)
        return Report::fail("height", "part " + std::to_string(i) + " term " + std::to_string(j) + " has height " +
                                          std::to_string(h),
                            {terms[j].apex});
    }
  }
  for (int i = 0; i < t; ++i) {
    int d = bat.parts[i].length();
    double need = x * std::pow(3.0, 1 - d) * g.n();
    int have = bat.parts[i].terms.front().base.size();
    if (have < ceil_threshold(need))
      return Report::fail("mass", "part " + std::to_string(i) + " base " + std::to_string(have) + " < " +
                                      std::to_string(need));
  }
  for (int i = 0; i < t; ++i)
    for (int j = 0; j < t; ++j) {
      if (i == j) continue;
      const VertexSet& bi = bat.parts[i].terms.front().base;
      const VertexSet& bj = bat.parts[j].terms.front().base;
      auto [u, v] = find_edge(g, vs[i] - bi, vs[j]);
      if (u >= 0)
        return Report::fail("cross-edges", "edge between parts " + std::to_string(i) + "," + std::to_string(j) +
                                               " leaves the bases",
                            {u, v});
      (void)bj;
    }
  return Report::pass();
}

auto validate_spider(const Graph& g, const Spider& sp) -> Report {
  for (std::size_t i = 0; i < sp.members.size(); ++i) {
    if (sp.members[i].apex != sp.apex)
      return Report::fail("apex", "member " + std::to_string(i) + " has a different apex", {sp.members[i].apex});
    auto r = validate_covering(g, sp.members[i]);
    if (!r) return prefixed("member " + std::to_string(i) + ": ", r);
  }
  for (std::size_t i = 0; i < sp.members.size(); ++i)
    for (std::size_t j = i + 1; j < sp.members.size(); ++j) {
      VertexSet hi = sp.members[i].heart, hj = sp.members[j].heart;
      hi.erase(sp.apex);
      hj.erase(sp.apex);
      VertexSet clash = hi & hj;
      if (!clash.empty())
        return Report::fail("hearts-disjoint", "members " + std::to_string(i) + "," + std::to_string(j),
                            {clash.first()});
      auto [u, v] = find_edge(g, hi, hj);
      if (u >= 0)
        return Report::fail("hearts-anticomplete", "members " + std::to_string(i) + "," + std::to_string(j), {u, v});
    }
  return Report::pass();
}

auto validate_lobster(const Graph& g, const Lobster& lb) -> Report {
  for (std::size_t i = 0; i < lb.members.size(); ++i) {
    auto r = validate_levelling(g, lb.members[i]);
    if (!r) return prefixed("member " + std::to_string(i) + ": ", r);
    if (lb.members[i].apex() != lb.apex)
      return Report::fail("apex", "member " + std::to_string(i) + " has a different apex", {lb.members[i].apex()});
  }
  std::size_t k = lb.members.size();
  std::vector<VertexSet> hearts;
  for (const auto& m : lb.members) {
    VertexSet h = m.heart();
    h.erase(lb.apex);
    hearts.push_back(h);
  }
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      VertexSet clash = hearts[i] & hearts[j];
      if (!clash.empty())
        return Report::fail("hearts-disjoint", "members " + std::to_string(i) + "," + std::to_string(j),
                            {clash.first()});
    }
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      if (i == j) continue;
      VertexSet vj = lb.members[j].vertices();
      vj.erase(lb.apex);
      const VertexSet& pen = lb.members[i].penultimate();
      const VertexSet& base = lb.members[j].base();
      for (int u : hearts[i])
        for (int v : g.neighbours(u) & vj) {
          bool ok = (pen.contains(u) && base.contains(v)) || (pen.contains(v) && base.contains(u));
          if (!ok)
            return Report::fail("cross-edges",
                                "edge from member " + std::to_string(i) + " to member " + std::to_string(j) +
                                    " is not penultimate-to-base",
                                {u, v});
        }
    }
  return Report::pass();
}

auto validate_troupe(const Graph& g, const Troupe& tr) -> Report {
  std::vector<VertexSet> hearts;
  if (tr.kind == TroupeKind::Spiders) {
    for (std::size_t i = 0; i < tr.spiders.size(); ++i) {
      auto r = validate_spider(g, tr.spiders[i]);
      if (!r) return prefixed("spider " + std::to_string(i) + ": ", r);
      hearts.push_back(tr.spiders[i].heart());
    }
  } else {
    for (std::size_t i = 0; i < tr.lobsters.size(); ++i) {
      auto r = validate_lobster(g, tr.lobsters[i]);
      if (!r) return prefixed("lobster " + std::to_string(i) + ": ", r);
      hearts.push_back(tr.lobsters[i].heart());
    }
  }
  for (std::size_t i = 0; i < hearts.size(); ++i)
    for (std::size_t j = i + 1; j < hearts.size(); ++j) {
      if (hearts[i].universe() == 0 || hearts[j].universe() == 0) continue;
      VertexSet clash = hearts[i] & hearts[j];
      if (!clash.empty())
        return Report::fail("hearts-disjoint", "members " + std::to_string(i) + "," + std::to_string(j),
                            {clash.first()});
      auto [u, v] = find_edge(g, hearts[i], hearts[j]);
      if (u >= 0)
        return Report::fail("hearts-anticomplete", "members " + std::to_string(i) + "," + std::to_string(j), {u, v});
    }
  if (tr.kind == TroupeKind::Lobsters) {
    std::vector<const Levelling*> all;
    for (const auto& lb : tr.lobsters)
      for (const auto& m : lb.members) all.push_back(&m);
    for (std::size_t i = 0; i < all.size(); ++i) {
      const auto& L = *all[i];
      VertexSet low(g.n());
      for (int s = 0; s + 2 <= L.height(); ++s) low |= L.layers[s];
      for (std::size_t j = 0; j < all.size(); ++j) {
        if (i == j) continue;
        auto [u, v] = find_edge(g, low, all[j]->base());
        if (u >= 0)
          return Report::fail("low-levels", "edge from L0..L(k-2) of member " + std::to_string(i) +
                                                " to the base of member " + std::to_string(j),
                              {u, v});
      }
    }
  }
  return Report::pass();
}

auto levelling_vertical_path(const Graph& g, const Levelling& lv, int target) -> std::vector<int> {
  int depth = -1;
  for (int i = 0; i <= lv.height(); ++i)
    if (lv.layers[i].contains(target)) depth = i;
  if (depth < 0) throw InputError("target " + std::to_string(target) + " is not in the levelling");
  std::vector<int> path(depth + 1);
  path[depth] = target;
  for (int i = depth - 1; i >= 0; --i) {
    VertexSet up = g.neighbours(path[i + 1]) & lv.layers[i];
    if (up.empty()) throw InputError("levelling is not covering at layer " + std::to_string(i + 1));
    path[i] = up.first();
  }
  return path;
}

auto PatternGraph::segment_length(int i) const -> int {
  int np = static_cast<int>(paths.size());
  return i < np ? paths[i].length : cycles[i - np].length;
}

auto PatternGraph::segment_ends(int i) const -> std::pair<int, int> {
  int np = static_cast<int>(paths.size());
  if (i < np) return {paths[i].alpha, paths[i].beta};
  return {cycles[i - np].anchor, cycles[i - np].anchor};
}

auto PatternGraph::min_length() const -> int {
  int m = 0;
  for (int i = 0; i < segment_count(); ++i) m = (i == 0) ? segment_length(i) : std::min(m, segment_length(i));
  return m;
}

auto validate_pattern(const PatternGraph& p) -> Report {
  if (p.branch_count < 0) return Report::fail("branch", "negative branch count");
  std::set<std::pair<int, int>> direct;
  for (std::size_t i = 0; i < p.paths.size(); ++i) {
    const auto& s = p.paths[i];
    if (s.alpha < 0 || s.beta < 0 || s.alpha >= p.branch_count || s.beta >= p.branch_count)
      return Report::fail("path", "path " + std::to_string(i) + " end out of range");
    if (s.alpha == s.beta) return Report::fail("path", "path " + std::to_string(i) + " has equal ends");
    if (s.length < 1) return Report::fail("path", "path " + std::to_string(i) + " has length < 1");
    if (s.length == 1 && !direct.insert(std::minmax(s.alpha, s.beta)).second)
      return Report::fail("path", "parallel edges between branch vertices");
  }
  for (std::size_t i = 0; i < p.cycles.size(); ++i) {
    const auto& s = p.cycles[i];
    if (s.anchor < 0 || s.anchor >= p.branch_count)
      return Report::fail("cycle", "cycle " + std::to_string(i) + " anchor out of range");
    if (s.length < 3) return Report::fail("cycle", "cycle " + std::to_string(i) + " has length < 3");
  }
  return Report::pass();
}

auto realize_pattern(const PatternGraph& p) -> RealizedPattern {
  auto r = validate_pattern(p);
  if (!r) throw InputError("inconsistent pattern: " + r.to_string());
  int n = p.branch_count;
  for (const auto& s : p.paths) n += s.length - 1;
  for (const auto& s : p.cycles) n += s.length - 1;
  std::vector<Edge> edges;
  RealizedPattern out;
  int next = p.branch_count;
  auto chain = [&](int from, int to, int length, bool cycle) {
    std::vector<int> seq{from};
    for (int k = 1; k < length; ++k) seq.push_back(next++);
    if (!cycle) seq.push_back(to);
    for (std::size_t k = 0; k + 1 < seq.size(); ++k) edges.emplace_back(seq[k], seq[k + 1]);
    if (cycle) edges.emplace_back(seq.back(), seq.front());
    out.segments.push_back(seq);
  };
  for (const auto& s : p.paths) chain(s.alpha, s.beta, s.length, false);
  for (const auto& s : p.cycles) chain(s.anchor, s.anchor, s.length, true);
  out.graph = Graph(n, edges);
  return out;
}

auto extract_pattern(const Graph& h) -> PatternGraph {
  int n = h.n();
  VertexSet branch(n);
  for (int v = 0; v < n; ++v)
    if (h.degree(v) != 2) branch.insert(v);
  VertexSet seen(n);
  for (int v = 0; v < n; ++v) {
    if (seen.contains(v)) continue;
    auto bl = bfs_layers(h, v);
    VertexSet comp(n);
    for (const auto& l : bl.layers) comp |= l;
    seen |= comp;
    if (!comp.intersects(branch)) branch.insert(comp.first());
  }
  PatternGraph p;
  std::vector<int> index(n, -1);
  for (int v : branch) index[v] = p.branch_count++;
  std::set<std::pair<int, int>> used;  // directed first edges already traced
  for (int x : branch) {
    for (int w : h.neighbours(x)) {
      if (used.count({x, w})) continue;
      int prev = x, cur = w, len = 1;
      while (!branch.contains(cur)) {
        VertexSet nb = h.neighbours(cur);
        int nxt = nb.first();
        if (nxt == prev) nxt = nb.next(nxt);
        prev = cur;
        cur = nxt;
        ++len;
      }
      used.insert({x, w});
      used.insert({cur, prev});
      if (cur == x) p.cycles.push_back({index[x], len});
      else p.paths.push_back({index[x], index[cur], len});
    }
  }
  return p;
}

auto meets_length_regime(const PatternGraph& p, double c) -> bool {
  double need = 4.0 / c + 5;
  for (int i = 0; i < p.segment_count(); ++i)
    if (p.segment_length(i) < need - 1e-9) return false;
  return true;
}

// Text serialization.

namespace {

auto set_line(const VertexSet& s) -> std::string { return pad(s.to_string()) + "\n"; }

auto seq_line(const std::vector<int>& s) -> std::string {
  std::string out;
  for (int v : s) out += (out.empty() ? "" : " ") + std::to_string(v);
  return pad(out) + "\n";
}

}  // namespace

auto format_levelling(const Levelling& lv) -> std::string {
  std::string s = "levelling " + std::to_string(lv.height()) + "\n";
  for (const auto& l : lv.layers) s += set_line(l);
  return s;
}

auto format_covering(const Covering& cov) -> std::string {
  return "covering " + std::to_string(cov.apex) + "\n" + set_line(cov.heart) + set_line(cov.base);
}

auto format_sequence(const CoveringSequence& seq, bool multi) -> std::string {
  std::string s = multi ? "multicovering" : "sequence";
  s += " " + std::to_string(seq.terms.size());
  for (const auto& t : seq.terms) s += " " + std::to_string(t.apex);
  s += "\n";
  for (const auto& t : seq.terms) s += set_line(t.heart) + set_line(t.base);
  return s;
}

auto format_spider(const Spider& sp) -> std::string {
  std::string s = "spider " + std::to_string(sp.apex) + " " + std::to_string(sp.members.size()) + "\n";
  for (const auto& m : sp.members) s += set_line(m.heart) + set_line(m.base);
  return s;
}

auto format_lobster(const Lobster& lb) -> std::string {
  std::string s = "lobster " + std::to_string(lb.apex) + " " + std::to_string(lb.members.size());
  for (const auto& m : lb.members) s += " " + std::to_string(m.height());
  s += "\n";
  for (const auto& m : lb.members)
    for (const auto& l : m.layers) s += set_line(l);
  return s;
}

auto format_troupe(const Troupe& tr) -> std::string {
  std::string s = std::string("troupe ") + (tr.kind == TroupeKind::Spiders ? "spiders " : "lobsters ") +
                  std::to_string(tr.size()) + "\n";
  if (tr.kind == TroupeKind::Spiders)
    for (const auto& sp : tr.spiders) s += format_spider(sp);
  else
    for (const auto& lb : tr.lobsters) s += format_lobster(lb);
  return s;
}

namespace {

struct LineReader {
  std::istream& in;
  int n;

  auto line() -> std::string {
    std::string l;
    while (std::getline(in, l)) {
      auto pos = l.find_first_not_of(" \t\r");
      if (pos == std::string::npos || l[pos] == '#') continue;
      return l;
    }
    throw InputError("unexpected end of structure file");
  }
  auto ints(const std::string& l) -> std::vector<int> {
    std::istringstream is(l);
    std::vector<int> out;
    std::string tok;
    while (is >> tok) {
      if (tok == "-") continue;
      std::size_t used = 0;
      int v = std::stoi(tok, &used);
      if (used != tok.size()) throw InputError("bad vertex id: " + tok);
      out.push_back(v);
    }
    return out;
  }
  auto set() -> VertexSet {
    auto v = ints(line());
    VertexSet s(n);
    for (int x : v) {
      if (x < 0 || x >= n) throw InputError("vertex " + std::to_string(x) + " out of range");
      s.insert(x);
    }
    return s;
  }
  auto header() -> std::pair<std::string, std::istringstream> {
    std::string l = line();
    std::istringstream is(l);
    std::string kind;
    is >> kind;
    return {kind, std::move(is)};
  }
};

template <class T>
auto need(std::istringstream& is, const char* what) -> T {
  T v{};
  if (!(is >> v)) throw InputError(std::string("missing header field: ") + what);
  return v;
}

auto read_levelling_body(LineReader& r, int k) -> Levelling {
  if (k < 0) throw InputError("negative levelling height");
  Levelling lv;
  for (int i = 0; i <= k; ++i) lv.layers.push_back(r.set());
  return lv;
}

auto read_sequence_body(LineReader& r, std::istringstream& hs) -> CoveringSequence {
  int t = need<int>(hs, "term count");
  CoveringSequence seq;
  std::vector<int> apexes;
  for (int i = 0; i < t; ++i) apexes.push_back(need<int>(hs, "apex"));
  for (int i = 0; i < t; ++i) {
    Covering c;
    c.apex = apexes[i];
    c.heart = r.set();
    c.base = r.set();
    seq.terms.push_back(std::move(c));
  }
  return seq;
}

auto read_spider_body(LineReader& r, std::istringstream& hs) -> Spider {
  Spider sp;
  sp.apex = need<int>(hs, "apex");
  int t = need<int>(hs, "member count");
  for (int i = 0; i < t; ++i) {
    Covering c;
    c.apex = sp.apex;
    c.heart = r.set();
    c.base = r.set();
    sp.members.push_back(std::move(c));
  }
  return sp;
}

auto read_lobster_body(LineReader& r, std::istringstream& hs) -> Lobster {
  Lobster lb;
  lb.apex = need<int>(hs, "apex");
  int t = need<int>(hs, "member count");
  std::vector<int> heights;
  for (int i = 0; i < t; ++i) heights.push_back(need<int>(hs, "height"));
  for (int h : heights) lb.members.push_back(read_levelling_body(r, h));
  return lb;
}

auto expect_kind(LineReader& r, const std::string& want) -> std::istringstream {
  auto [kind, hs] = r.header();
  if (kind != want) throw InputError("expected " + want + " block, found " + kind);
  return std::move(hs);
}

}  // namespace

auto read_structure(std::istream& in, int n) -> StructureFile {
  LineReader r{in, n};
  auto [kind, hs] = r.header();
  StructureFile f;
  f.kind = kind;
  if (kind == "levelling") {
    f.structure = read_levelling_body(r, need<int>(hs, "height"));
  } else if (kind == "covering") {
    Covering c;
    c.apex = need<int>(hs, "apex");
    c.heart = r.set();
    c.base = r.set();
    f.structure = c;
  } else if (kind == "sequence" || kind == "multicovering") {
    f.structure = read_sequence_body(r, hs);
  } else if (kind == "battery") {
    f.c = need<double>(hs, "c");
    f.x = need<double>(hs, "x");
    int t = need<int>(hs, "part count");
    Battery b;
    for (int i = 0; i < t; ++i) {
      auto sub = expect_kind(r, "multicovering");
      b.parts.push_back(read_sequence_body(r, sub));
      b.type.push_back(b.parts.back().length());
    }
    f.structure = b;
  } else if (kind == "spider") {
    f.structure = read_spider_body(r, hs);
  } else if (kind == "lobster") {
    f.structure = read_lobster_body(r, hs);
  } else if (kind == "troupe") {
    auto which = need<std::string>(hs, "troupe kind");
    int m = need<int>(hs, "member count");
    Troupe t;
    if (which == "spiders") {
      t.kind = TroupeKind::Spiders;
      for (int i = 0; i < m; ++i) {
        auto sub = expect_kind(r, "spider");
        t.spiders.push_back(read_spider_body(r, sub));
      }
    } else if (which == "lobsters") {
      t.kind = TroupeKind::Lobsters;
      for (int i = 0; i < m; ++i) {
        auto sub = expect_kind(r, "lobster");
        t.lobsters.push_back(read_lobster_body(r, sub));
      }
    } else {
      throw InputError("troupe kind must be spiders or lobsters");
    }
    f.structure = t;
  } else if (kind == "path" || kind == "cycle") {
    f.sequence = r.ints(r.line());
  } else if (kind == "pair") {
    auto which = need<std::string>(hs, "pair kind");
    if (which != "complete" && which != "anticomplete") throw InputError("pair kind must be complete or anticomplete");
    f.complete_pair = which == "complete";
    f.a = r.set();
    f.b = r.set();
  } else {
    throw InputError("unknown structure kind: " + kind);
  }
  return f;
}

auto write_structure(std::ostream& out, const StructureFile& f) -> void {
  if (f.kind == "path" || f.kind == "cycle") {
    out << f.kind << "\n" << seq_line(f.sequence);
    return;
  }
  if (f.kind == "pair") {
    out << "pair " << (f.complete_pair ? "complete" : "anticomplete") << "\n" << set_line(f.a) << set_line(f.b);
    return;
  }
  std::visit(
      [&](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Levelling>) out << format_levelling(s);
        else if constexpr (std::is_same_v<T, Covering>) out << format_covering(s);
        else if constexpr (std::is_same_v<T, CoveringSequence>) out << format_sequence(s, f.kind == "multicovering");
        else if constexpr (std::is_same_v<T, Spider>) out << format_spider(s);
        else if constexpr (std::is_same_v<T, Lobster>) out << format_lobster(s);
        else if constexpr (std::is_same_v<T, Troupe>) out << format_troupe(s);
        else if constexpr (std::is_same_v<T, Battery>) {
          out << "battery " << f.c << " " << f.x << " " << s.parts.size() << "\n";
          for (const auto& p : s.parts) out << format_sequence(p, true);
        }
      },
      f.structure);
}

auto validate_structure(const Graph& g, const StructureFile& f) -> Report {
  if (f.kind == "path" || f.kind == "cycle") {
    bool cyc = f.kind == "cycle";
    if (is_induced_path(g, f.sequence, cyc)) return Report::pass();
    return Report::fail(cyc ? "induced-cycle" : "induced-path", "sequence is not chordless", f.sequence);
  }
  if (f.kind == "pair") {
    if (f.a.empty() || f.b.empty()) return Report::fail("pair", "empty side");
    if (f.a.intersects(f.b)) return Report::fail("pair", "sides meet", {(f.a & f.b).first()});
    bool ok = f.complete_pair ? is_complete_pair(g, f.a, f.b) : is_anticomplete_pair(g, f.a, f.b);
    return ok ? Report::pass() : Report::fail("pair", f.complete_pair ? "missing edge" : "edge present");
  }
  return std::visit(
      [&](const auto& s) -> Report {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Levelling>) return validate_levelling(g, s);
        else if constexpr (std::is_same_v<T, Covering>) return validate_covering(g, s);
        else if constexpr (std::is_same_v<T, CoveringSequence>)
          return f.kind == "multicovering" ? validate_multicovering(g, s) : validate_sequence(g, s);
        else if constexpr (std::is_same_v<T, Battery>) return validate_battery(g, s, f.c, f.x);
        else if constexpr (std::is_same_v<T, Spider>) return validate_spider(g, s);
        else if constexpr (std::is_same_v<T, Lobster>) return validate_lobster(g, s);
        else return validate_troupe(g, s);
      },
      f.structure);
}

}  // namespace puregraph

namespace puregraph {

auto check_levelling_pair(const Graph& g, const Levelling& l1, const Levelling& l2, bool relaxed)
    -> Report {
  if (auto r = validate_levelling(g, l1); !r) return Report::fail("first", r.to_string(), r.witness);
  if (auto r = validate_levelling(g, l2); !r) return Report::fail("second", r.to_string(), r.witness);
  int a1 = l1.apex(), a2 = l2.apex();
  VertexSet allowed(g.n());
  if (a1 == a2) allowed.insert(a1);
  if (relaxed) allowed |= l1.base() & l2.base();
  VertexSet common = l1.vertices() & l2.vertices();
  if (!common.subset_of(allowed))
    return Report::fail("overlap", "levellings share vertices beyond the permitted ones",
                        (common - allowed).to_vector());
  VertexSet h1 = l1.heart() - allowed;
  VertexSet rest = l2.vertices() - allowed;
  if (!relaxed) {
    for (int v : rest)
      if (g.neighbours(v).intersects(h1)) return Report::fail("anticomplete", "second levelling sees a heart vertex of the first", {v});
    return Report::pass();
  }
  VertexSet low = h1 - l1.penultimate();
  for (int v : rest) {
    if (g.neighbours(v).intersects(low)) return Report::fail("cross-edges", "edge from a low heart level of the first levelling", {v});
    if (!l2.base().contains(v) && g.neighbours(v).intersects(l1.penultimate() - allowed))
      return Report::fail("cross-edges", "penultimate level of the first sees the heart of the second", {v});
  }
  return Report::pass();
}

}  // namespace puregraph
