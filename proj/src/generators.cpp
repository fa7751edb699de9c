#include "puregraph/generators.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace puregraph {

auto Rng::below(std::uint64_t bound) -> std::uint64_t {
  if (bound == 0) throw InputError("empty range");
  std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  while (true) {
    std::uint64_t x = eng_();
    if (x < limit) return x % bound;
  }
}

auto Rng::permutation(int n) -> std::vector<int> {
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  for (int i = n - 1; i > 0; --i) std::swap(p[i], p[below(static_cast<std::uint64_t>(i + 1))]);
  return p;
}

auto empty_graph(int n) -> Graph { return Graph(n); }

auto complete_graph(int n) -> Graph {
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return Graph(n, e);
}

auto path_graph(int vertices) -> Graph {
  std::vector<Edge> e;
  for (int v = 0; v + 1 < vertices; ++v) e.emplace_back(v, v + 1);
  return Graph(vertices, e);
}

auto cycle_graph(int n) -> Graph {
  if (n < 3) throw InputError("cycle needs at least 3 vertices");
  std::vector<Edge> e;
  for (int v = 0; v < n; ++v) e.emplace_back(v, (v + 1) % n);
  return Graph(n, e);
}

auto star_graph(int leaves) -> Graph {
  std::vector<Edge> e;
  for (int v = 1; v <= leaves; ++v) e.emplace_back(0, v);
  return Graph(leaves + 1, e);
}

auto complete_bipartite(int a, int b) -> Graph {
  std::vector<Edge> e;
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) e.emplace_back(u, a + v);
  return Graph(a + b, e);
}

auto petersen_graph() -> Graph {
  std::vector<Edge> e;
  for (int i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(i, i + 5);
    e.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return Graph(10, e);
}

auto relabel(const Graph& g, const std::vector<int>& perm) -> Graph {
  std::vector<Edge> e;
  for (auto [u, v] : g.edges()) e.emplace_back(perm[u], perm[v]);
  return Graph(g.n(), e);
}

auto gnp(int n, double p, std::uint64_t seed) -> Graph {
  if (n < 0 || p < 0 || p > 1) throw InputError("gnp needs n >= 0 and p in [0, 1]");
  Rng rng(seed);
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.chance(p)) e.emplace_back(u, v);
  return Graph(n, e);
}

auto comparability_graph(int n, int k, std::uint64_t seed) -> Graph {
  if (n < 0 || k < 1) throw InputError("comparability graph needs n >= 0 and k >= 1");
  Rng rng(seed);
  std::vector<std::vector<int>> pos(k, std::vector<int>(n));
  for (int r = 0; r < k; ++r) {
    auto order = rng.permutation(n);
    for (int i = 0; i < n; ++i) pos[r][order[i]] = i;
  }
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      bool below = true, above = true;
      for (int r = 0; r < k; ++r) {
        if (pos[r][u] < pos[r][v]) above = false;
        else below = false;
      }
      if (below || above) e.emplace_back(u, v);
    }
  return Graph(n, e);
}

namespace {

auto parse_bool(const std::string& key, const std::string& v) -> bool {
  if (v == "1" || v == "true" || v == "yes") return true;
  if (v == "0" || v == "false" || v == "no") return false;
  throw InputError("bad boolean for " + key + ": " + v);
}

auto parse_number(const std::string& key, const std::string& v) -> double {
  std::size_t used = 0;
  double x = 0;
  try {
    x = std::stod(v, &used);
  } catch (const std::exception&) {
    throw InputError("bad number for " + key + ": " + v);
  }
  if (used != v.size()) throw InputError("bad number for " + key + ": " + v);
  return x;
}

auto parse_int(const std::string& key, const std::string& v) -> int {
  double x = parse_number(key, v);
  if (x != static_cast<int>(x)) throw InputError("expected an integer for " + key);
  return static_cast<int>(x);
}

}  // namespace

auto parse_levelling_pair_spec(const std::string& text) -> LevellingPairSpec {
  LevellingPairSpec s;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
    std::istringstream words(line);
    std::string tok;
    while (words >> tok) {
      auto eq = tok.find('=');
      if (eq == std::string::npos) throw InputError("expected key=value, got " + tok);
      std::string key = tok.substr(0, eq), val = tok.substr(eq + 1);
      if (key == "s") s.s = parse_int(key, val);
      else if (key == "t") s.t = parse_int(key, val);
      else if (key == "width") s.width = parse_int(key, val);
      else if (key == "base1") s.base1 = parse_int(key, val);
      else if (key == "base2") s.base2 = parse_int(key, val);
      else if (key == "cross_density") s.cross_density = parse_number(key, val);
      else if (key == "matching") s.matching = parse_bool(key, val);
      else if (key == "base_density") s.base_density = parse_number(key, val);
      else if (key == "layer_density") s.layer_density = parse_number(key, val);
      else if (key == "intra_density") s.intra_density = parse_number(key, val);
      else if (key == "penultimate_cross") s.penultimate_cross = parse_number(key, val);
      else if (key == "shared_apex") s.shared_apex = parse_bool(key, val);
      else if (key == "shared_base") s.shared_base = parse_bool(key, val);
      else if (key == "shuffle") s.shuffle = parse_bool(key, val);
      else throw InputError("unknown key " + key);
    }
  }
  return s;
}

auto engineered_levelling_pair(const LevellingPairSpec& spec, std::uint64_t seed) -> LevellingPair {
  auto density_ok = [](double p) { return p >= 0 && p <= 1; };
  if (spec.s < 1 || spec.t < 1) throw InputError("heights must be at least 1");
  if ((spec.s > 1 || spec.t > 1) && spec.width < 1) throw InputError("inner layers need width >= 1");
  if (spec.base1 < 1 || (!spec.shared_base && spec.base2 < 1)) throw InputError("bases must be nonempty");
  for (double p : {spec.cross_density, spec.base_density, spec.layer_density, spec.intra_density, spec.penultimate_cross})
    if (!density_ok(p)) throw InputError("densities must lie in [0, 1]");
  if (spec.shared_base && spec.shared_apex && spec.s == 1 && spec.t == 1)
    throw InputError("shared apex and shared base with unit heights give a single levelling");

  Rng rng(seed);
  int next = 0;
  auto fresh = [&](int count) {
    std::vector<int> out(count);
    for (auto& v : out) v = next++;
    return out;
  };
  std::vector<std::vector<int>> lay1, lay2;
  lay1.push_back(fresh(1));
  for (int i = 1; i < spec.s; ++i) lay1.push_back(fresh(spec.width));
  lay1.push_back(fresh(spec.base1));
  lay2.push_back(spec.shared_apex ? lay1[0] : fresh(1));
  for (int i = 1; i < spec.t; ++i) lay2.push_back(fresh(spec.width));
  lay2.push_back(spec.shared_base ? lay1.back() : fresh(spec.base2));
  int n = next;

  std::vector<Edge> e;
  auto link = [&](int u, int v) { e.emplace_back(std::min(u, v), std::max(u, v)); };
  auto build = [&](const std::vector<std::vector<int>>& lay, bool skip_base) {
    int h = static_cast<int>(lay.size()) - 1;
    for (int i = 1; i <= h; ++i) {
      const auto& up = lay[i - 1];
      for (int v : lay[i]) {
        int parent = up[rng.below(up.size())];
        for (int u : up)
          if (u == parent || rng.chance(spec.layer_density)) link(u, v);
      }
      if (i == h && skip_base) continue;
      double p = i == h ? spec.base_density : spec.intra_density;
      for (std::size_t x = 0; x < lay[i].size(); ++x)
        for (std::size_t y = x + 1; y < lay[i].size(); ++y)
          if (rng.chance(p)) link(lay[i][x], lay[i][y]);
    }
  };
  build(lay1, false);
  build(lay2, spec.shared_base);
  if (!spec.shared_base) {
    const auto& b1 = lay1.back();
    const auto& b2 = lay2.back();
    for (std::size_t x = 0; x < b1.size(); ++x)
      for (std::size_t y = 0; y < b2.size(); ++y)
        if ((spec.matching && x == y) || rng.chance(spec.cross_density)) link(b1[x], b2[y]);
  }
  if (spec.penultimate_cross > 0)
    for (int u : lay1[lay1.size() - 2]) {
      // A shared apex sitting above L2's base by two or more levels must stay away from it.
      if (u == lay2[0][0] && lay2.size() > 2) continue;
      for (int v : lay2.back())
        if (u != v && rng.chance(spec.penultimate_cross)) link(u, v);
    }
  std::sort(e.begin(), e.end());
  e.erase(std::unique(e.begin(), e.end()), e.end());

  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  if (spec.shuffle) perm = rng.permutation(n);
  for (auto& [u, v] : e) {
    u = perm[u];
    v = perm[v];
    if (u > v) std::swap(u, v);
  }
  LevellingPair out{Graph(n, e), {}, {}};
  auto to_levelling = [&](const std::vector<std::vector<int>>& lay) {
    Levelling lv;
    for (const auto& layer : lay) {
      VertexSet s(n);
      for (int v : layer) s.insert(perm[v]);
      lv.layers.push_back(s);
    }
    return lv;
  };
  out.l1 = to_levelling(lay1);
  out.l2 = to_levelling(lay2);
  bool relaxed = spec.shared_base || spec.penultimate_cross > 0;
  if (auto r = check_levelling_pair(out.graph, out.l1, out.l2, relaxed); !r)
    throw InputError("engineered pair fails its hypotheses: " + r.to_string());
  return out;
}

auto path_pattern(int length) -> PatternGraph {
  return {"path-" + std::to_string(length), 2, {{0, 1, length}}, {}};
}

auto cycle_pattern(int length) -> PatternGraph {
  return {"cycle-" + std::to_string(length), 1, {}, {{0, length}}};
}

auto theta_pattern(int paths, int length) -> PatternGraph {
  PatternGraph p{"theta-" + std::to_string(length), 2, {}, {}};
  if (paths != 3) p.name = "theta" + std::to_string(paths) + "-" + std::to_string(length);
  for (int i = 0; i < paths; ++i) p.paths.push_back({0, 1, length});
  return p;
}

auto subdivided_star(int leaves, int length) -> PatternGraph {
  PatternGraph p{"star-" + std::to_string(leaves) + "-" + std::to_string(length), leaves + 1, {}, {}};
  for (int i = 1; i <= leaves; ++i) p.paths.push_back({0, i, length});
  return p;
}

auto subdivided_clique(int k, int length) -> PatternGraph {
  PatternGraph p{"clique-" + std::to_string(k) + "-" + std::to_string(length), k, {}, {}};
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) p.paths.push_back({i, j, length});
  return p;
}

auto pattern_library() -> std::map<std::string, PatternGraph> {
  std::map<std::string, PatternGraph> lib;
  auto add = [&](PatternGraph p) { lib[p.name] = p; };
  for (int l : {5, 9, 13}) {
    add(path_pattern(l));
    add(cycle_pattern(l + 1));
    add(theta_pattern(3, l));
    add(subdivided_star(3, l));
    add(subdivided_clique(4, l));
  }
  add(cycle_pattern(9));
  auto p10 = path_pattern(9);
  p10.name = "P10";
  add(p10);
  auto c9 = cycle_pattern(9);
  c9.name = "C9";
  add(c9);
  return lib;
}

auto pattern_by_name(const std::string& name) -> PatternGraph {
  if (name == "P10") return pattern_library().at("P10");
  if (name == "C9") return pattern_library().at("C9");
  std::vector<std::string> parts;
  std::istringstream in(name);
  std::string part;
  while (std::getline(in, part, '-')) parts.push_back(part);
  auto num = [&](std::size_t i) {
    if (i >= parts.size()) throw InputError("pattern name " + name + " is missing a parameter");
    return parse_int(name, parts[i]);
  };
  PatternGraph p;
  if (parts.empty()) throw InputError("empty pattern name");
  if (parts[0] == "path" && parts.size() == 2) p = path_pattern(num(1));
  else if (parts[0] == "cycle" && parts.size() == 2) p = cycle_pattern(num(1));
  else if (parts[0] == "theta" && parts.size() == 2) p = theta_pattern(3, num(1));
  else if (parts[0] == "star" && parts.size() == 3) p = subdivided_star(num(1), num(2));
  else if (parts[0] == "clique" && parts.size() == 3) p = subdivided_clique(num(1), num(2));
  else throw InputError("unknown pattern " + name);
  if (auto r = validate_pattern(p); !r) throw InputError("pattern " + name + ": " + r.to_string());
  return p;
}

auto planted_pattern_instance(const PatternGraph& p, int n, double noise, std::uint64_t seed)
    -> PlantedInstance {
  auto real = realize_pattern(p);
  int h = real.graph.n();
  if (n < h) throw InputError("host too small for the pattern");
  Rng rng(seed);
  auto perm = rng.permutation(n);
  std::vector<int> image(perm.begin(), perm.begin() + h);
  VertexSet planted(n);
  for (int v : image) planted.insert(v);
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.chance(noise) && !(planted.contains(u) && planted.contains(v))) e.emplace_back(u, v);
  for (auto [u, v] : real.graph.edges()) e.emplace_back(std::min(image[u], image[v]), std::max(image[u], image[v]));
  return {Graph(n, e), image};
}

}  // namespace puregraph

namespace puregraph {

auto engineered_lobster_instance(const PatternGraph& pattern, const LobsterSpec& spec, std::uint64_t seed)
    -> LobsterInstance {
  if (spec.height < 1) throw InputError("height must be at least 1");
  if (spec.height > 1 && spec.width < 1) throw InputError("inner layers need width >= 1");
  if (spec.base < 1) throw InputError("bases must be nonempty");
  if (auto r = validate_pattern(pattern); !r) throw InputError("inconsistent pattern: " + r.to_string());
  Rng rng(seed);
  int next = 0;
  auto fresh = [&](int count) {
    std::vector<int> out(count);
    for (auto& v : out) v = next++;
    return out;
  };
  int branches = pattern.branch_count;
  std::vector<int> degree(branches, 0);
  std::vector<std::pair<int, int>> pairs;  // member ids per segment
  std::vector<int> owner;
  std::vector<std::vector<int>> members_of(branches);
  for (int i = 0; i < pattern.segment_count(); ++i) {
    auto [a, b] = pattern.segment_ends(i);
    int ids[2];
    int k = 0;
    for (int end : {a, b}) {
      ids[k++] = static_cast<int>(owner.size());
      members_of[end].push_back(static_cast<int>(owner.size()));
      owner.push_back(end);
    }
    pairs.emplace_back(ids[0], ids[1]);
  }
  std::vector<int> apex(branches);
  for (auto& a : apex) a = fresh(1)[0];
  std::vector<std::vector<std::vector<int>>> lay(owner.size());
  for (std::size_t m = 0; m < owner.size(); ++m) {
    lay[m].push_back({apex[owner[m]]});
    for (int i = 1; i < spec.height; ++i) lay[m].push_back(fresh(spec.width));
    lay[m].push_back(fresh(spec.base));
  }
  std::vector<int> noise = fresh(spec.noise);
  int n = next;

  std::vector<Edge> e;
  auto link = [&](int u, int v) { e.emplace_back(std::min(u, v), std::max(u, v)); };
  for (const auto& lv : lay) {
    int h = static_cast<int>(lv.size()) - 1;
    for (int i = 1; i <= h; ++i) {
      const auto& up = lv[i - 1];
      for (int v : lv[i]) {
        int parent = up[rng.below(up.size())];
        for (int u : up)
          if (u == parent || rng.chance(spec.layer_density)) link(u, v);
      }
      double p = i == h ? spec.base_density : spec.intra_density;
      for (std::size_t x = 0; x < lv[i].size(); ++x)
        for (std::size_t y = x + 1; y < lv[i].size(); ++y)
          if (rng.chance(p)) link(lv[i][x], lv[i][y]);
    }
  }
  for (auto [m1, m2] : pairs) {
    const auto& b1 = lay[m1].back();
    const auto& b2 = lay[m2].back();
    for (std::size_t x = 0; x < b1.size(); ++x)
      for (std::size_t y = 0; y < b2.size(); ++y)
        if ((spec.matching && x == y) || rng.chance(spec.cross_density)) link(b1[x], b2[y]);
  }
  std::vector<int> all_bases;
  for (const auto& lv : lay) all_bases.insert(all_bases.end(), lv.back().begin(), lv.back().end());
  for (std::size_t x = 0; x < all_bases.size(); ++x)
    for (std::size_t y = x + 1; y < all_bases.size(); ++y)
      if (rng.chance(spec.base_noise)) link(all_bases[x], all_bases[y]);
  for (std::size_t x = 0; x < noise.size(); ++x) {
    for (std::size_t y = x + 1; y < noise.size(); ++y)
      if (rng.chance(spec.noise_density)) link(noise[x], noise[y]);
    for (int b : all_bases)
      if (rng.chance(spec.noise_density)) link(noise[x], b);
  }
  std::sort(e.begin(), e.end());
  e.erase(std::unique(e.begin(), e.end()), e.end());

  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  if (spec.shuffle) perm = rng.permutation(n);
  for (auto& [u, v] : e) {
    u = perm[u];
    v = perm[v];
    if (u > v) std::swap(u, v);
  }
  LobsterInstance out{Graph(n, e), {}};
  out.troupe.kind = TroupeKind::Lobsters;
  for (int b = 0; b < branches; ++b) {
    Lobster lb{perm[apex[b]], {}};
    for (int m : members_of[b]) {
      Levelling lv;
      for (const auto& layer : lay[m]) {
        VertexSet s(n);
        for (int v : layer) s.insert(perm[v]);
        lv.layers.push_back(s);
      }
      lb.members.push_back(lv);
    }
    out.troupe.lobsters.push_back(lb);
  }
  if (auto r = validate_troupe(out.graph, out.troupe); !r)
    throw InputError("engineered troupe invalid: " + r.to_string());
  return out;
}

}  // namespace puregraph
