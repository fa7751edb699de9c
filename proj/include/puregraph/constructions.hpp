#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "puregraph/detectors.hpp"
#include "puregraph/graph.hpp"
#include "puregraph/structures.hpp"

namespace puregraph {

// Strict verifies every hypothesis before running; permissive runs anyway and
// reports a failure at the first dead end.
enum class Strictness { Strict, Permissive };
auto parse_strictness(const std::string& s) -> Strictness;

struct ParamSet {
  double c = 1;
  double eps = 0.01;
  double d = 0.1;
  int n = 0;

  // Throws InputError unless 1/c is a positive integer.
  static auto make(double c, double eps, int n, double d = 0.1) -> ParamSet;
  auto inv_c() const -> int;
  auto r() const -> long long { return 2 + inv_c(); }
  auto rho() const -> double;
  // r^l - 1 and r^(l-1) - 1, saturating.
  auto K(int l) const -> long long;
  auto k(int l) const -> long long;
  // r^(2i) * eps
  auto d_i(int i) const -> double;
  // (4p)^(-h) * d
  auto w(int h, int p) const -> double;
  auto with_n(int m) const -> ParamSet;
  auto with_eps(double e) const -> ParamSet { return {c, e, d, n}; }
};

struct HypothesisCheck {
  std::string name;
  bool ok = false;
  std::string detail;
};

struct ConstructionReport {
  std::string operation;
  bool success = false;
  std::string stage;
  std::string reason;
  nlohmann::json summary = nlohmann::json::object();
  std::vector<HypothesisCheck> hypotheses;
  nlohmann::json certificate;

  auto check(std::string name, bool ok, std::string detail = {}) -> bool;
  auto all_hypotheses_hold() const -> bool;
  auto fail(std::string at, std::string why) -> ConstructionReport&;
  auto to_json() const -> nlohmann::json;
};

// Least 1-based i in [1, K-k] with rho * values[i] >= values[j] for all j in (i, i+k];
// K = values.size(). Throws InputError when K <= k or k < 0.
auto repeat_index(double rho, int k, const std::vector<long long>& values) -> std::optional<int>;
// Every entry is below rho^(K/k - 2 - 1/k); vacuous for k = 0.
auto repeat_bound_holds(double rho, int k, const std::vector<long long>& values) -> bool;

struct FindPathResult {
  enum class Kind { InducedPath, Partition, Failure };
  Kind kind = Kind::Failure;
  std::vector<int> path;          // p0..p_ell
  std::vector<int> t;             // 1-based block of p_1..p_ell, strictly increasing
  std::vector<VertexSet> parts;   // C_1..C_{K-k}
  int k = 0;                      // window parameter of the top call
  ConstructionReport report;
};

// Induced path from b0 through blocks of increasing index, or a partition of b0
// whose parts miss many vertices of the blocks in their windows.
auto find_path(const Graph& g, const VertexSet& b0, const std::vector<VertexSet>& blocks, int ell,
               const ParamSet& ps, Strictness mode) -> FindPathResult;
// Counting bound of a partition: B_j minus N(C_i) has at least r^(2ell-2) eps n vertices for j in [i, i+k].
auto partition_bound_holds(const Graph& g, const std::vector<VertexSet>& blocks,
                           const std::vector<VertexSet>& parts, int k, int ell, const ParamSet& ps) -> bool;

struct PathCertificate {
  std::vector<int> sequence;  // a1 .. a2; for a cycle the apex appears once, first
  bool cycle = false;
  int length = 0;
};

struct GetPathResult {
  std::optional<PathCertificate> path;
  ConstructionReport report;
};

// Induced path of length ell + s + t between the apexes (cycle when they coincide),
// inside V(L1) and V(L2).
auto get_path(const Graph& g, const Levelling& l1, const Levelling& l2, int ell, const ParamSet& ps,
              Strictness mode) -> GetPathResult;
// Variant whose bases may overlap and whose first penultimate level may see the second base.
auto get_path_relaxed(const Graph& g, const Levelling& l1, const Levelling& l2, int ell,
                      const ParamSet& ps, Strictness mode) -> GetPathResult;

struct ExpandingResult {
  VertexSet y;
  ConstructionReport report;
};
// Y with |Y| <= n^(1-c)/4 and G - Y n^c-expanding.
auto make_expanding(const Graph& g, const ParamSet& ps, Strictness mode, ExactCaps caps = {}) -> ExpandingResult;

struct SmallRadResult {
  int u = -1;
  int k = -1;
  Levelling levelling;  // distance layers 0..k from u
  VertexSet y;
  ConstructionReport report;
};
auto small_rad(const Graph& g, const ParamSet& ps, Strictness mode, ExactCaps caps = {}) -> SmallRadResult;

struct SequenceResult {
  CoveringSequence seq;  // may be partial on failure
  ConstructionReport report;
};
auto build_covering_sequence(const Graph& g, int n_terms, const ParamSet& ps, Strictness mode,
                             ExactCaps caps = {}) -> SequenceResult;

struct RefineResult {
  enum class Kind { Multicovering, DisjointBases, Failure };
  Kind kind = Kind::Failure;
  CoveringSequence seq;
  ConstructionReport report;
};
// Splits the bases of a covering sequence of length (n-1)^2+1 into either a
// multicovering of length n or a length-n sequence with disjoint, mutually anticomplete bases.
auto refine_covering_sequence(const Graph& g, const CoveringSequence& seq, int n_target,
                              Strictness mode) -> RefineResult;
// Bases pairwise disjoint and each heart anticomplete to every other base.
auto validate_disjoint_bases(const Graph& g, const CoveringSequence& seq) -> Report;

// Type after merging part t into part i: d_i grows by one and part t is dropped.
auto battery_merge_type(const std::vector<int>& type, int t, int i) -> std::vector<int>;
auto battery_potential(const std::vector<int>& type) -> long double;
// Index of the part merged away: the lowest index of minimum length.
auto battery_merge_source(const std::vector<int>& type) -> int;

struct MulticoveringResult {
  Multicovering mc;
  std::vector<std::vector<int>> type_history;
  ConstructionReport report;
};
auto build_multicovering(const Graph& g, int n_target, const ParamSet& ps, Strictness mode,
                         ExactCaps caps = {}) -> MulticoveringResult;

struct SpiderResult {
  Spider spider;
  ConstructionReport report;
};
auto build_spider(const Graph& g, int n_target, const ParamSet& ps, Strictness mode, ExactCaps caps = {})
    -> SpiderResult;
// Apex is the lowest base vertex; it joins every heart and leaves the base.
auto spider_from_multicovering(const Multicovering& mc) -> Spider;

struct TroupeResult {
  Troupe troupe;  // may be partial on failure
  ConstructionReport report;
};
auto build_troupe(const Graph& g, int m, int n_target, const ParamSet& ps, Strictness mode,
                  ExactCaps caps = {}) -> TroupeResult;
auto spiders_to_lobsters(const Graph& g, const Troupe& spiders, const ParamSet& ps, Strictness mode)
    -> TroupeResult;

struct PatternResult {
  std::vector<int> embedding;  // image of each vertex of the realised pattern
  Graph pattern;
  ConstructionReport report;
};
// With no lobster troupe supplied one is built from g. In permissive mode, if that fails on a host with
// at most 40 vertices, an exact induced-subgraph search is tried and the summary records route "direct search".
auto find_pattern(const Graph& g, const PatternGraph& pattern, const ParamSet& ps, Strictness mode,
                  const std::optional<Troupe>& lobsters = std::nullopt, ExactCaps caps = {}) -> PatternResult;

struct ReduceResult {
  enum class Kind { Embedding, PurePair, Failure };
  Kind kind = Kind::Failure;
  VertexSet x;
  Side side = Side::Graph;
  std::vector<int> embedding;  // of h1 in g, or of the complement of h2 in g
  bool complement_pattern = false;
  VertexSet a, b;
  bool complete_pair = false;
  ConstructionReport report;
};
auto reduce_and_find(const Graph& g, const Graph& h1, const Graph& h2, const ParamSet& ps, Strictness mode,
                     std::uint64_t budget = kDefaultBudget) -> ReduceResult;

}  // namespace puregraph
