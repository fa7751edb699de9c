#pragma once

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "puregraph/graph.hpp"

namespace puregraph {

// Outcome of a validator: ok, or the first failing condition plus a witness.
struct Report {
  bool ok = true;
  std::string bullet;
  std::string detail;
  std::vector<int> witness;

  static auto pass() -> Report { return {}; }
  static auto fail(std::string bullet, std::string detail, std::vector<int> witness = {}) -> Report {
    return {false, std::move(bullet), std::move(detail), std::move(witness)};
  }
  explicit operator bool() const { return ok; }
  auto to_string() const -> std::string;
};

struct Levelling {
  std::vector<VertexSet> layers;

  auto height() const -> int { return static_cast<int>(layers.size()) - 1; }
  auto apex() const -> int { return layers.front().first(); }
  auto base() const -> const VertexSet& { return layers.back(); }
  auto penultimate() const -> const VertexSet& { return layers[layers.size() - 2]; }
  auto heart() const -> VertexSet;
  auto vertices() const -> VertexSet;
  auto with_base(VertexSet b) const -> Levelling;
};

struct Covering {
  int apex = -1;
  VertexSet heart;
  VertexSet base;

  auto vertices() const -> VertexSet { return heart | base; }
};

// Terms with pairwise disjoint, pairwise anticomplete hearts; a multicovering also shares one base.
struct CoveringSequence {
  std::vector<Covering> terms;

  auto length() const -> int { return static_cast<int>(terms.size()); }
  auto vertices() const -> VertexSet;
};
using Multicovering = CoveringSequence;

struct Battery {
  std::vector<Multicovering> parts;
  std::vector<int> type;  // declared length of each part
};

struct Spider {
  int apex = -1;
  std::vector<Covering> members;

  auto mass() const -> int;
  auto heart() const -> VertexSet;
};

struct Lobster {
  int apex = -1;
  std::vector<Levelling> members;

  auto mass() const -> int;
  auto heart() const -> VertexSet;
};

enum class TroupeKind { Spiders, Lobsters };

struct Troupe {
  TroupeKind kind = TroupeKind::Spiders;
  std::vector<Spider> spiders;
  std::vector<Lobster> lobsters;

  auto size() const -> int {
    return static_cast<int>(kind == TroupeKind::Spiders ? spiders.size() : lobsters.size());
  }
};

// 1 + eccentricity of the apex in G[heart]; -1 when the heart is disconnected or lacks the apex.
auto covering_height(const Graph& g, const Covering& cov) -> int;
auto sequence_height(const Graph& g, const CoveringSequence& seq) -> int;
auto levelling_as_covering(const Levelling& lv) -> Covering;

auto validate_levelling(const Graph& g, const Levelling& lv) -> Report;
auto validate_covering(const Graph& g, const Covering& cov) -> Report;
auto validate_sequence(const Graph& g, const CoveringSequence& seq) -> Report;
auto validate_multicovering(const Graph& g, const Multicovering& mc) -> Report;
auto validate_battery(const Graph& g, const Battery& bat, double c, double x) -> Report;
auto validate_spider(const Graph& g, const Spider& sp) -> Report;
auto validate_lobster(const Graph& g, const Lobster& lb) -> Report;
auto validate_troupe(const Graph& g, const Troupe& tr) -> Report;

// Structural hypotheses on a pair of levellings handed to the path finders. Plain:
// V(L1) and V(L2) meet at most in a shared apex and V(L2) minus a2 (and a2 unless shared)
// sees no heart vertex of L1. Relaxed: the bases may also meet, and every edge between the
// heart of L1 and V(L2) joins the penultimate level of L1 to the base of L2.
auto check_levelling_pair(const Graph& g, const Levelling& l1, const Levelling& l2, bool relaxed)
    -> Report;

// Induced apex-to-target path, one vertex per layer 0..j.
auto levelling_vertical_path(const Graph& g, const Levelling& lv, int target) -> std::vector<int>;

struct PathSpec {
  int alpha = 0;
  int beta = 0;
  int length = 1;
};

struct CycleSpec {
  int anchor = 0;
  int length = 3;
};

// Branch vertices 0..branch_count-1 joined by internally disjoint paths and anchored cycles.
struct PatternGraph {
  std::string name;
  int branch_count = 0;
  std::vector<PathSpec> paths;
  std::vector<CycleSpec> cycles;

  auto segment_count() const -> int { return static_cast<int>(paths.size() + cycles.size()); }
  auto segment_length(int i) const -> int;
  auto segment_ends(int i) const -> std::pair<int, int>;
  auto min_length() const -> int;
};

struct RealizedPattern {
  Graph graph;
  // Vertex sequence of each segment: paths first (end to end), then cycles starting at the anchor.
  std::vector<std::vector<int>> segments;
};

auto validate_pattern(const PatternGraph& p) -> Report;
auto realize_pattern(const PatternGraph& p) -> RealizedPattern;
// Branch vertices are those of degree other than two, plus the least vertex of any cycle component.
auto extract_pattern(const Graph& h) -> PatternGraph;
auto meets_length_regime(const PatternGraph& p, double c) -> bool;

// Line-oriented text format: header line, then one line per set ("-" for an empty set).
using Structure = std::variant<Levelling, Covering, CoveringSequence, Battery, Spider, Lobster, Troupe>;

struct StructureFile {
  std::string kind;  // levelling, covering, sequence, multicovering, battery, spider, lobster, troupe, path, cycle, pair
  Structure structure;
  std::vector<int> sequence;  // path / cycle kinds
  VertexSet a, b;             // pair kind
  bool complete_pair = false;
  double c = 1, x = 0;        // battery parameters
};

auto read_structure(std::istream& in, int n) -> StructureFile;
auto write_structure(std::ostream& out, const StructureFile& s) -> void;
auto validate_structure(const Graph& g, const StructureFile& s) -> Report;

auto format_levelling(const Levelling& lv) -> std::string;
auto format_covering(const Covering& cov) -> std::string;
auto format_spider(const Spider& sp) -> std::string;
auto format_lobster(const Lobster& lb) -> std::string;
auto format_troupe(const Troupe& tr) -> std::string;
auto format_sequence(const CoveringSequence& seq, bool multi) -> std::string;

}  // namespace puregraph
