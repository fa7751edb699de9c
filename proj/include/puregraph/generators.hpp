#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "puregraph/graph.hpp"
#include "puregraph/structures.hpp"

namespace puregraph {

// std::mt19937_64 with distribution code written out here, so a seed gives the
// same stream on every standard library.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  auto next() -> std::uint64_t { return eng_(); }
  // Uniform in [0, 1) from the top 53 bits.
  auto uniform() -> double { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }
  auto chance(double p) -> bool { return uniform() < p; }
  // Uniform in [0, bound) by rejection.
  auto below(std::uint64_t bound) -> std::uint64_t;
  auto between(int lo, int hi) -> int { return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1))); }
  auto permutation(int n) -> std::vector<int>;

private:
  std::mt19937_64 eng_;
};

auto empty_graph(int n) -> Graph;
auto complete_graph(int n) -> Graph;
auto path_graph(int vertices) -> Graph;
auto cycle_graph(int n) -> Graph;
auto star_graph(int leaves) -> Graph;
auto complete_bipartite(int a, int b) -> Graph;
auto petersen_graph() -> Graph;
auto relabel(const Graph& g, const std::vector<int>& perm) -> Graph;

auto gnp(int n, double p, std::uint64_t seed) -> Graph;
// Comparable pairs of the intersection of k random linear orders.
auto comparability_graph(int n, int k, std::uint64_t seed) -> Graph;

struct LevellingPairSpec {
  int s = 1, t = 1;          // heights
  int width = 2;             // size of each inner layer
  int base1 = 5, base2 = 5;
  double cross_density = 0.3;      // base1-base2 edges
  bool matching = true;            // also add a matching between the bases
  double base_density = 0.0;       // edges inside each base
  double layer_density = 0.3;      // extra edges between consecutive layers
  double intra_density = 0.1;      // edges inside inner layers
  double penultimate_cross = 0.0;  // L1 penultimate to base2 edges (relaxed hypotheses only)
  bool shared_apex = false;
  bool shared_base = false;        // relaxed hypotheses only
  bool shuffle = true;
};

struct LevellingPair {
  Graph graph;
  Levelling l1, l2;
};

auto parse_levelling_pair_spec(const std::string& text) -> LevellingPairSpec;
auto engineered_levelling_pair(const LevellingPairSpec& spec, std::uint64_t seed) -> LevellingPair;

// Catalogue: path-L, cycle-L, theta-L, star-K-L, clique-K-L, plus P10 and C9.
auto pattern_library() -> std::map<std::string, PatternGraph>;
auto pattern_by_name(const std::string& name) -> PatternGraph;
auto subdivided_clique(int k, int length) -> PatternGraph;
auto subdivided_star(int leaves, int length) -> PatternGraph;
auto theta_pattern(int paths, int length) -> PatternGraph;
auto cycle_pattern(int length) -> PatternGraph;
auto path_pattern(int length) -> PatternGraph;

// Plants a realisation of the pattern on random vertices of a sparse random graph.
struct PlantedInstance {
  Graph graph;
  std::vector<int> embedding;  // image of each pattern vertex
};
auto planted_pattern_instance(const PatternGraph& p, int n, double noise, std::uint64_t seed) -> PlantedInstance;

// Troupe of lobsters laid out for a pattern: one lobster per branch vertex, one member
// per segment end, and base-to-base edges between the two members of each segment.
struct LobsterSpec {
  int height = 4;
  int width = 2;
  int base = 6;
  double layer_density = 0.3;
  double intra_density = 0.1;
  double base_density = 0.0;
  double cross_density = 0.2;  // between the bases of paired members
  bool matching = true;
  double base_noise = 0.0;     // between any two bases
  int noise = 0;               // extra vertices attached to bases and each other
  double noise_density = 0.05;
  bool shuffle = true;
};

struct LobsterInstance {
  Graph graph;
  Troupe troupe;
};

auto engineered_lobster_instance(const PatternGraph& pattern, const LobsterSpec& spec, std::uint64_t seed)
    -> LobsterInstance;

}  // namespace puregraph
