#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "puregraph/detectors.hpp"
#include "puregraph/graph.hpp"

namespace puregraph {

enum class PairKind { Complete, Anticomplete };

struct PurePairResult {
  VertexSet a, b;
  PairKind kind = PairKind::Anticomplete;
  int objective = 0;  // min(|A|, |B|); 0 means no pair
  bool exact = false;  // optimality proven
  std::uint64_t expansions = 0;
};

// Ranking: larger min, then larger |A|+|B|, then lexicographically smaller (A, B).
auto better_pair(const PurePairResult& x, const PurePairResult& y) -> bool;
auto validate_pure_pair(const Graph& g, const PurePairResult& r) -> bool;

struct OracleCaps {
  int pure_pair = 24;
};

// Exact mode above the cap throws BudgetError; an exhausted budget returns exact=false.
auto max_anticomplete_pair(const Graph& g, Mode mode, std::uint64_t budget = kDefaultBudget,
                           OracleCaps caps = {}) -> PurePairResult;
auto max_pure_pair(const Graph& g, Mode mode, std::uint64_t budget = kDefaultBudget,
                   OracleCaps caps = {}) -> PurePairResult;
// Heuristic first; below the target, exact branch and bound on both sides with no size cap.
auto max_pure_pair_with_fallback(const Graph& g, double target, std::uint64_t budget = kDefaultBudget)
    -> PurePairResult;
// Plain enumeration over all assignments; n <= 12.
auto max_anticomplete_pair_plain(const Graph& g) -> PurePairResult;

// Asymmetric query: is there an anticomplete pair with |A| >= alpha and |B| >= beta?
auto asymmetric_pair_feasible(const Graph& g, double alpha, double beta, Mode mode,
                              std::uint64_t budget = kDefaultBudget) -> Status;

struct PathOracleResult {
  Status status = Status::Unknown;
  std::vector<int> witness;
  std::uint64_t expansions = 0;
};

// Induced a-b path of exactly ell edges; with cycle set and a == b, an induced cycle of length ell through a.
auto induced_path_oracle(const Graph& g, int a, int b, int ell, bool cycle = false,
                         std::uint64_t budget = kDefaultBudget) -> PathOracleResult;
// Same search with vertices confined to `within`.
auto induced_path_oracle_within(const Graph& g, const VertexSet& within, int a, int b, int ell,
                                bool cycle = false, std::uint64_t budget = kDefaultBudget)
    -> PathOracleResult;

struct CycleEnumeration {
  long count = 0;
  std::vector<std::vector<int>> cycles;  // canonical: least vertex first, smaller neighbour second
  bool complete = true;
};
auto enumerate_induced_cycles(const Graph& g, int ell, std::uint64_t budget = kDefaultBudget)
    -> CycleEnumeration;
auto canonical_cycle(std::vector<int> cyc) -> std::vector<int>;

auto are_isomorphic(const Graph& a, const Graph& b) -> bool;

}  // namespace puregraph
