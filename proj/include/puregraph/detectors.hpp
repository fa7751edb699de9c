#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "puregraph/graph.hpp"

namespace puregraph {

enum class Mode { Exact, Heuristic };
enum class Status { Verified, WitnessFound, Unknown };

auto to_string(Status s) -> std::string;
auto parse_mode(const std::string& s) -> Mode;

// Budgets count search-node expansions.
constexpr std::uint64_t kDefaultBudget = 50'000'000;

// Raised when exact mode is requested on an instance above the configured cap.
class BudgetError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct SearchOutcome {
  Status status = Status::Unknown;
  std::vector<int> sequence;  // cycles, embeddings, single-vertex witnesses
  VertexSet a, b;             // set witnesses
  std::uint64_t expansions = 0;

  auto found() const -> bool { return status == Status::WitnessFound; }
};

struct CoherenceParams {
  double alpha = 0;
  double beta = 0;
};

struct SparsityResult {
  bool sparse = true;
  int witness = -1;  // a maximum-degree vertex, -1 on the empty graph
  int max_degree = 0;
};

struct ExactCaps {
  int coherence = 20;
  int expansion = 20;
};

// Smallest integer >= x, tolerant of floating noise.
auto ceil_threshold(double x) -> int;

auto is_eps_sparse(const Graph& g, double eps) -> SparsityResult;
auto is_eps_sparse_within(const Graph& g, const VertexSet& x, double eps) -> bool;

auto coherence_violation(const Graph& g, CoherenceParams p, Mode mode,
                         std::uint64_t budget = kDefaultBudget, ExactCaps caps = {}) -> SearchOutcome;

// Exact mode uses monotone pruning; plain enumerates every subset (reference path).
enum class ExpansionSearch { Pruned, Plain };
auto is_tau_expanding(const Graph& g, double tau, Mode mode, std::uint64_t budget = kDefaultBudget,
                      ExactCaps caps = {}, ExpansionSearch search = ExpansionSearch::Pruned)
    -> SearchOutcome;
// Same check on G[within].
auto is_tau_expanding_within(const Graph& g, const VertexSet& within, double tau, Mode mode,
                             std::uint64_t budget = kDefaultBudget, ExactCaps caps = {},
                             ExpansionSearch search = ExpansionSearch::Pruned) -> SearchOutcome;

auto find_hole_of_length(const Graph& g, int ell, Mode mode = Mode::Exact,
                         std::uint64_t budget = kDefaultBudget) -> SearchOutcome;
auto find_antihole_of_length(const Graph& g, int ell, Mode mode = Mode::Exact,
                             std::uint64_t budget = kDefaultBudget) -> SearchOutcome;

// nullopt means Infinite.
auto branch_length(const Graph& h) -> std::optional<int>;
auto girth(const Graph& h) -> std::optional<int>;

// sequence[i] is the image of pattern vertex i.
auto contains_induced(const Graph& g, const Graph& h, std::uint64_t budget = kDefaultBudget)
    -> SearchOutcome;
auto is_induced_embedding(const Graph& g, const Graph& h, const std::vector<int>& map) -> bool;

enum class Side { Graph, Complement };
struct SparseSide {
  VertexSet x;
  Side side = Side::Graph;
};
auto find_sparse_side(const Graph& g, double eta, std::uint64_t budget = kDefaultBudget) -> SparseSide;

}  // namespace puregraph
