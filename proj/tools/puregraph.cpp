#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "puregraph/constructions.hpp"
#include "puregraph/detectors.hpp"
#include "puregraph/generators.hpp"
#include "puregraph/graph.hpp"
#include "puregraph/oracles.hpp"
#include "puregraph/structures.hpp"

using namespace puregraph;

namespace {

constexpr int kUsage = 1;
constexpr int kValidation = 2;
constexpr int kBudget = 3;

auto join(const std::vector<int>& v) -> std::string {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
  return s;
}

auto open_out(const std::string& path, std::ofstream& file) -> std::ostream& {
  if (path.empty() || path == "-") return std::cout;
  file.open(path);
  if (!file) throw InputError("cannot write " + path);
  return file;
}

auto pair_bound(int n) -> double { return n < 2 ? 0 : n / (4 * std::log2(static_cast<double>(n))); }

auto load_pattern(const std::string& spec) -> PatternGraph {
  std::ifstream f(spec);
  if (f) return extract_pattern(read_edge_list(f));
  return pattern_by_name(spec);
}

struct GenArgs {
  std::string family = "gnp", name = "petersen", out;
  int n = 10, k = 2;
  double p = 0.5;
  std::uint64_t seed = 1;
};

auto cmd_gen(const GenArgs& a) -> int {
  Graph g;
  if (a.family == "gnp") {
    g = gnp(a.n, a.p, a.seed);
  } else if (a.family == "comparability") {
    g = comparability_graph(a.n, a.k, a.seed);
  } else if (a.family == "fixture") {
    if (a.name == "petersen") g = petersen_graph();
    else if (a.name == "cycle") g = cycle_graph(a.n);
    else if (a.name == "path") g = path_graph(a.n);
    else if (a.name == "complete") g = complete_graph(a.n);
    else if (a.name == "empty") g = empty_graph(a.n);
    else if (a.name == "star") g = star_graph(a.n);
    else g = realize_pattern(pattern_by_name(a.name)).graph;
  } else {
    throw InputError("unknown family " + a.family);
  }
  std::ofstream file;
  write_edge_list(open_out(a.out, file), g);
  return 0;
}

auto cmd_check_structure(const std::string& graph_path, const std::string& structure_path) -> int {
  auto g = read_edge_list_file(graph_path);
  std::ifstream f(structure_path);
  if (!f) throw InputError("cannot read " + structure_path);
  auto s = read_structure(f, g.n());
  auto r = validate_structure(g, s);
  std::cout << (r ? "ok" : r.to_string()) << "\n";
  return r ? 0 : kValidation;
}

struct DetectArgs {
  std::string graph, mode = "exact";
  std::optional<int> hole, antihole;
  bool branch = false;
  std::optional<double> sparse, tau;
  std::vector<double> coherent;
  std::uint64_t budget = kDefaultBudget;
};

auto print_outcome(const SearchOutcome& o) -> void {
  std::cout << "status " << to_string(o.status) << "\n";
  if (!o.sequence.empty()) std::cout << "witness " << join(o.sequence) << "\n";
  if (o.found() && (!o.a.empty() || !o.b.empty())) {
    std::cout << "A " << join(o.a.to_vector()) << "\n";
    if (!o.b.empty()) std::cout << "B " << join(o.b.to_vector()) << "\n";
  }
  std::cout << "expansions " << o.expansions << "\n";
}

auto cmd_detect(const DetectArgs& a) -> int {
  auto g = read_edge_list_file(a.graph);
  Mode mode = parse_mode(a.mode);
  if (a.hole) {
    print_outcome(find_hole_of_length(g, *a.hole, mode, a.budget));
  } else if (a.antihole) {
    print_outcome(find_antihole_of_length(g, *a.antihole, mode, a.budget));
  } else if (a.branch) {
    auto b = branch_length(g);
    std::cout << "branch-length " << (b ? std::to_string(*b) : "infinite") << "\n";
  } else if (a.sparse) {
    auto s = is_eps_sparse(g, *a.sparse);
    std::cout << "sparse " << (s.sparse ? "yes" : "no") << "\nmax-degree " << s.max_degree << "\nvertex "
              << s.witness << "\n";
  } else if (!a.coherent.empty()) {
    if (a.coherent.size() != 2) throw InputError("--coherent takes ALPHA BETA");
    print_outcome(coherence_violation(g, {a.coherent[0], a.coherent[1]}, mode, a.budget));
  } else if (a.tau) {
    print_outcome(is_tau_expanding(g, *a.tau, mode, a.budget));
  } else {
    throw CLI::ValidationError("detect needs one query flag");
  }
  return 0;
}

struct PairArgs {
  std::string graph, mode = "heuristic";
  double eps = 0.1, c = 0.5;
  std::uint64_t budget = kDefaultBudget;
};

auto cmd_find_pure_pair(const PairArgs& a) -> int {
  auto g = read_edge_list_file(a.graph);
  auto r = max_pure_pair(g, parse_mode(a.mode), a.budget);
  double n = g.n();
  nlohmann::json j{{"kind", r.kind == PairKind::Complete ? "complete" : "anticomplete"},
                   {"a", r.a.to_vector()},
                   {"b", r.b.to_vector()},
                   {"objective", r.objective},
                   {"exact", r.exact},
                   {"valid", r.objective == 0 || validate_pure_pair(g, r)},
                   {"pair_bound", pair_bound(g.n())},
                   {"eps_n", a.eps * n},
                   {"eps_n_1mc", a.eps * std::pow(n, 1 - a.c)}};
  std::cout << j.dump(2) << "\n";
  return 0;
}

struct PipelineArgs {
  std::string graph, pattern, pattern2, mode = "permissive";
  double c = 1, eps = 0.01, d = 0.1;
  bool direct = false;
  std::uint64_t budget = kDefaultBudget;
};

auto cmd_pipeline(const PipelineArgs& a) -> int {
  auto g = read_edge_list_file(a.graph);
  auto ps = ParamSet::make(a.c, a.eps, g.n(), a.d);
  auto mode = parse_strictness(a.mode);
  auto p1 = load_pattern(a.pattern);
  ConstructionReport rep;
  if (a.direct) {
    rep = find_pattern(g, p1, ps, mode).report;
  } else {
    auto h1 = realize_pattern(p1).graph;
    auto h2 = a.pattern2.empty() ? h1 : realize_pattern(load_pattern(a.pattern2)).graph;
    rep = reduce_and_find(g, h1, h2, ps, mode, a.budget).report;
  }
  std::cout << rep.to_json().dump(2) << "\n";
  return 0;
}

struct ExperimentArgs {
  std::string family = "comparability", out;
  std::vector<int> sizes{40, 80, 120};
  int trials = 20, k = 2;
  double p = 0.5, c = 0.5, eps = 0.1;
  std::uint64_t seed = 1, budget = kDefaultBudget;
};

auto cmd_experiment(const ExperimentArgs& a) -> int {
  std::ofstream file;
  auto& out = open_out(a.out, file);
  out << "n,trial,seed,objective,pair_bound,asym_feasible,runtime_ms\n";
  int shortfalls = 0;
  for (int n : a.sizes)
    for (int t = 0; t < a.trials; ++t) {
      std::uint64_t seed = a.seed * 1'000'003ULL + static_cast<std::uint64_t>(n) * 1009ULL + t;
      Graph g = a.family == "gnp" ? gnp(n, a.p, seed) : comparability_graph(n, a.k, seed);
      auto start = std::chrono::steady_clock::now();
      double bound = pair_bound(n);
      auto r = max_pure_pair_with_fallback(g, bound, a.budget);
      auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
      auto asym = asymmetric_pair_feasible(g, a.eps * n, a.eps * std::pow(n, 1 - a.c), Mode::Heuristic, a.budget);
      std::string feasible = asym == Status::WitnessFound ? "yes" : asym == Status::Verified ? "no" : "unknown";
      if (r.objective < ceil_threshold(bound)) {
        ++shortfalls;
        std::cerr << "shortfall n=" << n << " trial=" << t << " objective=" << r.objective << "\n";
      }
      out << n << "," << t << "," << seed << "," << r.objective << "," << bound << "," << feasible << ","
          << static_cast<long long>(ms) << "\n";
    }
  if (shortfalls) std::cerr << shortfalls << " trials below the bound\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pure pairs, levellings and induced long-subdivision patterns"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* g = app.add_subcommand("gen", "write a generated graph as an edge list");
  g->add_option("--family", gen.family, "gnp, comparability or fixture")->check(CLI::IsMember({"gnp", "comparability", "fixture"}));
  g->add_option("--n", gen.n, "vertex count");
  g->add_option("--p", gen.p, "edge probability for gnp");
  g->add_option("--k", gen.k, "number of linear orders for comparability");
  g->add_option("--name", gen.name, "fixture: petersen, cycle, path, complete, empty, star or a pattern name");
  g->add_option("--seed", gen.seed);
  g->add_option("--out", gen.out, "output file (default stdout)");

  std::string cs_graph, cs_structure;
  auto* cs = app.add_subcommand("check-structure", "validate a structure file against a graph");
  cs->add_option("--graph", cs_graph)->required();
  cs->add_option("--structure", cs_structure)->required();

  DetectArgs det;
  auto* d = app.add_subcommand("detect", "run one detector on a graph");
  d->add_option("--graph", det.graph)->required();
  d->add_option("--hole", det.hole, "induced cycle of length L");
  d->add_option("--antihole", det.antihole, "complement of an induced cycle of length L");
  d->add_flag("--branch-length", det.branch);
  d->add_option("--sparse", det.sparse, "every degree below EPS n");
  d->add_option("--coherent", det.coherent, "ALPHA BETA")->expected(2);
  d->add_option("--expanding", det.tau, "TAU");
  d->add_option("--mode", det.mode)->check(CLI::IsMember({"exact", "heuristic"}));
  d->add_option("--budget", det.budget);

  PairArgs pp;
  auto* f = app.add_subcommand("find-pure-pair", "largest pure pair by the min-side objective");
  f->add_option("--graph", pp.graph)->required();
  f->add_option("--mode", pp.mode)->check(CLI::IsMember({"exact", "heuristic"}));
  f->add_option("--eps", pp.eps);
  f->add_option("--c", pp.c);
  f->add_option("--budget", pp.budget);

  PipelineArgs pl;
  auto* p = app.add_subcommand("pipeline", "reduce to a sparse side and look for the pattern or a pure pair");
  p->add_option("--graph", pl.graph)->required();
  p->add_option("--pattern", pl.pattern, "library name or edge-list file")->required();
  p->add_option("--pattern2", pl.pattern2, "second pattern, sought complemented (default: --pattern)");
  p->add_option("--c", pl.c);
  p->add_option("--eps", pl.eps);
  p->add_option("--d", pl.d);
  p->add_option("--mode", pl.mode)->check(CLI::IsMember({"strict", "permissive"}));
  p->add_flag("--direct", pl.direct, "run the pattern assembly on the whole graph");
  p->add_option("--budget", pl.budget);

  ExperimentArgs ex;
  auto* e = app.add_subcommand("experiment", "pure-pair sizes on random graphs as CSV");
  e->add_option("--family", ex.family)->check(CLI::IsMember({"gnp", "comparability"}));
  e->add_option("--sizes", ex.sizes)->delimiter(',');
  e->add_option("--trials", ex.trials);
  e->add_option("--k", ex.k);
  e->add_option("--p", ex.p);
  e->add_option("--c", ex.c);
  e->add_option("--eps", ex.eps);
  e->add_option("--seed", ex.seed);
  e->add_option("--budget", ex.budget);
  e->add_option("--out", ex.out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    int rc = app.exit(err);
    return rc == 0 ? 0 : kUsage;
  }
  try {
    if (*g) return cmd_gen(gen);
    if (*cs) return cmd_check_structure(cs_graph, cs_structure);
    if (*d) return cmd_detect(det);
    if (*f) return cmd_find_pure_pair(pp);
    if (*p) return cmd_pipeline(pl);
    if (*e) return cmd_experiment(ex);
  } catch (const CLI::ValidationError& err) {
    std::cerr << err.what() << "\n";
    return kUsage;
  } catch (const BudgetError& err) {
    std::cerr << "budget: " << err.what() << "\n";
    return kBudget;
  } catch (const InputError& err) {
    std::cerr << "input: " << err.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
