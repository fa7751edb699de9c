#include <cmath>

#include <gtest/gtest.h>

#include "puregraph/constructions.hpp"
#include "puregraph/generators.hpp"
#include "puregraph/oracles.hpp"

using namespace puregraph;

namespace {

auto random_values(Rng& rng, int len, int max) -> std::vector<long long> {
  std::vector<long long> v(len);
  for (auto& x : v) x = rng.between(0, max);
  return v;
}

// Straight scan for an index, written independently of the library.
auto scan_repeat(double rho, int k, const std::vector<long long>& v) -> int {
  int K = static_cast<int>(v.size());
  for (int i = 1; i <= K - k; ++i) {
    bool ok = true;
    for (int j = i + 1; j <= i + k; ++j)
      if (rho * v[i - 1] < v[j - 1]) ok = false;
    if (ok) return i;
  }
  return 0;
}

}  // namespace

TEST(RepeatProperty, ExhaustiveSmallSequences) {
  // Every sequence with K <= 6 and entries <= 3.
  for (int rho : {1, 2, 3})
    for (int K = 1; K <= 6; ++K) {
      int total = 1;
      for (int i = 0; i < K; ++i) total *= 4;
      for (int code = 0; code < total; ++code) {
        std::vector<long long> v(K);
        for (int i = 0, c = code; i < K; ++i, c /= 4) v[i] = c % 4;
        for (int k = 0; k < K; ++k) {
          auto got = repeat_index(rho, k, v);
          int want = scan_repeat(rho, k, v);
          ASSERT_EQ(got.value_or(0), want);
          if (repeat_bound_holds(rho, k, v)) {
            ASSERT_TRUE(got.has_value());
          }
        }
      }
    }
}

TEST(RepeatProperty, RandomLongerSequences) {
  Rng rng(17);
  for (int trial = 0; trial < 2000; ++trial) {
    int K = rng.between(2, 8);
    int k = rng.between(0, K - 1);
    double rho = rng.between(1, 3);
    auto v = random_values(rng, K, 3);
    EXPECT_EQ(repeat_index(rho, k, v).value_or(0), scan_repeat(rho, k, v));
  }
}

TEST(BatteryProperty, PotentialNeverDrops) {
  Rng rng(5);
  for (int trial = 0; trial < 2000; ++trial) {
    std::vector<int> type(rng.between(2, 8));
    for (auto& d : type) d = rng.between(1, 6);
    while (type.size() > 1) {
      int t = battery_merge_source(type);
      int i = t == 0 ? 1 : 0;
      auto before = battery_potential(type);
      auto next = battery_merge_type(type, t, i);
      ASSERT_EQ(next.size() + 1, type.size());
      ASSERT_GE(battery_potential(next), before);
      type = next;
    }
  }
}

TEST(GetPathProperty, LengthAndCycleFlag) {
  Rng rng(23);
  int successes = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    LevellingPairSpec spec;
    spec.s = rng.between(1, 3);
    spec.t = rng.between(1, 3);
    spec.shared_apex = rng.chance(0.3);
    spec.base1 = rng.between(4, 8);
    spec.base2 = rng.between(4, 8);
    auto lp = engineered_levelling_pair(spec, seed);
    auto ps = ParamSet::make(1, 0.01, 0);
    auto r = get_path(lp.graph, lp.l1, lp.l2, 1, ps, Strictness::Permissive);
    if (!r.path) continue;
    ++successes;
    const auto& cert = *r.path;
    ASSERT_EQ(cert.length, 1 + spec.s + spec.t);
    ASSERT_EQ(cert.cycle, lp.l1.apex() == lp.l2.apex());
    ASSERT_TRUE(is_induced_path(lp.graph, cert.sequence, cert.cycle));
    int edges = static_cast<int>(cert.sequence.size()) - (cert.cycle ? 0 : 1);
    ASSERT_EQ(edges, cert.length);
  }
  EXPECT_GT(successes, 100);
}

TEST(GetPathProperty, RelaxedOutputsSound) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    LevellingPairSpec spec;
    spec.s = 1 + static_cast<int>(seed % 3);
    spec.t = 1 + static_cast<int>((seed / 3) % 2);
    spec.shared_base = seed % 2 == 0;
    spec.penultimate_cross = 0.2;
    auto lp = engineered_levelling_pair(spec, seed);
    auto r = get_path_relaxed(lp.graph, lp.l1, lp.l2, 1, ParamSet::make(1, 0.01, 0), Strictness::Permissive);
    if (!r.path) continue;
    ASSERT_EQ(r.path->length, 1 + spec.s + spec.t);
    ASSERT_TRUE(is_induced_path(lp.graph, r.path->sequence, r.path->cycle));
  }
}

TEST(DetectorProperty, HoleSearchMatchesEnumeration) {
  Rng rng(3);
  for (int trial = 0; trial < 150; ++trial) {
    int n = rng.between(5, 10);
    auto g = gnp(n, 0.35, rng.next());
    int ell = rng.between(4, n);
    auto hole = find_hole_of_length(g, ell);
    bool any = enumerate_induced_cycles(g, ell).count > 0;
    ASSERT_EQ(hole.found(), any);
    if (hole.found()) {
      ASSERT_TRUE(is_induced_path(g, hole.sequence, true));
    }
  }
}

TEST(DetectorProperty, WitnessesRevalidate) {
  Rng rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    auto g = gnp(rng.between(4, 12), 0.3, rng.next());
    auto coh = coherence_violation(g, {2, 2}, Mode::Exact);
    if (coh.found()) {
      ASSERT_TRUE(is_anticomplete_pair(g, coh.a, coh.b));
      ASSERT_GE(coh.a.size(), 2);
      ASSERT_GE(coh.b.size(), 2);
    }
    double tau = 1.5;
    auto ex = is_tau_expanding(g, tau, Mode::Exact);
    if (ex.found()) {
      double bound = std::min(tau * ex.a.size(), g.n() / 2.0);
      ASSERT_LT(closed_nbhd(g, ex.a).size(), bound);
    }
  }
}

TEST(OracleProperty, PurePairsValidate) {
  Rng rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    auto g = gnp(rng.between(2, 14), rng.uniform(), rng.next());
    auto r = max_pure_pair(g, Mode::Exact);
    ASSERT_TRUE(r.objective == 0 || validate_pure_pair(g, r));
  }
}

TEST(PatternProperty, RealisationRoundTrips) {
  Rng rng(4);
  for (int trial = 0; trial < 50; ++trial) {
    int len = rng.between(3, 6);
    std::vector<PatternGraph> ps{cycle_pattern(len), theta_pattern(rng.between(2, 4), len),
                                 subdivided_star(rng.between(3, 5), len), subdivided_clique(4, len)};
    for (const auto& p : ps) {
      auto r = realize_pattern(p);
      auto q = extract_pattern(r.graph);
      ASSERT_TRUE(are_isomorphic(realize_pattern(q).graph, r.graph)) << p.name;
    }
  }
}
