#include <omp.h>

#include <numeric>
#include <random>

#include "doctest.h"
#include "oracle.hpp"
#include "orbitflow/census.hpp"
#include "orbitflow/error.hpp"
#include "orbitflow/synthetic.hpp"
#include "orbitflow/transitions.hpp"

using namespace orbitflow;

namespace {

StaticGraph complete(std::size_t n) {
  std::vector<Edge> e;
  for (NodeIndex u = 0; u < n; ++u)
    for (NodeIndex v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return StaticGraph(n, e);
}

// Random snapshot pair sharing most edges.
std::pair<StaticGraph, StaticGraph> perturbed_pair(std::size_t n, double p, std::mt19937_64& rng) {
  const auto a = oracle::random_graph(n, p, rng);
  std::bernoulli_distribution keep(0.7), add(p / 2);
  std::vector<Edge> next;
  for (const auto& e : a.edges())
    if (keep(rng)) next.push_back(e);
  for (NodeIndex u = 0; u < n; ++u)
    for (NodeIndex v = u + 1; v < n; ++v)
      if (add(rng)) next.emplace_back(u, v);
  return {a, StaticGraph(n, next)};
}

void check_against_oracle(const OrbitTransitionMatrix& got, const oracle::Transitions& want) {
  for (std::size_t a = 0; a < got.orbit_count(); ++a) {
    CHECK(got.dissolved(a) == want.dissolved[a]);
    for (std::size_t b = 0; b < got.orbit_count(); ++b) REQUIRE(got.at(a, b) == want.counts[a][b]);
  }
}

}  // namespace

TEST_CASE("triangle breaking into a chain") {
  const StaticGraph from(3, std::vector<Edge>{{0, 1}, {1, 2}, {0, 2}});
  const StaticGraph to(3, std::vector<Edge>{{0, 1}, {1, 2}});
  const auto t = enumerate_transitions(from, to, 3);
  // orbit-3 -> orbit-2 once (node 1), orbit-3 -> orbit-1 twice
  CHECK(t.at(2, 1) == 1);
  CHECK(t.at(2, 0) == 2);
  CHECK(t.total_counts() == 3);
  CHECK(t.total_dissolved() == 0);
  CHECK(t.pairs_processed() == 1);
}

TEST_CASE("unchanged K4") {
  const auto g = complete(4);
  const auto t = enumerate_transitions(g, g, 4);
  CHECK(t.at(10, 10) == 4);
  CHECK(t.total_counts() == 4);
}

TEST_CASE("dissolution and births") {
  const StaticGraph from(4, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}});
  const StaticGraph to(4, std::vector<Edge>{{0, 1}, {2, 3}});
  const auto t = enumerate_transitions(from, to, 4);
  CHECK(t.total_counts() == 0);
  CHECK(t.dissolved(2) == 2);  // path ends
  CHECK(t.dissolved(3) == 2);  // path middles
  // reversed direction: the path is born, nothing is recorded
  const auto back = enumerate_transitions(to, from, 4);
  CHECK(back.total_counts() == 0);
  CHECK(back.total_dissolved() == 0);
}

TEST_CASE("mismatched universes are rejected") {
  CHECK_THROWS_AS(enumerate_transitions(complete(4), complete(5), 4), InvalidArgument);
  CHECK_THROWS_AS(serial::enumerate_transitions(complete(4), complete(5), 4), InvalidArgument);
}

TEST_CASE("two-snapshot oracle equivalence and conservation") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 12; ++trial) {
    const auto [from, to] = perturbed_pair(12, 0.3, rng);
    for (int k : {3, 4}) {
      const auto got = enumerate_transitions(from, to, k);
      const auto want = oracle::transitions(from, to, k);
      check_against_oracle(got, want);
      CHECK(got.total_counts() + got.total_dissolved() == static_cast<std::uint64_t>(k) * want.source_sets);
      CHECK(run_census(from, k).total_occurrences() == want.source_sets);
    }
  }
}

TEST_CASE("series accumulation") {
  SUBCASE("three identical K4 snapshots") {
    SnapshotSeries s;
    s.snapshots.assign(3, complete(4));
    const auto t = accumulate_series(s, 4);
    CHECK(t.at(10, 10) == 8);
    CHECK(t.pairs_processed() == 2);
  }
  SUBCASE("needs two snapshots") {
    SnapshotSeries s;
    s.snapshots.assign(1, complete(4));
    CHECK_THROWS_AS(accumulate_series(s, 4), InvalidArgument);
  }
  SUBCASE("generated series equals the pairwise oracle sum") {
    const auto el = synth::random_churn(12, {14, 16, 12, 18}, 10, 4);
    for (auto mode : {SnapshotMode::ActiveEdge, SnapshotMode::Aggregate}) {
      const auto series = build_snapshots(el, {mode, 10, 4, {}});
      const auto got = accumulate_series(series, 4);
      oracle::Transitions sum;
      sum.counts.assign(11, std::vector<std::uint64_t>(11, 0));
      sum.dissolved.assign(11, 0);
      for (std::size_t i = 0; i + 1 < series.size(); ++i) {
        const auto one = oracle::transitions(series.snapshots[i], series.snapshots[i + 1], 4);
        for (std::size_t a = 0; a < 11; ++a) {
          sum.dissolved[a] += one.dissolved[a];
          for (std::size_t b = 0; b < 11; ++b) sum.counts[a][b] += one.counts[a][b];
        }
      }
      check_against_oracle(got, sum);
      CHECK(got == serial::accumulate_series(series, 4));
    }
  }
}

TEST_CASE("aggregate series never lose edges in a transition") {
  const auto& table = ClassificationTable::get(4);
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const auto el = synth::random_churn(14, {6, 8, 10, 8, 6}, 5, seed);
    const auto t = accumulate_series(build_snapshots(el, {SnapshotMode::Aggregate, 5, 5, {}}), 4);
    CHECK(t.total_dissolved() == 0);
    for (std::size_t a = 0; a < 11; ++a)
      for (std::size_t b = 0; b < 11; ++b)
        if (table.graphlet(table.orbit(b).graphlet).edge_count < table.graphlet(table.orbit(a).graphlet).edge_count)
          CHECK(t.at(a, b) == 0);
  }
}

TEST_CASE("relabeling both snapshots leaves the matrix unchanged") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 8; ++trial) {
    const auto [from, to] = perturbed_pair(20, 0.25, rng);
    std::vector<NodeIndex> perm(20);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(enumerate_transitions(from, to, 4) ==
          enumerate_transitions(from.relabeled(perm), to.relabeled(perm), 4));
  }
}

TEST_CASE("OpenMP transitions equal the serial reference") {
  const auto el = synth::random_churn(300, {600, 650, 700}, 10, 1);
  const auto series = build_snapshots(el, {SnapshotMode::Aggregate, 10, 3, {}});
  const auto want = serial::accumulate_series(series, 4);
  for (int threads : {1, 2, 6}) {
    omp_set_num_threads(threads);
    CHECK(accumulate_series(series, 4) == want);
  }
}

TEST_CASE("row normalization") {
  OrbitTransitionMatrix t(4);
  t.at(0, 0) = 2;
  t.at(0, 1) = 1;
  t.at(0, 2) = 1;
  t.dissolved(0) = 100;
  const auto n = row_normalize(t);
  CHECK(n(0, 0) == 0.5);
  CHECK(n(0, 1) == 0.25);
  CHECK(n(0, 2) == 0.25);
  for (std::size_t b = 0; b < 11; ++b) CHECK(n(1, b) == 0.0);

  // rows of accumulated matrices sum to 1 or 0
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto el = synth::random_churn(25, {30, 35, 30, 40}, 10, seed);
    const auto m = row_normalize(accumulate_series(build_snapshots(el, {SnapshotMode::ActiveEdge, 10, 4, {}}), 4));
    for (std::size_t a = 0; a < 11; ++a) {
      double s = 0;
      for (std::size_t b = 0; b < 11; ++b) s += m(a, b);
      CHECK((std::abs(s - 1.0) <= 1e-12 || s == 0.0));
    }
  }
}

TEST_CASE("discretization bands") {
  CHECK(classify_transition(1.0 / 3.0) == TransitionBand::Rare);
  CHECK(classify_transition(0.0) == TransitionBand::Rare);
  CHECK(classify_transition(0.5) == TransitionBand::Common);
  CHECK(classify_transition(2.0 / 3.0) == TransitionBand::Common);
  CHECK(classify_transition(0.7) == TransitionBand::Frequent);
  CHECK(classify_transition(1.0) == TransitionBand::Frequent);
  CHECK_THROWS_AS(classify_transition(1.5), InvalidArgument);
  CHECK_THROWS_AS(classify_transition(-0.1), InvalidArgument);
  SquareMatrix m(2);
  m(0, 1) = 0.9;
  m(1, 0) = 0.4;
  const auto f = discretize(m);
  CHECK(f(0, 0) == TransitionBand::Rare);
  CHECK(f(0, 1) == TransitionBand::Frequent);
  CHECK(f(1, 0) == TransitionBand::Common);
  m(1, 1) = 2.0;
  CHECK_THROWS_AS(discretize(m), InvalidArgument);
}
