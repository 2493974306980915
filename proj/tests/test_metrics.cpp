#include <cmath>
#include <numeric>
#include <random>

#include "doctest.h"
#include "oracle.hpp"
#include "orbitflow/agreement.hpp"
#include "orbitflow/cluster.hpp"
#include "orbitflow/error.hpp"
#include "orbitflow/synthetic.hpp"

using namespace orbitflow;

namespace {

GraphletDegreeDistribution single_orbit(std::map<std::uint64_t, double> normalized) {
  GraphletDegreeDistribution g;
  g.orbit_ids = {OrbitId{4, 1}};
  OrbitDistribution d;
  for (auto [k, v] : normalized) {
    d.counts[k] = 1;
    d.normalized[k] = v;
  }
  g.orbits = {d};
  return g;
}

SquareMatrix random_unit_matrix(std::size_t n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0, 1);
  SquareMatrix m(n);
  for (auto& v : m.values()) v = u(rng);
  return m;
}

std::vector<std::vector<std::uint64_t>> dense_fr(const OrbitFrequencyMatrix& fr) {
  std::vector<std::vector<std::uint64_t>> out(fr.node_count());
  for (std::size_t v = 0; v < fr.node_count(); ++v) out[v].assign(fr.row(v).begin(), fr.row(v).end());
  return out;
}

OrbitTransitionMatrix random_transitions(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> count(0, 20);
  OrbitTransitionMatrix t(4);
  for (std::size_t a = 0; a < 11; ++a)
    for (std::size_t b = 0; b < 11; ++b) t.at(a, b) = count(rng) < 8 ? 0 : count(rng);
  return t;
}

SimilarityMatrix random_similarity(std::size_t n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0, 1);
  SimilarityMatrix sim;
  sim.kind = SimilarityKind::OTA;
  for (std::size_t i = 0; i < n; ++i) sim.names.push_back("net" + std::to_string(i));
  sim.values = SquareMatrix(n, 1.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) sim.values(i, j) = sim.values(j, i) = u(rng);
  return sim;
}

// Merge tree expressed through leaf labels, for comparisons across orderings.
std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>> labelled(const MergeTree& t) {
  std::vector<std::vector<std::string>> members;
  for (const auto& l : t.leaves) members.push_back({l});
  std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>> out;
  for (const auto& m : t.merges) {
    out.emplace_back(members[m.left], members[m.right]);
    auto merged = members[m.left];
    merged.insert(merged.end(), members[m.right].begin(), members[m.right].end());
    std::sort(merged.begin(), merged.end());
    members.push_back(merged);
  }
  return out;
}

}  // namespace

TEST_CASE("GDA closed forms") {
  const auto a = single_orbit({{1, 1.0}});
  const auto b = single_orbit({{2, 1.0}});
  CHECK(gda_pair(a, a) == doctest::Approx(1.0));
  CHECK(gda_pair(a, b) == doctest::Approx(0.0).epsilon(1e-12));

  GraphletDegreeDistribution untouched;
  untouched.orbit_ids = {OrbitId{4, 1}};
  untouched.orbits = {OrbitDistribution{}};
  CHECK(gda_pair(untouched, untouched) == 1.0);
  // one-sided absence: sqrt(1)/sqrt(2)
  CHECK(gda_pair(untouched, a) == doctest::Approx(1.0 - 1.0 / std::sqrt(2.0)));

  GraphletDegreeDistribution other = a;
  other.orbit_ids = {OrbitId{3, 1}};
  CHECK_THROWS_AS(gda_pair(a, other), InvalidArgument);
}

TEST_CASE("GDA equals a straight-from-formula recomputation") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 10; ++trial) {
    const auto g = oracle::random_graph(20, 0.2, rng);
    const auto h = oracle::random_graph(20, 0.3, rng);
    const auto fg = compute_orbit_frequencies(g, 4);
    const auto fh = compute_orbit_frequencies(h, 4);
    for (auto scaling : {GddScaling::InverseK, GddScaling::Plain}) {
      const double got = gda_pair(compute_gdd(fg, scaling), compute_gdd(fh, scaling));
      const double want = oracle::gda(dense_fr(fg), dense_fr(fh), scaling == GddScaling::InverseK);
      CHECK(got == doctest::Approx(want).epsilon(1e-12));
    }
  }
}

TEST_CASE("GDA properties") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 20; ++trial) {
    const auto g = compute_gdd(compute_orbit_frequencies(oracle::random_graph(16, 0.3, rng), 4));
    const auto h = compute_gdd(compute_orbit_frequencies(oracle::random_graph(16, 0.15, rng), 4));
    const double gh = gda_pair(g, h);
    CHECK(gh == gda_pair(h, g));
    CHECK(gh >= -1e-12);
    CHECK(gh <= 1 + 1e-12);
    CHECK(gda_pair(g, g) == doctest::Approx(1.0));
  }
}

TEST_CASE("relative rescale") {
  std::vector<SquareMatrix> set(3, SquareMatrix(1));
  set[0](0, 0) = 0.2;
  set[1](0, 0) = 0.6;
  set[2](0, 0) = 1.0;
  const auto r = relative_rescale(set);
  CHECK(r[0](0, 0) == 0.0);
  CHECK(r[1](0, 0) == doctest::Approx(0.5));
  CHECK(r[2](0, 0) == 1.0);

  std::vector<SquareMatrix> flat(2, SquareMatrix(1, 0.4));
  const auto f = relative_rescale(flat);
  CHECK(f[0](0, 0) == 0.0);
  CHECK(f[1](0, 0) == 0.0);

  CHECK_THROWS_AS(relative_rescale(std::vector<SquareMatrix>(1, SquareMatrix(2))), InvalidArgument);
  CHECK_THROWS_AS(relative_rescale(std::vector<SquareMatrix>{SquareMatrix(2), SquareMatrix(3)}), InvalidArgument);

  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<SquareMatrix> ms;
    for (int i = 0; i < 4; ++i) ms.push_back(random_unit_matrix(5, rng));
    const auto once = relative_rescale(ms);
    for (std::size_t cell = 0; cell < 25; ++cell) {
      double lo = 1, hi = 0;
      for (const auto& m : once) {
        lo = std::min(lo, m.values()[cell]);
        hi = std::max(hi, m.values()[cell]);
      }
      CHECK(lo == 0.0);
      CHECK(hi == 1.0);
    }
    const auto twice = relative_rescale(once);
    for (std::size_t i = 0; i < once.size(); ++i)
      for (std::size_t cell = 0; cell < 25; ++cell)
        CHECK(twice[i].values()[cell] == doctest::Approx(once[i].values()[cell]).epsilon(1e-12));
  }
}

TEST_CASE("OTA pair") {
  std::mt19937_64 rng(3);
  const auto m = random_unit_matrix(11, rng);
  CHECK(ota_pair(m, m) == 1.0);
  CHECK(ota_pair(m, m, OtaScaling::Raw) == 11.0);
  CHECK(ota_pair(SquareMatrix(11, 0.0), SquareMatrix(11, 1.0)) == 0.0);
  CHECK(ota_pair(SquareMatrix(11, 0.0), SquareMatrix(11, 1.0), OtaScaling::Raw) == 0.0);
  CHECK_THROWS_AS(ota_pair(SquareMatrix(11), SquareMatrix(3)), InvalidArgument);
  for (int trial = 0; trial < 50; ++trial) {
    const auto a = random_unit_matrix(11, rng);
    const auto b = random_unit_matrix(11, rng);
    const double ab = ota_pair(a, b);
    CHECK(ab == ota_pair(b, a));
    CHECK(ab >= 0.0);
    CHECK(ab <= 1.0);
  }
}

TEST_CASE("OTA matrix against the formula oracle") {
  std::mt19937_64 rng(4);
  std::vector<OrbitTransitionMatrix> nets;
  for (int i = 0; i < 3; ++i) nets.push_back(random_transitions(rng));
  const std::vector<std::string> names = {"a", "b", "c"};
  for (bool rescale : {true, false}) {
    AgreementConfig cfg;
    cfg.use_relative_rescale = rescale;
    const auto sim = ota_matrix(names, nets, cfg);
    std::vector<oracle::Grid> normalized;
    for (const auto& t : nets) {
      std::vector<std::vector<std::uint64_t>> counts(11, std::vector<std::uint64_t>(11));
      for (std::size_t a = 0; a < 11; ++a)
        for (std::size_t b = 0; b < 11; ++b) counts[a][b] = t.at(a, b);
      normalized.push_back(oracle::row_normalize(counts));
    }
    const auto want = oracle::ota_set(normalized, rescale);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) CHECK(sim.values(i, j) == doctest::Approx(want[i][j]).epsilon(1e-12));
  }

  SUBCASE("a duplicate is the closest network") {
    std::vector<OrbitTransitionMatrix> set = {nets[0], nets[1], nets[2], nets[1]};
    const auto sim = ota_matrix({"a", "b", "c", "b2"}, set);
    for (std::size_t j = 0; j < 4; ++j)
      if (j != 1 && j != 3) CHECK(sim.values(1, 3) > sim.values(1, j));
    CHECK(sim.values(1, 3) == doctest::Approx(1.0));
  }
  SUBCASE("reordering permutes rows and columns") {
    std::vector<OrbitTransitionMatrix> rev = {nets[2], nets[1], nets[0]};
    const auto a = ota_matrix(names, nets);
    const auto b = ota_matrix({"c", "b", "a"}, rev);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) CHECK(a.values(i, j) == doctest::Approx(b.values(2 - i, 2 - j)));
  }
  CHECK_THROWS_AS(ota_matrix({"a"}, std::vector<OrbitTransitionMatrix>{nets[0]}), InvalidArgument);
  CHECK_THROWS_AS(ota_matrix({"a"}, nets), InvalidArgument);
}

TEST_CASE("motif scores") {
  SUBCASE("equal frequencies") {
    const std::vector<double> fr = {3, 4, 5, 6, 7, 8};
    const auto f = motif_scores(fr, fr);
    for (double d : f.raw) CHECK(d == 0.0);
    for (double d : f.normalized) CHECK(d == 0.0);
  }
  SUBCASE("absent from the ensemble") {
    const auto f = motif_scores(std::vector<double>{10, 0}, std::vector<double>{0, 0});
    CHECK(f.raw[0] == 1.0);
    CHECK(f.raw[1] == 0.0);
    CHECK(f.normalized[0] == 1.0);
  }
  SUBCASE("single nonzero delta normalizes to -1") {
    const auto f = motif_scores(std::vector<double>{1, 5, 5}, std::vector<double>{3, 5, 5});
    CHECK(f.raw[0] == doctest::Approx(-0.5));
    CHECK(f.normalized[0] == doctest::Approx(-1.0));
  }
  SUBCASE("sign convention and unit norm") {
    std::mt19937_64 rng(6);
    std::uniform_real_distribution<double> u(0, 50);
    for (int trial = 0; trial < 30; ++trial) {
      std::vector<double> real(6), mean(6);
      for (int i = 0; i < 6; ++i) {
        real[i] = u(rng);
        mean[i] = u(rng);
      }
      const auto f = motif_scores(real, mean);
      double norm = 0;
      for (int i = 0; i < 6; ++i) {
        CHECK((f.raw[i] > 0) == (real[i] > mean[i]));
        CHECK(std::abs(f.raw[i]) <= 1.0);
        norm += f.normalized[i] * f.normalized[i];
      }
      CHECK(std::sqrt(norm) == doctest::Approx(1.0).epsilon(1e-12));
    }
  }
  CHECK_THROWS_AS(motif_scores(std::vector<double>{1}, std::vector<double>{1, 2}), InvalidArgument);
}

TEST_CASE("fingerprint distance") {
  MotifFingerprint a{{1, 0}, {1, 0}};
  MotifFingerprint b{{-1, 0}, {-1, 0}};
  CHECK(fingerprint_distance(a, a) == 0.0);
  CHECK(fingerprint_distance(a, b) == doctest::Approx(2.0));
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(-1, 1);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<double> x(6), y(6);
    for (auto& v : x) v = u(rng);
    for (auto& v : y) v = u(rng);
    MotifFingerprint px{x, x}, py{y, y};
    double s = 0;
    for (int i = 0; i < 6; ++i) s += (x[i] - y[i]) * (x[i] - y[i]);
    CHECK(fingerprint_distance(px, py) == doctest::Approx(std::sqrt(s)));
  }
  MotifFingerprint short_one{{1}, {1}};
  CHECK_THROWS_AS(fingerprint_distance(a, short_one), InvalidArgument);
  const auto sim = motif_distance_matrix({"a", "b"}, std::vector<MotifFingerprint>{a, b});
  CHECK(sim.values(0, 0) == 0.0);
  CHECK(sim.values(0, 1) == doctest::Approx(2.0));
}

TEST_CASE("hierarchical clustering") {
  SUBCASE("identical pair merges first") {
    SimilarityMatrix sim;
    sim.kind = SimilarityKind::OTA;
    sim.names = {"x", "y", "z"};
    sim.values = SquareMatrix(3, 1.0);
    sim.values(0, 2) = sim.values(2, 0) = 1.0;
    sim.values(0, 1) = sim.values(1, 0) = 0.4;
    sim.values(1, 2) = sim.values(2, 1) = 0.5;
    const auto tree = hierarchical_cluster(sim);
    REQUIRE(tree.merges.size() == 2);
    CHECK(tree.merges[0].left == 0);
    CHECK(tree.merges[0].right == 2);
    CHECK(tree.merges[0].height == 0.0);
    CHECK(tree.merges[1].left == 3);  // {x, z} sorts before {y}
    CHECK(tree.merges[1].right == 1);
    CHECK(tree.merges[1].size == 3);
  }
  SUBCASE("block-diagonal families merge internally first") {
    SimilarityMatrix sim;
    sim.kind = SimilarityKind::GDA;
    std::mt19937_64 rng(10);
    std::uniform_real_distribution<double> hi(0.8, 0.95), lo(0.1, 0.3);
    const std::size_t n = 8;
    for (std::size_t i = 0; i < n; ++i) sim.names.push_back("n" + std::to_string(i));
    sim.values = SquareMatrix(n, 1.0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        sim.values(i, j) = sim.values(j, i) = (i % 2 == j % 2) ? hi(rng) : lo(rng);
    for (auto linkage : {Linkage::Average, Linkage::Single, Linkage::Complete}) {
      const auto tree = hierarchical_cluster(sim, linkage);
      const auto labels = cut_tree(tree, 2);
      for (std::size_t i = 0; i < n; ++i) CHECK(labels[i] == i % 2);
    }
  }
  SUBCASE("agrees with a Lance-Williams reference agglomeration") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
      const auto sim = random_similarity(7, rng);
      oracle::Grid dist(7, std::vector<double>(7, 0.0));
      for (std::size_t i = 0; i < 7; ++i)
        for (std::size_t j = 0; j < 7; ++j) dist[i][j] = i == j ? 0.0 : 1.0 - sim.values(i, j);
      for (auto [linkage, name] : {std::pair{Linkage::Average, "average"}, std::pair{Linkage::Single, "single"},
                                   std::pair{Linkage::Complete, "complete"}}) {
        const auto got = labelled(hierarchical_cluster(sim, linkage));
        const auto want = oracle::lance_williams(sim.names, dist, name);
        const auto tree = hierarchical_cluster(sim, linkage);
        REQUIRE(got.size() == want.size());
        for (std::size_t m = 0; m < got.size(); ++m) {
          CHECK(got[m].first == want[m].left_members);
          CHECK(got[m].second == want[m].right_members);
          CHECK(tree.merges[m].height == doctest::Approx(want[m].height).epsilon(1e-12));
        }
      }
    }
  }
  SUBCASE("invariant under consistent permutation") {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 10; ++trial) {
      const auto sim = random_similarity(6, rng);
      std::vector<std::size_t> perm(6);
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      SimilarityMatrix shuffled;
      shuffled.kind = sim.kind;
      shuffled.values = SquareMatrix(6);
      shuffled.names.resize(6);
      for (std::size_t i = 0; i < 6; ++i) {
        shuffled.names[perm[i]] = sim.names[i];
        for (std::size_t j = 0; j < 6; ++j) shuffled.values(perm[i], perm[j]) = sim.values(i, j);
      }
      CHECK(labelled(hierarchical_cluster(sim)) == labelled(hierarchical_cluster(shuffled)));
    }
  }
  SUBCASE("ties break on the smallest label pair") {
    SimilarityMatrix sim;
    sim.kind = SimilarityKind::MotifDistance;
    sim.names = {"d", "c", "b", "a"};
    sim.values = SquareMatrix(4, 1.0);
    for (std::size_t i = 0; i < 4; ++i) sim.values(i, i) = 0.0;
    const auto tree = labelled(hierarchical_cluster(sim, Linkage::Single));
    CHECK(tree[0].first == std::vector<std::string>{"a"});
    CHECK(tree[0].second == std::vector<std::string>{"b"});
  }
  SUBCASE("errors") {
    SimilarityMatrix one;
    one.names = {"a"};
    one.values = SquareMatrix(1, 1.0);
    CHECK_THROWS_AS(hierarchical_cluster(one), InvalidArgument);
    MergeTree t;
    t.leaves = {"a", "b"};
    t.merges = {{0, 1, 0.0, 2}};
    CHECK_THROWS_AS(cut_tree(t, 3), InvalidArgument);
    CHECK(cut_tree(t, 1) == std::vector<std::size_t>{0, 0});
    CHECK(cut_tree(t, 2) == std::vector<std::size_t>{0, 1});
  }
}
