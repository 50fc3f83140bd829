#include <doctest.h>

#include <algorithm>

#include "amg/generators.hpp"
#include "amg/invariants.hpp"
#include "amg/pattern_check.hpp"
#include "oracles.hpp"

using namespace amg;

namespace {

Graph sample(std::uint64_t seed) {
  const Vertex n = 4 + static_cast<Vertex>(seed % 6);
  const std::int64_t most = std::int64_t{n} * (n - 1) / 2;
  return random_connected(n, std::min<std::int64_t>(most, n - 1 + static_cast<std::int64_t>(seed % 7)), seed);
}

bool convex_by_definition(const oracle::Matrix& d, const std::vector<Vertex>& set) {
  std::vector<bool> in(d.size(), false);
  for (Vertex v : set) in[static_cast<std::size_t>(v)] = true;
  for (Vertex a : set)
    for (Vertex b : set)
      for (std::size_t c = 0; c < d.size(); ++c)
        if (!in[c] && oracle::between(d, static_cast<std::size_t>(a), c, static_cast<std::size_t>(b))) return false;
  return true;
}

bool is_isometric(const Graph& pattern, const DistanceMatrix& host_d, const IsometricEmbedding& phi) {
  const DistanceMatrix pd(pattern);
  for (Vertex a = 0; a < pattern.order(); ++a)
    for (Vertex b = 0; b < pattern.order(); ++b)
      if (host_d(phi[a], phi[b]) != pd(a, b)) return false;
  return true;
}

}  // namespace

TEST_CASE("convex sets") {
  const Graph c4 = cycle_graph(4);
  const DistanceMatrix d4(c4);
  const auto r = is_convex_set(d4, {0, 1, 3});
  CHECK_FALSE(r.convex);
  REQUIRE(r.witness);
  CHECK(r.witness->a == 1);
  CHECK(r.witness->b == 3);
  CHECK(r.witness->c == 2);
  CHECK(is_convex_set(d4, {0, 1, 2, 3}).convex);
  CHECK(is_convex_set(d4, {2}).convex);

  const Graph t = random_tree(9, 4);
  const DistanceMatrix dt(t);
  for (Vertex v = 0; v < 9; ++v) {
    std::vector<Vertex> ball;
    for (Vertex x = 0; x < 9; ++x)
      if (dt(v, x) <= 2) ball.push_back(x);
    CHECK(is_convex_set(dt, ball).convex);
  }

  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Graph g = sample(seed);
    const DistanceMatrix d(g);
    const auto fw = oracle::floyd_warshall(g);
    Rng rng(seed);
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<Vertex> set;
      for (Vertex v = 0; v < g.order(); ++v)
        if (rng.coin()) set.push_back(v);
      CHECK(is_convex_set(d, set).convex == convex_by_definition(fw, set));
    }
  }
}

TEST_CASE("disk convexity and S1 slices") {
  const Graph c6 = cycle_graph(6);
  const auto r6 = all_disks_convex(c6, DistanceMatrix(c6));
  CHECK_FALSE(r6.convex);
  REQUIRE(r6.witness);
  CHECK(r6.witness->center == 0);
  CHECK(r6.witness->radius == 2);
  CHECK(r6.witness->c == 3);

  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph t = random_tree(3 + static_cast<Vertex>(seed % 7), seed);
    CHECK(all_disks_convex(t, DistanceMatrix(t)).convex);
    const Graph c = random_chordal(3 + static_cast<Vertex>(seed % 8), seed);
    CHECK(all_disks_convex(c, DistanceMatrix(c)).convex);
  }

  const Graph c5 = cycle_graph(5);
  CHECK(s1_slices_clique(c5, DistanceMatrix(c5)).cliques);
  const Graph c4 = cycle_graph(4);
  const auto s4 = s1_slices_clique(c4, DistanceMatrix(c4));
  CHECK_FALSE(s4.cliques);
  REQUIRE(s4.witness);
  CHECK(s4.witness->x == 0);
  CHECK(s4.witness->y == 2);
  CHECK(s4.witness->a == 1);
  CHECK(s4.witness->b == 3);
  const Graph k5 = complete_graph(5);
  CHECK(s1_slices_clique(k5, DistanceMatrix(k5)).cliques);
}

TEST_CASE("isometric embeddings") {
  const Graph c4 = cycle_graph(4);
  const auto self = find_isometric_embedding(c4, c4);
  REQUIRE(self);
  CHECK(*self == IsometricEmbedding{0, 1, 2, 3});
  CHECK_FALSE(find_isometric_embedding(c4, complete_graph(4)));

  const Graph q3 = hypercube(3);
  const DistanceMatrix dq(q3);
  const auto c6 = find_isometric_embedding(cycle_graph(6), q3);
  REQUIRE(c6);
  CHECK(is_isometric(cycle_graph(6), dq, *c6));
  CHECK_FALSE(find_isometric_embedding(cycle_graph(8), q3));

  // Plain subgraph but not isometric: C4 inside C4 plus a chord.
  const Graph chord(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}});
  CHECK_FALSE(find_isometric_embedding(c4, chord));

  const Graph w = w6pp();
  const auto ww = find_isometric_embedding(w, w);
  REQUIRE(ww);
  CHECK(is_isometric(w, DistanceMatrix(w), *ww));

  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Graph g = sample(seed);
    const DistanceMatrix d(g);
    for (Vertex len = 3; len <= 6; ++len) {
      const auto e = find_isometric_embedding(cycle_graph(len), g, d);
      if (e) CHECK(is_isometric(cycle_graph(len), d, *e));
    }
  }
}

TEST_CASE("longest isometric cycle") {
  const Graph t = random_tree(8, 1);
  CHECK(max_isometric_cycle(t, DistanceMatrix(t)) == 0);
  const Graph c7 = cycle_graph(7);
  CHECK(max_isometric_cycle(c7, DistanceMatrix(c7)) == 7);
  const Graph q3 = hypercube(3);
  CHECK(max_isometric_cycle(q3, DistanceMatrix(q3)) == 6);
  const Graph k4 = complete_graph(4);
  CHECK(max_isometric_cycle(k4, DistanceMatrix(k4)) == 3);
}

TEST_CASE("alpha_1 characterization") {
  for (int n = 2; n <= 6; ++n) {
    const Graph g = triangular_grid(n);
    CHECK(alpha1_characterization(g, DistanceMatrix(g)).alpha1);
  }
  const Graph w = w6pp();
  const auto rw = alpha1_characterization(w, DistanceMatrix(w));
  CHECK_FALSE(rw.alpha1);
  CHECK(rw.reason == CharacterizationClause::ContainsW6pp);
  CHECK(rw.w6pp);

  const Graph c4 = cycle_graph(4);
  const auto r4 = alpha1_characterization(c4, DistanceMatrix(c4));
  CHECK_FALSE(r4.alpha1);
  CHECK(r4.reason == CharacterizationClause::DiskNotConvex);
  CHECK(to_string(r4.reason) == "disk-not-convex");

  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    const Graph g = seed % 3 ? sample(seed) : random_chordal(4 + static_cast<Vertex>(seed % 7), seed);
    const DistanceMatrix d(g);
    CAPTURE(seed);
    const bool alpha1 = alpha_index(g, d).index <= 1;
    CHECK(alpha1 == alpha1_characterization(g, d).alpha1);
    const bool disks = all_disks_convex(g, d).convex;
    CHECK(disks == (max_isometric_cycle(g, d) <= 5 && s1_slices_clique(g, d).cliques));
  }
}

TEST_CASE("equality case of the 1-hyperbolicity lemma") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph t = random_tree(3 + static_cast<Vertex>(seed % 6), seed);
    const auto r = check_equality_case(t, DistanceMatrix(t));
    CHECK(r.holds);
    CHECK(r.configurations > 0);
  }
  for (int n = 2; n <= 6; ++n) {
    const Graph g = triangular_grid(n);
    CHECK(check_equality_case(g, DistanceMatrix(g)).holds);
  }
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph c = random_chordal(4 + static_cast<Vertex>(seed % 6), seed);
    CHECK(check_equality_case(c, DistanceMatrix(c)).holds);
  }
}
