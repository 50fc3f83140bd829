#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "amg/dismantling.hpp"
#include "amg/error.hpp"
#include "amg/generators.hpp"
#include "amg/invariants.hpp"
#include "amg/transforms.hpp"
#include "oracles.hpp"

using namespace amg;

namespace {

// Tries every permutation through the ordering checker.
bool some_ordering_dismantles(const Graph& g) {
  std::vector<Vertex> perm(static_cast<std::size_t>(g.order()));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (is_dismantling_ordering(g, VertexOrdering{perm, perm.back()}).ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace

TEST_CASE("BFS orderings") {
  const Graph p3 = path_graph(3);
  const DistanceMatrix d3(p3);
  const auto o = bfs_ordering(p3, 0);
  CHECK(o.order == std::vector<Vertex>{2, 1, 0});
  CHECK(o.base == 0);
  CHECK(is_bfs_ordering(p3, d3, o));
  CHECK_FALSE(is_bfs_ordering(p3, d3, VertexOrdering{{1, 2, 0}, 0}));
  CHECK_FALSE(is_bfs_ordering(p3, d3, VertexOrdering{{2, 0, 1}, 0}));
  CHECK_FALSE(is_bfs_ordering(p3, d3, VertexOrdering{{2, 2, 0}, 0}));

  const Graph s = star_graph(5);
  CHECK(bfs_ordering(s, 0).order == std::vector<Vertex>{4, 3, 2, 1, 0});

  const Graph k5 = complete_graph(5);
  const DistanceMatrix dk(k5);
  std::vector<Vertex> perm{0, 1, 2, 4, 3};
  do {
    CHECK(is_bfs_ordering(k5, dk, VertexOrdering{perm, 3}));
  } while (std::next_permutation(perm.begin(), perm.end() - 1));

  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Graph g = random_connected(8, 12, seed);
    const DistanceMatrix d(g);
    for (Vertex u = 0; u < 8; ++u) CHECK(is_bfs_ordering(g, d, bfs_ordering(g, u)));
  }
}

TEST_CASE("classical dismantling") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph t = random_tree(3 + static_cast<Vertex>(seed % 8), seed);
    for (Vertex u = 0; u < t.order(); ++u) CHECK(is_dismantling_ordering(t, bfs_ordering(t, u)).ok);
    CHECK(greedy_dismantle(t).dismantlable);
  }
  const Graph c4 = cycle_graph(4);
  std::vector<Vertex> perm{0, 1, 2, 3};
  do {
    const auto r = is_dismantling_ordering(c4, VertexOrdering{perm, perm.back()});
    CHECK_FALSE(r.ok);
    CHECK(r.fail_k == 1);
  } while (std::next_permutation(perm.begin(), perm.end()));

  const auto g4 = greedy_dismantle(c4);
  CHECK_FALSE(g4.dismantlable);
  CHECK(g4.kernel == std::vector<Vertex>{0, 1, 2, 3});
  CHECK(g4.ordering.empty());
  CHECK_FALSE(greedy_dismantle(cycle_graph(5)).dismantlable);

  const auto ok = greedy_dismantle(path_graph(4));
  CHECK(ok.dismantlable);
  CHECK(ok.ordering.size() == 4);
  CHECK(is_dismantling_ordering(path_graph(4), VertexOrdering{ok.ordering, ok.ordering.back()}).ok);

  CHECK_THROWS_AS(is_dismantling_ordering(c4, VertexOrdering{{0, 1, 1, 3}, 3}), InvalidArgument);
  CHECK_THROWS_AS(is_dismantling_ordering(c4, VertexOrdering{{0, 1, 2}, 2}), InvalidArgument);
}

TEST_CASE("greedy agrees with exhaustive search") {
  for (Vertex n = 1; n <= 5; ++n) {
    for (const Graph& g : oracle::all_connected_graphs(n)) {
      const auto r = greedy_dismantle(g);
      REQUIRE(r.dismantlable == some_ordering_dismantles(g));
      if (r.dismantlable) REQUIRE(is_dismantling_ordering(g, VertexOrdering{r.ordering, r.ordering.back()}).ok);
    }
  }
  std::size_t yes = 0;
  const auto six = oracle::all_connected_graphs(6);
  for (const Graph& g : six) {
    const bool greedy = greedy_dismantle(g).dismantlable;
    REQUIRE(greedy == oracle::dismantlable(g));
    yes += greedy;
  }
  CHECK(six.size() == 26704);
  CHECK(yes > 0);
  CHECK(yes < six.size());
}

TEST_CASE("(s,s') dismantling") {
  const Graph c4 = cycle_graph(4);
  const DistanceMatrix d4(c4);
  const auto o4 = bfs_ordering(c4, 0);
  CHECK(is_ss_dismantling_ordering(c4, d4, o4, 2, 2, true).ok);
  CHECK_THROWS_AS(is_ss_dismantling_ordering(c4, d4, o4, 0, 2, true), InvalidArgument);
  CHECK_THROWS_AS(is_ss_dismantling_ordering(c4, d4, o4, 1, 0, false), InvalidArgument);

  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Graph g = random_connected(7, 7 + static_cast<std::int64_t>(seed % 6), seed);
    const DistanceMatrix d(g);
    for (Vertex u = 0; u < g.order(); ++u) {
      const auto o = bfs_ordering(g, u);
      // D(v,1) = N[v], so s = s' = 1 with star is the classical condition.
      CHECK(is_ss_dismantling_ordering(g, d, o, 1, 1, true).ok == is_dismantling_ordering(g, o).ok);
      for (int s = 1; s <= 3; ++s)
        for (int sp = 1; sp <= 3; ++sp) {
          if (is_ss_dismantling_ordering(g, d, o, s, sp, true).ok) CHECK(is_ss_dismantling_ordering(g, d, o, s, sp, false).ok);
        }
    }
  }
}

TEST_CASE("BFS orderings dismantle the (i+1)-th power") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Graph g = random_connected(8, 8 + static_cast<std::int64_t>(seed % 8), seed);
    const DistanceMatrix d(g);
    const int i = alpha_index(g, d).index;
    const Graph gp = power(g, i + 1);
    const auto diam = eccentricities(d).diameter;
    for (Vertex u = 0; u < g.order(); ++u) {
      const auto o = bfs_ordering(g, u);
      CHECK(is_dismantling_ordering(gp, o).ok);
      for (int r = 1; r <= 2 * diam; ++r) CHECK(is_ss_dismantling_ordering(g, d, o, r, (r + 1) / 2 + 2 * i + 1, true).ok);
    }
  }
}
