#include <doctest.h>

#include <algorithm>

#include "amg/error.hpp"
#include "amg/generators.hpp"
#include "amg/invariants.hpp"
#include "amg/transforms.hpp"
#include "oracles.hpp"

using namespace amg;

namespace {

std::vector<std::vector<int>> values(const std::vector<ExtremalFunction>& fs) {
  std::vector<std::vector<int>> out;
  for (const auto& f : fs) out.push_back(f.values);
  return out;
}

// Hull equals g plus the extra hub vertices; each hub sees exactly the rim.
void check_hub_hull(const Graph& g, Vertex hubs) {
  const HullGraph h = injective_hull(g);
  REQUIRE(h.hull.order() == g.order() + hubs);
  REQUIRE(values(h.functions) == oracle::extremal_functions(g));
  std::vector<bool> image(static_cast<std::size_t>(h.hull.order()), false);
  for (Vertex v : h.original_to_hull) image[static_cast<std::size_t>(v)] = true;
  for (const auto& e : g.edges()) CHECK(h.hull.adjacent(h.original_to_hull[e.u], h.original_to_hull[e.v]));
  for (Vertex x = 0; x < h.hull.order(); ++x) {
    if (image[static_cast<std::size_t>(x)]) continue;
    CHECK(std::all_of(h.functions[x].values.begin(), h.functions[x].values.end(), [](int f) { return f == 1; }));
    CHECK(h.hull.degree(x) == g.order());
  }
  CHECK(h.hull.size() == g.size() + static_cast<std::size_t>(g.order() * hubs));
}

}  // namespace

TEST_CASE("subdivision") {
  const Subdivision s = subdivide(complete_graph(3));
  CHECK(s.graph.order() == 6);
  CHECK(s.graph.size() == 6);
  for (Vertex v = 0; v < 6; ++v) CHECK(s.graph.degree(v) == 2);
  CHECK(s.original_count == 3);
  CHECK(s.is_original(2));
  CHECK_FALSE(s.is_original(3));
  REQUIRE(s.edge_of.size() == 3);
  for (std::size_t j = 0; j < 3; ++j) {
    const Vertex e = 3 + static_cast<Vertex>(j);
    CHECK(s.graph.adjacent(e, s.edge_of[j].u));
    CHECK(s.graph.adjacent(e, s.edge_of[j].v));
  }

  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph g = random_connected(4 + static_cast<Vertex>(seed % 6), 6 + static_cast<std::int64_t>(seed % 3), seed);
    const Subdivision sub = subdivide(g);
    CHECK(sub.graph.order() == g.order() + static_cast<Vertex>(g.size()));
    CHECK(sub.graph.size() == 2 * g.size());
    const DistanceMatrix d(g);
    const DistanceMatrix ds(sub.graph);
    for (Vertex u = 0; u < g.order(); ++u)
      for (Vertex v = 0; v < g.order(); ++v) REQUIRE(ds(u, v) == 2 * d(u, v));
  }
}

TEST_CASE("powers") {
  const Graph p5 = path_graph(5);
  CHECK(power(p5, 1) == p5);
  CHECK(DistanceMatrix(power(p5, 2))(0, 4) == 2);
  const Graph c6sq = power(cycle_graph(6), 2);
  for (Vertex v = 0; v < 6; ++v) CHECK(c6sq.degree(v) == 4);
  CHECK(power(p5, 9) == complete_graph(5));
  CHECK_THROWS_AS(power(p5, 0), InvalidArgument);

  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    const Graph g = random_connected(7, 8, seed);
    const DistanceMatrix d(g);
    for (int lam = 1; lam <= 3; ++lam) {
      const DistanceMatrix dp(power(g, lam));
      for (Vertex u = 0; u < 7; ++u)
        for (Vertex v = 0; v < 7; ++v) REQUIRE(dp(u, v) == (d(u, v) + lam - 1) / lam);
    }
  }
}

TEST_CASE("named hulls") {
  check_hub_hull(cycle_graph(4), 1);
  check_hub_hull(cycle_graph(5), 1);

  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    const Graph t = random_tree(2 + static_cast<Vertex>(seed % 6), seed);
    const HullGraph h = injective_hull(t);
    REQUIRE(values(h.functions) == oracle::extremal_functions(t));
    REQUIRE(h.hull.order() == t.order());
    CHECK(h.hull.size() == t.size());
    for (const auto& e : t.edges()) CHECK(h.hull.adjacent(h.original_to_hull[e.u], h.original_to_hull[e.v]));
  }
}

TEST_CASE("extremal functions match brute force") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Vertex n = 3 + static_cast<Vertex>(seed % 4);
    const std::int64_t most = std::int64_t{n} * (n - 1) / 2;
    const Graph g = random_connected(n, n - 1 + static_cast<std::int64_t>(seed % static_cast<std::uint64_t>(most - n + 2)), seed);
    const DistanceMatrix d(g);
    const auto fs = extremal_functions(d);
    CAPTURE(seed);
    REQUIRE(values(fs) == oracle::extremal_functions(g));
    for (const auto& f : fs) CHECK(is_extremal(d, f.values));
  }
  const DistanceMatrix d4(cycle_graph(4));
  CHECK(is_extremal(d4, {1, 1, 1, 1}));
  CHECK_FALSE(is_extremal(d4, {2, 2, 2, 2}));
  CHECK_FALSE(is_extremal(d4, {0, 0, 0, 0}));
}

TEST_CASE("hull properties on random graphs") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Vertex n = 4 + static_cast<Vertex>(seed % 4);
    const Graph g = random_connected(n, n + static_cast<std::int64_t>(seed % 4), seed);
    const DistanceMatrix d(g);
    const HullGraph h = injective_hull(g, d);
    const DistanceMatrix dh(h.hull);
    CAPTURE(seed);
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = 0; v < n; ++v) REQUIRE(dh(h.original_to_hull[u], h.original_to_hull[v]) == d(u, v));
    // Sup-distance equals hull distance.
    for (Vertex x = 0; x < h.hull.order(); ++x)
      for (Vertex y = 0; y < h.hull.order(); ++y) {
        int sup = 0;
        for (Vertex v = 0; v < n; ++v) sup = std::max(sup, std::abs(h.functions[x].values[v] - h.functions[y].values[v]));
        REQUIRE(dh(x, y) == sup);
      }
    CHECK(hyperbolicity(h.hull, dh).delta == hyperbolicity(g, d).delta);
    if (h.hull.order() <= 9) CHECK(oracle::helly_by_radii(h.hull));
    CHECK(is_helly(h.hull, dh));
  }
}

TEST_CASE("Helly recognition") {
  for (Vertex n = 1; n <= 6; ++n) {
    const Graph k = complete_graph(n);
    CHECK(is_helly(k, DistanceMatrix(k)));
  }
  const Graph c4 = cycle_graph(4);
  CHECK_FALSE(is_helly(c4, DistanceMatrix(c4)));
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Vertex n = 3 + static_cast<Vertex>(seed % 4);
    const Graph g = random_connected(n, std::min<std::int64_t>(n - 1 + static_cast<std::int64_t>(seed % 3), std::int64_t{n} * (n - 1) / 2), seed);
    CAPTURE(seed);
    CHECK(is_helly(g, DistanceMatrix(g)) == oracle::helly_by_radii(g));
  }
}

TEST_CASE("hull cap") {
  const Graph c8 = cycle_graph(8);
  CHECK_THROWS_AS(injective_hull(c8, 10), CapExceeded);
  CHECK_THROWS_AS(injective_hull(c8, 7), InvalidArgument);
  CHECK_THROWS_AS(is_helly(c8, DistanceMatrix(c8), 9), CapExceeded);
}
