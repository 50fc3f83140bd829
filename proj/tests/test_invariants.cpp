#include <doctest.h>

#include <numeric>

#include "amg/distance.hpp"
#include "amg/error.hpp"
#include "amg/generators.hpp"
#include "amg/invariants.hpp"
#include "amg/parallel.hpp"
#include "oracles.hpp"

using namespace amg;

namespace {

Graph two_triangles() { return Graph(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}}); }

// Random connected graphs with n in [2, 9] and a spread of densities.
Graph sample(std::uint64_t seed) {
  const Vertex n = 2 + static_cast<Vertex>(seed % 8);
  const std::int64_t most = std::int64_t{n} * (n - 1) / 2;
  const std::int64_t m = n - 1 + static_cast<std::int64_t>((seed * 7919) % static_cast<std::uint64_t>(most - n + 2));
  return random_connected(n, m, seed);
}

}  // namespace

TEST_CASE("alpha index examples") {
  for (std::uint64_t s = 0; s < 10; ++s) {
    const Graph t = random_tree(2 + static_cast<Vertex>(s), s);
    CHECK(alpha_index(t, DistanceMatrix(t)).index == 0);
  }
  const Graph c4 = cycle_graph(4);
  const auto a = alpha_index(c4, DistanceMatrix(c4));
  CHECK(a.index == 2);
  REQUIRE(a.witness);
  CHECK(a.witness->defect == 2);
  CHECK(a.witness->u == 0);
  CHECK(a.witness->v == 1);
  CHECK(a.witness->w == 2);
  CHECK(a.witness->x == 3);

  for (int l = 1; l <= 6; ++l) {
    const Graph g = ladder(l);
    CHECK(alpha_index(g, DistanceMatrix(g)).index == 2 * l);
  }
  for (std::uint64_t s = 0; s < 20; ++s) {
    const Graph g = random_chordal(3 + static_cast<Vertex>(s % 8), s);
    CHECK(alpha_index(g, DistanceMatrix(g)).index <= 1);
  }
  const Graph single(1, {});
  const auto none = alpha_index(single, DistanceMatrix(single));
  CHECK(none.index == 0);
  CHECK_FALSE(none.witness);
}

TEST_CASE("witness fields satisfy their invariants") {
  for (std::uint64_t s = 0; s < 60; ++s) {
    const Graph g = sample(s);
    const DistanceMatrix d(g);
    const auto a = alpha_index(g, d);
    REQUIRE(a.witness);
    const auto& w = *a.witness;
    CHECK(g.adjacent(w.v, w.w));
    CHECK(in_interval(d, w.u, w.w, w.v));
    CHECK(in_interval(d, w.v, w.x, w.w));
    CHECK(w.defect == d(w.u, w.v) + 1 + d(w.w, w.x) - d(w.u, w.x));
    CHECK(w.defect == a.index);

    const auto h = hyperbolicity(g, d);
    const auto& f = h.witness;
    std::array<int, 3> sums{d(f.u, f.x) + d(f.v, f.w), d(f.u, f.w) + d(f.v, f.x), d(f.u, f.v) + d(f.w, f.x)};
    std::sort(sums.rbegin(), sums.rend());
    CHECK(sums == f.sums);
    CHECK(f.delta.doubled() == f.sums[0] - f.sums[1]);
    CHECK(f.delta == h.delta);

    const auto k = interval_thinness(g, d);
    REQUIRE(k.witness);
    const auto& t = *k.witness;
    CHECK(d(t.u, t.x) == t.k);
    CHECK(d(t.u, t.y) == t.k);
    CHECK(in_interval(d, t.u, t.v, t.x));
    CHECK(in_interval(d, t.u, t.v, t.y));
    CHECK(d(t.x, t.y) == k.kappa);

    const auto tau = slice_triangle_thinness(g, d);
    REQUIRE(tau.witness);
    const auto& q = *tau.witness;
    CHECK(q.k == gromov_product(d, q.x, q.z, q.y).floor());
    CHECK(d(q.y, q.z_prime) == q.k);
    CHECK(in_interval(d, q.y, q.x, q.z_prime));
    CHECK(d(q.y, q.x_prime) == q.k);
    CHECK(in_interval(d, q.y, q.z, q.x_prime));
    CHECK(d(q.z_prime, q.x_prime) == tau.tau);

    const auto b = bow_defect(g, d, HalfInteger::from_doubled(1));
    if (b.witness) {
      const auto& bw = *b.witness;
      CHECK(bw.overlap == d(bw.v, bw.w));
      CHECK(2 * bw.overlap > 1);
      CHECK(in_interval(d, bw.u, bw.w, bw.v));
      CHECK(in_interval(d, bw.v, bw.x, bw.w));
      CHECK(bw.defect == b.mu);
    }
  }
}

TEST_CASE("hyperbolicity examples") {
  for (std::uint64_t s = 0; s < 10; ++s) {
    const Graph t = random_tree(2 + static_cast<Vertex>(s), s);
    CHECK(hyperbolicity(t, DistanceMatrix(t)).delta.doubled() == 0);
  }
  const Graph bt = two_triangles();
  CHECK(hyperbolicity(bt, DistanceMatrix(bt)).delta.doubled() == 0);

  const Graph c4 = cycle_graph(4);
  const auto h4 = hyperbolicity(c4, DistanceMatrix(c4));
  CHECK(h4.delta == HalfInteger::from_integer(1));
  CHECK(h4.witness.sums == std::array<int, 3>{4, 2, 2});

  const Graph c5 = cycle_graph(5);
  CHECK(hyperbolicity(c5, DistanceMatrix(c5)).delta.doubled() == 1);

  const Graph single(1, {});
  const auto h1 = hyperbolicity(single, DistanceMatrix(single));
  CHECK(h1.delta.doubled() == 0);
  CHECK(h1.witness.u == 0);
}

TEST_CASE("thinness, Gromov product and slice triangles") {
  const Graph c4 = cycle_graph(4);
  const DistanceMatrix d4(c4);
  const auto k = interval_thinness(c4, d4);
  CHECK(k.kappa == 2);
  CHECK(slice_triangle_thinness(c4, d4).tau == 2);

  for (std::uint64_t s = 0; s < 10; ++s) {
    const Graph t = random_tree(2 + static_cast<Vertex>(s), s);
    const DistanceMatrix dt(t);
    CHECK(interval_thinness(t, dt).kappa == 0);
    CHECK(slice_triangle_thinness(t, dt).tau == 0);
  }

  const DistanceMatrix p3(path_graph(3));
  CHECK(gromov_product(p3, 0, 2, 1).doubled() == 0);
  CHECK(gromov_product(p3, 0, 2, 0).doubled() == 0);
  const DistanceMatrix k3(complete_graph(3));
  CHECK(gromov_product(k3, 0, 1, 2) == HalfInteger::from_doubled(1));

  const Graph single(1, {});
  CHECK_FALSE(interval_thinness(single, DistanceMatrix(single)).witness);
  CHECK_FALSE(slice_triangle_thinness(single, DistanceMatrix(single)).witness);
}

TEST_CASE("bow defect examples") {
  for (std::uint64_t s = 0; s < 10; ++s) {
    const Graph t = random_tree(2 + static_cast<Vertex>(s), s);
    const DistanceMatrix dt(t);
    for (int l2 = 0; l2 <= 4; ++l2) CHECK(bow_defect(t, dt, HalfInteger::from_doubled(l2)).mu == 0);
  }
  for (int l = 1; l <= 6; ++l) {
    const Graph g = ladder(l);
    CHECK(bow_defect(g, DistanceMatrix(g), HalfInteger{}).mu == 2 * l);
  }
  const Graph c4 = cycle_graph(4);
  CHECK_THROWS_AS(bow_defect(c4, DistanceMatrix(c4), HalfInteger::from_doubled(-1)), InvalidArgument);
  // No overlap longer than the diameter.
  const auto far = bow_defect(c4, DistanceMatrix(c4), HalfInteger::from_integer(2));
  CHECK(far.mu == 0);
  CHECK_FALSE(far.witness);
}

TEST_CASE("oracle equivalence on random connected graphs") {
  for (std::uint64_t s = 0; s < 220; ++s) {
    const Graph g = sample(s);
    const DistanceMatrix d(g);
    CAPTURE(s);
    REQUIRE(alpha_index(g, d).index == oracle::alpha(g));
    const auto hyp = hyperbolicity(g, d);
    REQUIRE(hyp.delta.doubled() == oracle::hyperbolicity_x2(g));
    REQUIRE(interval_thinness(g, d).kappa == oracle::kappa(g));
    REQUIRE(slice_triangle_thinness(g, d).tau == oracle::tau(g));
    for (int l2 : {0, 1, 2, static_cast<int>(hyp.delta.doubled()), 3}) {
      REQUIRE(bow_defect(g, d, HalfInteger::from_doubled(l2)).mu == oracle::bow(g, l2));
    }
  }
}

TEST_CASE("invariants ignore vertex labels") {
  for (std::uint64_t s = 0; s < 40; ++s) {
    const Graph g = sample(s);
    std::vector<Vertex> perm(static_cast<std::size_t>(g.order()));
    std::iota(perm.begin(), perm.end(), 0);
    Rng rng(s + 1000);
    rng.shuffle(perm);
    const Graph h = oracle::relabel(g, perm);
    const DistanceMatrix dg(g);
    const DistanceMatrix dh(h);
    CHECK(alpha_index(g, dg).index == alpha_index(h, dh).index);
    CHECK(hyperbolicity(g, dg).delta == hyperbolicity(h, dh).delta);
    CHECK(interval_thinness(g, dg).kappa == interval_thinness(h, dh).kappa);
    CHECK(slice_triangle_thinness(g, dg).tau == slice_triangle_thinness(h, dh).tau);
    CHECK(bow_defect(g, dg, HalfInteger::from_doubled(1)).mu == bow_defect(h, dh, HalfInteger::from_doubled(1)).mu);
  }
}

TEST_CASE("zero hyperbolicity exactly on block graphs") {
  int blocks = 0;
  for (std::uint64_t s = 0; s < 150; ++s) {
    const Graph g = s % 3 == 0 ? random_block(3 + static_cast<Vertex>(s % 7), s) : sample(s);
    const bool zero = hyperbolicity(g, DistanceMatrix(g)).delta.doubled() == 0;
    CHECK(zero == oracle::is_block_graph(g));
    blocks += zero;
  }
  CHECK(blocks > 20);
}

TEST_CASE("corpus-style bounds") {
  for (std::uint64_t s = 0; s < 80; ++s) {
    const Graph g = sample(s);
    const DistanceMatrix d(g);
    const int i = alpha_index(g, d).index;
    const auto delta = hyperbolicity(g, d).delta;
    CHECK(delta.doubled() <= 2 * (i + (i + 2) / 2));
    CHECK(interval_thinness(g, d).kappa <= i + 1);
    CHECK(slice_triangle_thinness(g, d).tau <= 3 * (i + 1));
    CHECK(bow_defect(g, d, HalfInteger{}).mu == i);
    CHECK(bow_defect(g, d, delta).mu <= delta.doubled());
  }
}

TEST_CASE("results do not depend on the thread count") {
  const Graph g = random_connected(40, 90, 7);
  const DistanceMatrix d(g);
  parallel::set_thread_count(1);
  const auto a1 = alpha_index(g, d);
  const auto h1 = hyperbolicity(g, d);
  const auto k1 = interval_thinness(g, d);
  const auto t1 = slice_triangle_thinness(g, d);
  parallel::set_thread_count(5);
  const auto a5 = alpha_index(g, d);
  const auto h5 = hyperbolicity(g, d);
  const auto k5 = interval_thinness(g, d);
  const auto t5 = slice_triangle_thinness(g, d);
  parallel::set_thread_count(0);
  CHECK(a1.witness->u == a5.witness->u);
  CHECK(a1.witness->x == a5.witness->x);
  CHECK(h1.witness.u == h5.witness.u);
  CHECK(h1.witness.x == h5.witness.x);
  CHECK(k1.witness->x == k5.witness->x);
  CHECK(t1.witness->x_prime == t5.witness->x_prime);
}
