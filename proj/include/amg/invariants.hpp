// Exact metric invariants, each with a deterministic extremal witness.
//
// Every witness is the lexicographically smallest tuple attaining the
// extremum, so serial and parallel runs report identical results.
#pragma once

#include <array>
#include <optional>

#include "amg/distance.hpp"
#include "amg/graph.hpp"
#include "amg/half_integer.hpp"

namespace amg {

// v in I(u,w), w in I(v,x), vw an edge; defect = d(u,v) + 1 + d(w,x) - d(u,x).
struct AlphaWitness {
  Vertex u, v, w, x;
  int defect;
};

struct AlphaResult {
  int index = 0;
  std::optional<AlphaWitness> witness;  // none when the graph has no edge
};

// Smallest i for which the graph is alpha_i-metric.
AlphaResult alpha_index(const Graph& g, const DistanceMatrix& d);

// Pairing sums d(u,x)+d(v,w), d(u,w)+d(v,x), d(u,v)+d(w,x), sorted descending.
struct FourPointWitness {
  Vertex u, v, w, x;
  std::array<int, 3> sums;
  HalfInteger delta;
};

struct HyperbolicityResult {
  HalfInteger delta;
  FourPointWitness witness;
};

// Gromov hyperbolicity via the four-point condition over all quadruples.
HyperbolicityResult hyperbolicity(const Graph& g, const DistanceMatrix& d);

struct ThinnessWitness {
  Vertex u, v;
  int k;
  Vertex x, y;
  int dist;
};

struct ThinnessResult {
  int kappa = 0;
  std::optional<ThinnessWitness> witness;  // none when n == 1
};

// Largest diameter of a slice S_k(u,v) over all u, v, k.
ThinnessResult interval_thinness(const Graph& g, const DistanceMatrix& d);

// (x|y)_z = (d(x,z) + d(y,z) - d(x,y)) / 2.
HalfInteger gromov_product(const DistanceMatrix& d, Vertex x, Vertex y, Vertex z);

// Apex y, k = floor((x|z)_y), z_prime in S_k(y,x), x_prime in S_k(y,z).
struct SliceTriangleWitness {
  Vertex x, y, z;
  int k;
  Vertex z_prime, x_prime;
  int dist;
};

struct SliceTriangleResult {
  int tau = 0;
  std::optional<SliceTriangleWitness> witness;  // none when n == 1
};

SliceTriangleResult slice_triangle_thinness(const Graph& g, const DistanceMatrix& d);

// v in I(u,w), w in I(v,x), overlap d(v,w) > lambda.
struct BowWitness {
  Vertex u, v, w, x;
  int overlap;
  int defect;
};

struct BowResult {
  int mu = 0;
  std::optional<BowWitness> witness;  // none when no pair overlaps by more than lambda
};

// Smallest mu for which the graph satisfies the (lambda, mu)-bow metric.
// Throws InvalidArgument for negative lambda.
BowResult bow_defect(const Graph& g, const DistanceMatrix& d, HalfInteger lambda);

}  // namespace amg
