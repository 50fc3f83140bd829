// 1-subdivision, graph powers and the injective (Helly) hull.
#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "amg/distance.hpp"
#include "amg/graph.hpp"

namespace amg {

// Vertices 0..original_count-1 keep their ids; vertex original_count + j
// subdivides edge_of[j], listed in canonical edge order.
struct Subdivision {
  Graph graph;
  Vertex original_count;
  std::vector<Edge> edge_of;

  bool is_original(Vertex v) const { return v < original_count; }
};

Subdivision subdivide(const Graph& g);

// uv is an edge iff 0 < d(u,v) <= lambda. Throws InvalidArgument for lambda < 1.
Graph power(const Graph& g, int lambda);

// Integer labeling f with f(u) = max_v (d(u,v) - f(v)) for every u.
struct ExtremalFunction {
  std::vector<int> values;

  auto operator<=>(const ExtremalFunction&) const = default;
};

bool is_extremal(const DistanceMatrix& d, const std::vector<int>& f);

inline constexpr std::uint64_t kDefaultHullCap = 50000;

// All extremal functions in ascending lexicographic order.
// Throws CapExceeded once more than cap functions are found.
std::vector<ExtremalFunction> extremal_functions(const DistanceMatrix& d, std::uint64_t cap = kDefaultHullCap);

struct HullGraph {
  Graph hull;                              // vertex i is functions[i]
  std::vector<ExtremalFunction> functions;
  std::vector<Vertex> original_to_hull;    // v -> id of d(v, .)
};

// Functions at sup-distance exactly 1 are adjacent.
// Throws InvalidArgument when cap < n, CapExceeded when the hull outgrows cap.
HullGraph injective_hull(const Graph& g, std::uint64_t cap = kDefaultHullCap);
HullGraph injective_hull(const Graph& g, const DistanceMatrix& d, std::uint64_t cap = kDefaultHullCap);

// True iff every extremal function is a distance function d(v, .).
bool is_helly(const Graph& g, const DistanceMatrix& d, std::uint64_t cap = kDefaultHullCap);

}  // namespace amg
