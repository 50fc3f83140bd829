// Metric triangles and quasi-medians.
#pragma once

#include <array>
#include <vector>

#include "amg/distance.hpp"
#include "amg/graph.hpp"

namespace amg {

// A triple u < v < w where each corner's two intervals meet only in the corner:
// I(u,v) ∩ I(u,w) = {u}, I(v,u) ∩ I(v,w) = {v}, I(w,u) ∩ I(w,v) = {w}.
struct MetricTriangle {
  Vertex u, v, w;
  std::array<int, 3> type;  // (d(u,v), d(v,w), d(w,u))
  int max_side;

  auto operator<=>(const MetricTriangle&) const = default;
};

struct MetricTriangleList {
  std::vector<MetricTriangle> triangles;  // sorted by (u, v, w)
  std::vector<Vertex> degenerate;         // v standing for the triple (v, v, v)
};

inline constexpr Vertex kDefaultTriangleCap = 512;

bool is_metric_triangle(const Graph& g, const DistanceMatrix& d, Vertex u, Vertex v, Vertex w);

// Throws CapExceeded when n > cap.
MetricTriangleList enumerate_metric_triangles(const Graph& g, const DistanceMatrix& d,
                                              Vertex cap = kDefaultTriangleCap);

// 0 when no triangle has three distinct corners.
int max_metric_triangle_side(const Graph& g, const DistanceMatrix& d, Vertex cap = kDefaultTriangleCap);

// Hill descent: corners u', v', w' take turns stepping to their smallest-id
// neighbor lying on geodesics toward both other corners, until none can move.
std::array<Vertex, 3> quasi_median(const Graph& g, const DistanceMatrix& d, Vertex u, Vertex v, Vertex w);

}  // namespace amg
