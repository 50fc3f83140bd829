#include "amg/metric_triangles.hpp"

#include <algorithm>
#include <optional>

#include "amg/error.hpp"
#include "amg/parallel.hpp"

namespace amg {

namespace {

// Smallest neighbor of c lying in both I(c,a) and I(c,b). Any vertex other
// than c in the intersection has such a neighbor on its geodesic from c.
std::optional<Vertex> inward_step(const Graph& g, const DistanceMatrix& d, Vertex c, Vertex a, Vertex b) {
  const int da = d(c, a);
  const int db = d(c, b);
  if (da == 0 || db == 0) return std::nullopt;
  for (Vertex x : g.neighbors(c)) {
    if (d(x, a) == da - 1 && d(x, b) == db - 1) return x;
  }
  return std::nullopt;
}

void check_cap(const Graph& g, Vertex cap) {
  if (g.order() > cap) throw CapExceeded("metric triangle enumeration vertex count", g.order(), cap);
}

}  // namespace

bool is_metric_triangle(const Graph& g, const DistanceMatrix& d, Vertex u, Vertex v, Vertex w) {
  return !inward_step(g, d, u, v, w) && !inward_step(g, d, v, w, u) && !inward_step(g, d, w, u, v);
}

MetricTriangleList enumerate_metric_triangles(const Graph& g, const DistanceMatrix& d, Vertex cap) {
  check_cap(g, cap);
  const Vertex n = g.order();
  std::vector<std::vector<MetricTriangle>> by_first(static_cast<std::size_t>(n));
  parallel::for_each_index(static_cast<std::size_t>(n), [&](std::size_t ui) {
    const auto u = static_cast<Vertex>(ui);
    for (Vertex v = u + 1; v < n; ++v) {
      for (Vertex w = v + 1; w < n; ++w) {
        if (!is_metric_triangle(g, d, u, v, w)) continue;
        std::array<int, 3> type{d(u, v), d(v, w), d(w, u)};
        by_first[ui].push_back({u, v, w, type, *std::max_element(type.begin(), type.end())});
      }
    }
  });

  MetricTriangleList out;
  for (auto& part : by_first) out.triangles.insert(out.triangles.end(), part.begin(), part.end());
  for (Vertex v = 0; v < n; ++v) out.degenerate.push_back(v);
  return out;
}

int max_metric_triangle_side(const Graph& g, const DistanceMatrix& d, Vertex cap) {
  int best = 0;
  for (const auto& t : enumerate_metric_triangles(g, d, cap).triangles) best = std::max(best, t.max_side);
  return best;
}

std::array<Vertex, 3> quasi_median(const Graph& g, const DistanceMatrix& d, Vertex u, Vertex v, Vertex w) {
  std::array<Vertex, 3> c{u, v, w};
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i = 0; i < 3; ++i) {
      const auto step = inward_step(g, d, c[i], c[(i + 1) % 3], c[(i + 2) % 3]);
      if (step) {
        c[i] = *step;
        moved = true;
      }
    }
  }
  return c;
}

}  // namespace amg
