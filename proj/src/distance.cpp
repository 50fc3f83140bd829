#include "amg/distance.hpp"

#include <algorithm>
#include <limits>

#include "amg/error.hpp"
#include "amg/parallel.hpp"

namespace amg {

DistanceMatrix::DistanceMatrix(const Graph& g, Vertex max_vertices) : n_(g.order()) {
  if (n_ > max_vertices) throw CapExceeded("distance matrix vertex count", static_cast<std::uint64_t>(n_),
                                           static_cast<std::uint64_t>(max_vertices));
  if (n_ > std::numeric_limits<std::uint16_t>::max()) {
    throw CapExceeded("distance matrix vertex count", static_cast<std::uint64_t>(n_),
                      std::numeric_limits<std::uint16_t>::max());
  }
  const auto n = static_cast<std::size_t>(n_);
  data_.assign(n * n, 0);
  parallel::for_each_index(n, [&](std::size_t s) {
    const std::vector<int> dist = bfs_distances(g, static_cast<Vertex>(s));
    std::copy(dist.begin(), dist.end(), data_.begin() + static_cast<std::ptrdiff_t>(s * n));
  });
}

DistanceMatrix distance_matrix(const Graph& g) { return DistanceMatrix(g); }

std::vector<int> bfs_distances(const Graph& g, Vertex source, std::optional<Vertex> excluded) {
  std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
  if (excluded && *excluded == source) return dist;
  std::vector<Vertex> queue;
  queue.reserve(static_cast<std::size_t>(g.order()));
  queue.push_back(source);
  dist[static_cast<std::size_t>(source)] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex v = queue[head];
    for (Vertex w : g.neighbors(v)) {
      if (excluded && w == *excluded) continue;
      if (dist[static_cast<std::size_t>(w)] < 0) {
        dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

std::vector<Vertex> interval(const DistanceMatrix& d, Vertex u, Vertex v, IntervalKind kind) {
  std::vector<Vertex> out;
  for (Vertex w = 0; w < d.order(); ++w) {
    if (kind == IntervalKind::Open && (w == u || w == v)) continue;
    if (in_interval(d, u, v, w)) out.push_back(w);
  }
  return out;
}

std::vector<Vertex> slice(const DistanceMatrix& d, Vertex u, Vertex v, int k) {
  if (k < 0 || k > d(u, v)) {
    throw InvalidArgument("slice index " + std::to_string(k) + " outside [0, " + std::to_string(d(u, v)) + "]");
  }
  std::vector<Vertex> out;
  for (Vertex w = 0; w < d.order(); ++w) {
    if (d(u, w) == k && in_interval(d, u, v, w)) out.push_back(w);
  }
  return out;
}

std::vector<Vertex> disk(const DistanceMatrix& d, Vertex v, int r) {
  std::vector<Vertex> out;
  for (Vertex w = 0; w < d.order(); ++w) {
    if (d(v, w) <= r) out.push_back(w);
  }
  return out;
}

Eccentricities eccentricities(const DistanceMatrix& d) {
  Eccentricities e;
  e.ecc.assign(static_cast<std::size_t>(d.order()), 0);
  for (Vertex v = 0; v < d.order(); ++v) {
    const auto row = d.row(v);
    e.ecc[static_cast<std::size_t>(v)] = *std::max_element(row.begin(), row.end());
  }
  e.diameter = *std::max_element(e.ecc.begin(), e.ecc.end());
  e.radius = *std::min_element(e.ecc.begin(), e.ecc.end());
  return e;
}

}  // namespace amg
