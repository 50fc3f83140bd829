// Distance matrix by repeated BFS, with interval, slice and disk queries.
#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "amg/graph.hpp"

namespace amg {

// Dense n x n hop-count matrix, computed once and shared read-only.
class DistanceMatrix {
 public:
  static constexpr Vertex kDefaultMaxVertices = 20000;

  // Throws CapExceeded when g has more than max_vertices vertices.
  explicit DistanceMatrix(const Graph& g, Vertex max_vertices = kDefaultMaxVertices);

  Vertex order() const noexcept { return n_; }
  int operator()(Vertex u, Vertex v) const {
    return data_[static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v)];
  }
  std::span<const std::uint16_t> row(Vertex u) const {
    return {data_.data() + static_cast<std::size_t>(u) * static_cast<std::size_t>(n_),
            static_cast<std::size_t>(n_)};
  }

 private:
  Vertex n_ = 0;
  std::vector<std::uint16_t> data_;
};

DistanceMatrix distance_matrix(const Graph& g);

// Single-source BFS; -1 marks unreachable vertices. When `excluded` is set the
// search runs in the graph with that vertex deleted.
std::vector<int> bfs_distances(const Graph& g, Vertex source, std::optional<Vertex> excluded = {});

inline bool in_interval(const DistanceMatrix& d, Vertex u, Vertex v, Vertex w) {
  return d(u, w) + d(w, v) == d(u, v);
}

enum class IntervalKind { Closed, Open };

// I(u,v), or I(u,v) \ {u,v} for the open variant; sorted ids.
std::vector<Vertex> interval(const DistanceMatrix& d, Vertex u, Vertex v,
                             IntervalKind kind = IntervalKind::Closed);

// S_k(u,v); throws InvalidArgument unless 0 <= k <= d(u,v).
std::vector<Vertex> slice(const DistanceMatrix& d, Vertex u, Vertex v, int k);

// D(v,r), sorted ids.
std::vector<Vertex> disk(const DistanceMatrix& d, Vertex v, int r);

struct Eccentricities {
  std::vector<int> ecc;
  int diameter = 0;
  int radius = 0;
};

Eccentricities eccentricities(const DistanceMatrix& d);

}  // namespace amg
