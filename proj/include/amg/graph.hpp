// Immutable simple connected undirected graphs and the edge-list format.
#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace amg {

// Vertices are dense ids 0..n-1.
using Vertex = std::int32_t;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  auto operator<=>(const Edge&) const = default;
};

// Simple, connected, undirected graph with sorted adjacency lists.
// Construction validates every invariant and throws GraphError otherwise.
class Graph {
 public:
  Graph(Vertex n, std::span<const Edge> edges);
  Graph(Vertex n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  Vertex order() const noexcept { return static_cast<Vertex>(adj_.size()); }
  std::size_t size() const noexcept { return m_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }
  bool adjacent(Vertex u, Vertex v) const;

  // Canonical edge list: u < v, lexicographic.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::size_t m_ = 0;
};

// Edge-list text: '#' comment lines, header "n m", then m lines "u v".
// Throws GraphError naming the offending line.
Graph parse_graph(std::istream& in);
Graph parse_graph(std::string_view text);

// Canonical form: header then edges with u < v in lexicographic order.
void write_graph(std::ostream& out, const Graph& g);
std::string write_graph(const Graph& g);

}  // namespace amg
