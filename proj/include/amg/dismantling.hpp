// BFS orderings and classical, (s,s') and (s,s')* dismantling checks.
#pragma once

#include <optional>
#include <vector>

#include "amg/distance.hpp"
#include "amg/graph.hpp"

namespace amg {

// order[0..n-1] is v_1..v_n; a BFS(base) ordering ends with base.
struct VertexOrdering {
  std::vector<Vertex> order;
  Vertex base = 0;
};

// Reverse of the FIFO BFS visit order from u, neighbors in ascending id.
VertexOrdering bfs_ordering(const Graph& g, Vertex u);

// v_n = base and d(base, v_k) non-increasing in k.
bool is_bfs_ordering(const Graph& g, const DistanceMatrix& d, const VertexOrdering& o);

struct OrderingCheck {
  bool ok = true;
  std::optional<int> fail_k;  // 1-based position of the first v_k with no valid v_l
};

// For every k < n some l > k has N[v_k] ∩ V_k ⊆ N[v_l], V_k = {v_k, ..., v_n}.
// Throws InvalidArgument when o.order is not a permutation of the vertices.
OrderingCheck is_dismantling_ordering(const Graph& g, const VertexOrdering& o);

// star:     D(v_k, s) ∩ V_k ⊆ D(v_l, s')
// non-star: D_{G - v_l}(v_k, s) ∩ V_k ⊆ D(v_l, s')
// Throws InvalidArgument unless s, s_prime >= 1.
OrderingCheck is_ss_dismantling_ordering(const Graph& g, const DistanceMatrix& d, const VertexOrdering& o, int s,
                                         int s_prime, bool star);

struct DismantleResult {
  bool dismantlable = false;
  std::vector<Vertex> ordering;  // removal order, ending with the last vertex when dismantlable
  std::vector<Vertex> kernel;    // vertices left when no dominated vertex remains
};

// Repeatedly removes the smallest-id dominated vertex.
DismantleResult greedy_dismantle(const Graph& g);

}  // namespace amg
