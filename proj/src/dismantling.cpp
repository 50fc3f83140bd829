#include "amg/dismantling.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "amg/error.hpp"

namespace amg {

namespace {

std::size_t at(Vertex v) { return static_cast<std::size_t>(v); }

// position[v] = index of v in the ordering.
std::vector<std::size_t> positions(const Graph& g, const VertexOrdering& o) {
  const auto n = at(g.order());
  if (o.order.size() != n) throw InvalidArgument("ordering length differs from the vertex count");
  std::vector<std::size_t> pos(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const Vertex v = o.order[i];
    if (v < 0 || at(v) >= n || pos[at(v)] != n) throw InvalidArgument("ordering is not a permutation of the vertices");
    pos[at(v)] = i;
  }
  return pos;
}

void require_positive(int value, const char* name) {
  if (value < 1) throw InvalidArgument(std::string(name) + " must be at least 1, got " + std::to_string(value));
}

}  // namespace

VertexOrdering bfs_ordering(const Graph& g, Vertex u) {
  std::vector<bool> seen(at(g.order()), false);
  std::vector<Vertex> visit;
  std::deque<Vertex> queue{u};
  seen[at(u)] = true;
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop_front();
    visit.push_back(v);
    for (Vertex w : g.neighbors(v)) {
      if (!seen[at(w)]) {
        seen[at(w)] = true;
        queue.push_back(w);
      }
    }
  }
  std::reverse(visit.begin(), visit.end());
  return VertexOrdering{std::move(visit), u};
}

bool is_bfs_ordering(const Graph& g, const DistanceMatrix& d, const VertexOrdering& o) {
  try {
    positions(g, o);
  } catch (const InvalidArgument&) {
    return false;
  }
  if (o.order.back() != o.base) return false;
  for (std::size_t k = 0; k + 1 < o.order.size(); ++k) {
    if (d(o.base, o.order[k]) < d(o.base, o.order[k + 1])) return false;
  }
  return true;
}

OrderingCheck is_dismantling_ordering(const Graph& g, const VertexOrdering& o) {
  const auto pos = positions(g, o);
  const std::size_t n = o.order.size();
  std::vector<Vertex> closed;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    const Vertex vk = o.order[k];
    closed.assign(1, vk);
    for (Vertex w : g.neighbors(vk)) {
      if (pos[at(w)] > k) closed.push_back(w);
    }
    // v_k itself must lie in N[v_l], so v_l is a later neighbor of v_k.
    bool found = false;
    for (std::size_t i = 1; i < closed.size() && !found; ++i) {
      const Vertex vl = closed[i];
      found = std::all_of(closed.begin(), closed.end(), [&](Vertex x) { return x == vl || g.adjacent(x, vl); });
    }
    if (!found) return {false, static_cast<int>(k) + 1};
  }
  return {};
}

OrderingCheck is_ss_dismantling_ordering(const Graph& g, const DistanceMatrix& d, const VertexOrdering& o, int s,
                                         int s_prime, bool star) {
  require_positive(s, "s");
  require_positive(s_prime, "s'");
  positions(g, o);
  const std::size_t n = o.order.size();
  std::vector<Vertex> lhs;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    const Vertex vk = o.order[k];
    if (star) {
      lhs.clear();
      for (std::size_t i = k; i < n; ++i) {
        if (d(vk, o.order[i]) <= s) lhs.push_back(o.order[i]);
      }
    }
    bool found = false;
    for (std::size_t l = k + 1; l < n && !found; ++l) {
      const Vertex vl = o.order[l];
      if (!star) {
        const auto dist = bfs_distances(g, vk, vl);
        lhs.clear();
        for (std::size_t i = k; i < n; ++i) {
          const int dv = dist[at(o.order[i])];
          if (dv >= 0 && dv <= s) lhs.push_back(o.order[i]);
        }
      }
      found = std::all_of(lhs.begin(), lhs.end(), [&](Vertex x) { return d(vl, x) <= s_prime; });
    }
    if (!found) return {false, static_cast<int>(k) + 1};
  }
  return {};
}

DismantleResult greedy_dismantle(const Graph& g) {
  const Vertex n = g.order();
  std::vector<bool> alive(at(n), true);
  DismantleResult result;

  // v is dominated by a live neighbor u when N[v] ⊆ N[u] among live vertices.
  auto dominated = [&](Vertex v) {
    for (Vertex u : g.neighbors(v)) {
      if (!alive[at(u)]) continue;
      bool covers = true;
      for (Vertex x : g.neighbors(v)) {
        if (alive[at(x)] && x != u && !g.adjacent(u, x)) {
          covers = false;
          break;
        }
      }
      if (covers) return true;
    }
    return false;
  };

  for (Vertex left = n; left > 1; --left) {
    Vertex pick = -1;
    for (Vertex v = 0; v < n && pick < 0; ++v) {
      if (alive[at(v)] && dominated(v)) pick = v;
    }
    if (pick < 0) {
      for (Vertex v = 0; v < n; ++v) {
        if (alive[at(v)]) result.kernel.push_back(v);
      }
      return result;
    }
    alive[at(pick)] = false;
    result.ordering.push_back(pick);
  }
  for (Vertex v = 0; v < n; ++v) {
    if (alive[at(v)]) result.ordering.push_back(v);
  }
  result.dismantlable = true;
  return result;
}

}  // namespace amg
