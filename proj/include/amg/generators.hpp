// Deterministic graph families and seeded random corpora.
#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "amg/graph.hpp"

namespace amg {

// 64-bit Mersenne Twister with rejection sampling for bounded draws, so a
// (family, params, seed) triple yields the same graph on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [0, bound); bound must be positive.
  std::uint64_t below(std::uint64_t bound);
  bool coin() { return (engine_() >> 63) != 0; }

  template <class T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) std::swap(items[i - 1], items[below(i)]);
  }

 private:
  std::mt19937_64 engine_;
};

Graph path_graph(Vertex n);
Graph cycle_graph(Vertex n);
Graph complete_graph(Vertex n);
Graph star_graph(Vertex n);  // center 0, leaves 1..n-1
Graph hypercube(int dim);

// W, X, Y, Z blocks of size p: w_i = i, x_i = p+i, y_i = 2p+i, z_i = 3p+i.
Graph g_p(int p);

// Two columns a_j = j, b_j = n+j (triangular grid) or a_j = j, b_j = l+1+j
// (ladder); the named corners are u = a_0, x = b_0, v = a_last, w = b_last.
struct GridCorners {
  Vertex u, x, v, w;
};
Graph triangular_grid(int n);
GridCorners triangular_grid_corners(int n);
Graph ladder(int l);
GridCorners ladder_corners(int l);

// Rim 0..5, hub 6, vertex 7 on rim 1 and 2, vertex 8 on rim 3 and 4.
Graph w6pp();

Graph random_connected(Vertex n, std::int64_t m, std::uint64_t seed);
Graph random_chordal(Vertex n, std::uint64_t seed);
Graph random_tree(Vertex n, std::uint64_t seed);
Graph random_block(Vertex n, std::uint64_t seed);

using FamilyParams = std::map<std::string, std::int64_t>;

// Dispatch by family name; throws InvalidArgument for unknown families,
// unknown or missing parameters, and out-of-range values.
Graph generate(std::string_view family, const FamilyParams& params, std::uint64_t seed = 0);

const std::vector<std::string>& family_names();
bool is_random_family(std::string_view family);

}  // namespace amg
