// Disk convexity, S_1 slices, isometric subgraphs, and the
// convexity-based characterization of alpha_1-metric graphs.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "amg/distance.hpp"
#include "amg/graph.hpp"

namespace amg {

// c lies in I(a,b) but not in the set.
struct ConvexityWitness {
  Vertex a, b, c;
};

struct ConvexityResult {
  bool convex = true;
  std::optional<ConvexityWitness> witness;  // lexicographically smallest (a, b, c)
};

ConvexityResult is_convex_set(const DistanceMatrix& d, std::vector<Vertex> set);

struct DiskWitness {
  Vertex center;
  int radius;
  Vertex a, b, c;
};

struct DiskConvexityResult {
  bool convex = true;
  std::optional<DiskWitness> witness;  // first failing (center, radius), then smallest (a, b, c)
};

// Every disk D(v,k), 1 <= k <= ecc(v).
DiskConvexityResult all_disks_convex(const Graph& g, const DistanceMatrix& d);

// a, b in S_1(x,y) are not adjacent.
struct SliceCliqueWitness {
  Vertex x, y, a, b;
};

struct SliceCliqueResult {
  bool cliques = true;
  std::optional<SliceCliqueWitness> witness;
};

// S_1(x,y) is a clique for every ordered pair with d(x,y) >= 2.
SliceCliqueResult s1_slices_clique(const Graph& g, const DistanceMatrix& d);

// mapping[p] = image of pattern vertex p; host distances equal pattern distances.
using IsometricEmbedding = std::vector<Vertex>;

// Exhaustive backtracking. Pattern vertices are placed in greedy connected
// order (vertex 0 first, then the smallest id adjacent to a placed vertex)
// with host candidates ascending, so the result is the first embedding in
// that order; for patterns whose greedy order is 0, 1, 2, ... (cycles, W6++)
// it is the lexicographically smallest mapping.
std::optional<IsometricEmbedding> find_isometric_embedding(const Graph& pattern, const Graph& host,
                                                           const DistanceMatrix& host_d);
std::optional<IsometricEmbedding> find_isometric_embedding(const Graph& pattern, const Graph& host);

// Largest l with an isometric C_l; 0 when there is none.
int max_isometric_cycle(const Graph& g, const DistanceMatrix& d);

enum class CharacterizationClause { Holds, DiskNotConvex, ContainsW6pp };

struct CharacterizationResult {
  bool alpha1 = true;
  CharacterizationClause reason = CharacterizationClause::Holds;
  std::optional<DiskWitness> disk;
  std::optional<IsometricEmbedding> w6pp;
};

std::string to_string(CharacterizationClause clause);

// alpha_1-metric iff all disks are convex and W6++ is not an isometric subgraph.
CharacterizationResult alpha1_characterization(const Graph& g, const DistanceMatrix& d);

// x ~ v, v in I(x,y), x in I(v,u). `equality` is d(u,y) = d(u,x) + d(v,y);
// `pair_exists` is the existence of x' in N(x) ∩ I(x,u), v' in N(v) ∩ I(v,y)
// with d(x',v') = 2.
struct EqualityCaseWitness {
  Vertex x, y, v, u;
  bool equality;
  bool pair_exists;
};

struct EqualityCaseResult {
  bool holds = true;
  std::optional<EqualityCaseWitness> witness;  // first configuration where the two sides differ
  std::uint64_t configurations = 0;
};

EqualityCaseResult check_equality_case(const Graph& g, const DistanceMatrix& d);

}  // namespace amg
