#include "amg/pattern_check.hpp"

#include <algorithm>

#include "amg/generators.hpp"

namespace amg {

namespace {

std::size_t at(Vertex v) { return static_cast<std::size_t>(v); }

// Smallest (a, b, c) with a < b members, c in I(a,b) outside the set.
std::optional<ConvexityWitness> first_escape(const DistanceMatrix& d, const std::vector<Vertex>& members,
                                             const std::vector<bool>& inside) {
  const Vertex n = d.order();
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      const Vertex a = members[i];
      const Vertex b = members[j];
      const int dab = d(a, b);
      if (dab < 2) continue;
      for (Vertex c = 0; c < n; ++c) {
        if (!inside[at(c)] && d(a, c) + d(c, b) == dab) return ConvexityWitness{a, b, c};
      }
    }
  }
  return std::nullopt;
}

}  // namespace

ConvexityResult is_convex_set(const DistanceMatrix& d, std::vector<Vertex> set) {
  std::sort(set.begin(), set.end());
  set.erase(std::unique(set.begin(), set.end()), set.end());
  std::vector<bool> inside(at(d.order()), false);
  for (Vertex v : set) inside[at(v)] = true;
  ConvexityResult result;
  result.witness = first_escape(d, set, inside);
  result.convex = !result.witness;
  return result;
}

DiskConvexityResult all_disks_convex(const Graph& g, const DistanceMatrix& d) {
  const Vertex n = g.order();
  const auto ecc = eccentricities(d).ecc;
  std::vector<bool> inside(at(n));
  for (Vertex v = 0; v < n; ++v) {
    for (int k = 1; k <= ecc[at(v)]; ++k) {
      const auto members = disk(d, v, k);
      std::fill(inside.begin(), inside.end(), false);
      for (Vertex m : members) inside[at(m)] = true;
      if (const auto w = first_escape(d, members, inside)) {
        return {false, DiskWitness{v, k, w->a, w->b, w->c}};
      }
    }
  }
  return {};
}

SliceCliqueResult s1_slices_clique(const Graph& g, const DistanceMatrix& d) {
  const Vertex n = g.order();
  std::vector<Vertex> s1;
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = 0; y < n; ++y) {
      const int dxy = d(x, y);
      if (dxy < 2) continue;
      s1.clear();
      for (Vertex a : g.neighbors(x)) {
        if (d(a, y) == dxy - 1) s1.push_back(a);
      }
      for (std::size_t i = 0; i < s1.size(); ++i) {
        for (std::size_t j = i + 1; j < s1.size(); ++j) {
          if (!g.adjacent(s1[i], s1[j])) return {false, SliceCliqueWitness{x, y, s1[i], s1[j]}};
        }
      }
    }
  }
  return {};
}

namespace {

class EmbeddingSearch {
 public:
  EmbeddingSearch(const Graph& pattern, const Graph& host, const DistanceMatrix& host_d)
      : pattern_(pattern), host_(host), hd_(host_d), pd_(pattern), map_(at(pattern.order()), -1) {
    const Vertex k = pattern.order();
    std::vector<bool> placed(at(k), false);
    order_.push_back(0);
    placed[0] = true;
    while (order_.size() < at(k)) {
      Vertex next = -1;
      for (Vertex p = 0; p < k && next < 0; ++p) {
        if (placed[at(p)]) continue;
        for (Vertex q : pattern.neighbors(p)) {
          if (placed[at(q)]) {
            next = p;
            break;
          }
        }
      }
      placed[at(next)] = true;
      order_.push_back(next);
    }
    for (std::size_t i = 0; i < order_.size(); ++i) {
      Vertex anchor = -1;
      for (std::size_t j = 0; j < i && anchor < 0; ++j) {
        if (pattern.adjacent(order_[i], order_[j])) anchor = order_[j];
      }
      anchor_.push_back(anchor);
    }
  }

  std::optional<IsometricEmbedding> run() {
    if (pattern_.order() > host_.order()) return std::nullopt;
    if (place(0)) return map_;
    return std::nullopt;
  }

 private:
  bool fits(std::size_t depth, Vertex h) const {
    const Vertex p = order_[depth];
    for (std::size_t j = 0; j < depth; ++j) {
      const Vertex q = order_[j];
      if (hd_(h, map_[at(q)]) != pd_(p, q)) return false;
    }
    return true;
  }

  bool place(std::size_t depth) {
    if (depth == order_.size()) return true;
    const Vertex p = order_[depth];
    auto attempt = [&](Vertex h) {
      if (!fits(depth, h)) return false;
      map_[at(p)] = h;
      if (place(depth + 1)) return true;
      map_[at(p)] = -1;
      return false;
    };
    if (anchor_[depth] < 0) {
      for (Vertex h = 0; h < host_.order(); ++h) {
        if (attempt(h)) return true;
      }
    } else {
      for (Vertex h : host_.neighbors(map_[at(anchor_[depth])])) {
        if (attempt(h)) return true;
      }
    }
    return false;
  }

  const Graph& pattern_;
  const Graph& host_;
  const DistanceMatrix& hd_;
  DistanceMatrix pd_;
  std::vector<Vertex> order_;
  std::vector<Vertex> anchor_;
  IsometricEmbedding map_;
};

}  // namespace

std::optional<IsometricEmbedding> find_isometric_embedding(const Graph& pattern, const Graph& host,
                                                           const DistanceMatrix& host_d) {
  return EmbeddingSearch(pattern, host, host_d).run();
}

std::optional<IsometricEmbedding> find_isometric_embedding(const Graph& pattern, const Graph& host) {
  return find_isometric_embedding(pattern, host, DistanceMatrix(host));
}

int max_isometric_cycle(const Graph& g, const DistanceMatrix& d) {
  const int diam = eccentricities(d).diameter;
  const int top = std::min(2 * diam + 1, static_cast<int>(g.order()));
  for (int l = top; l >= 3; --l) {
    if (find_isometric_embedding(cycle_graph(l), g, d)) return l;
  }
  return 0;
}

std::string to_string(CharacterizationClause clause) {
  switch (clause) {
    case CharacterizationClause::Holds:
      return "holds";
    case CharacterizationClause::DiskNotConvex:
      return "disk-not-convex";
    case CharacterizationClause::ContainsW6pp:
      return "isometric-w6pp";
  }
  return "unknown";
}

CharacterizationResult alpha1_characterization(const Graph& g, const DistanceMatrix& d) {
  CharacterizationResult result;
  const auto disks = all_disks_convex(g, d);
  if (!disks.convex) {
    result.alpha1 = false;
    result.reason = CharacterizationClause::DiskNotConvex;
    result.disk = disks.witness;
    return result;
  }
  if (auto e = find_isometric_embedding(w6pp(), g, d)) {
    result.alpha1 = false;
    result.reason = CharacterizationClause::ContainsW6pp;
    result.w6pp = std::move(e);
  }
  return result;
}

EqualityCaseResult check_equality_case(const Graph& g, const DistanceMatrix& d) {
  const Vertex n = g.order();
  EqualityCaseResult result;
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex v : g.neighbors(x)) {
      for (Vertex y = 0; y < n; ++y) {
        if (d(x, y) != d(v, y) + 1) continue;
        for (Vertex u = 0; u < n; ++u) {
          if (d(v, u) != d(x, u) + 1) continue;
          ++result.configurations;
          const bool equality = d(u, y) == d(u, x) + d(v, y);
          bool pair = false;
          for (Vertex xp : g.neighbors(x)) {
            if (d(xp, u) != d(x, u) - 1) continue;
            for (Vertex vp : g.neighbors(v)) {
              if (d(vp, y) == d(v, y) - 1 && d(xp, vp) == 2) {
                pair = true;
                break;
              }
            }
            if (pair) break;
          }
          if (equality != pair && result.holds) {
            result.holds = false;
            result.witness = EqualityCaseWitness{x, y, v, u, equality, pair};
          }
        }
      }
    }
  }
  return result;
}

}  // namespace amg
