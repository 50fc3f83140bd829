#include "amg/transforms.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <map>
#include <utility>

#include "amg/error.hpp"
#include "amg/parallel.hpp"

namespace amg {

Subdivision subdivide(const Graph& g) {
  const Vertex n = g.order();
  auto edges = g.edges();
  std::vector<Edge> split;
  split.reserve(2 * edges.size());
  for (std::size_t j = 0; j < edges.size(); ++j) {
    const Vertex mid = n + static_cast<Vertex>(j);
    split.push_back({edges[j].u, mid});
    split.push_back({edges[j].v, mid});
  }
  Graph sub(n + static_cast<Vertex>(edges.size()), split);
  return Subdivision{std::move(sub), n, std::move(edges)};
}

Graph power(const Graph& g, int lambda) {
  if (lambda < 1) throw InvalidArgument("graph power exponent must be at least 1, got " + std::to_string(lambda));
  const Vertex n = g.order();
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    const auto dist = bfs_distances(g, u);
    for (Vertex v = u + 1; v < n; ++v) {
      if (dist[static_cast<std::size_t>(v)] <= lambda) edges.push_back({u, v});
    }
  }
  return Graph(n, edges);
}

bool is_extremal(const DistanceMatrix& d, const std::vector<int>& f) {
  const Vertex n = d.order();
  if (f.size() != static_cast<std::size_t>(n)) return false;
  for (Vertex u = 0; u < n; ++u) {
    int best = -f[static_cast<std::size_t>(u)];
    for (Vertex v = 0; v < n; ++v) best = std::max(best, d(u, v) - f[static_cast<std::size_t>(v)]);
    if (best != f[static_cast<std::size_t>(u)]) return false;
  }
  return true;
}

namespace {

// Backtracking over vertices in id order with values ascending. An extremal
// function is feasible, 1-Lipschitz and bounded by eccentricities; bounds
// implied by the assigned prefix are kept per unassigned vertex.
class ExtremalSearch {
 public:
  ExtremalSearch(const DistanceMatrix& d, std::uint64_t cap, std::atomic<std::uint64_t>& found)
      : d_(d), n_(d.order()), cap_(cap), found_(found), f_(static_cast<std::size_t>(n_), 0) {
    const auto ecc = eccentricities(d).ecc;
    lo_.assign(static_cast<std::size_t>(n_), 0);
    hi_ = ecc;
  }

  void run_with_first(int value, std::vector<ExtremalFunction>& out) {
    out_ = &out;
    if (value > hi_[0]) return;
    assign(0, value, lo_, hi_);
  }

 private:
  std::size_t at(Vertex v) const { return static_cast<std::size_t>(v); }

  void assign(Vertex k, int value, const std::vector<int>& lo, const std::vector<int>& hi) {
    f_[at(k)] = value;
    std::vector<int> nlo(lo);
    std::vector<int> nhi(hi);
    for (Vertex w = k + 1; w < n_; ++w) {
      const int dk = d_(k, w);
      nlo[at(w)] = std::max({nlo[at(w)], dk - value, value - dk});
      nhi[at(w)] = std::min(nhi[at(w)], value + dk);
      if (nlo[at(w)] > nhi[at(w)]) return;
    }
    if (!tightness_possible(k, nlo, nhi)) return;
    if (k + 1 == n_) {
      if (!is_extremal(d_, f_)) return;
      if (++found_ > cap_) throw CapExceeded("injective hull size", found_.load(), cap_);
      out_->push_back(ExtremalFunction{f_});
      return;
    }
    for (int x = nlo[at(k + 1)]; x <= nhi[at(k + 1)]; ++x) assign(k + 1, x, nlo, nhi);
  }

  // Every assigned vertex needs a partner v with f(j) + f(v) = d(j,v), either
  // already assigned or still able to take that value.
  bool tightness_possible(Vertex k, const std::vector<int>& lo, const std::vector<int>& hi) const {
    for (Vertex j = 0; j <= k; ++j) {
      const int fj = f_[at(j)];
      if (fj == 0) continue;
      bool ok = false;
      for (Vertex v = 0; v <= k && !ok; ++v) ok = fj + f_[at(v)] == d_(j, v);
      for (Vertex v = k + 1; v < n_ && !ok; ++v) {
        const int need = d_(j, v) - fj;
        ok = lo[at(v)] <= need && need <= hi[at(v)];
      }
      if (!ok) return false;
    }
    return true;
  }

  const DistanceMatrix& d_;
  Vertex n_;
  std::uint64_t cap_;
  std::atomic<std::uint64_t>& found_;
  std::vector<int> f_;
  std::vector<int> lo_;
  std::vector<int> hi_;
  std::vector<ExtremalFunction>* out_ = nullptr;
};

}  // namespace

std::vector<ExtremalFunction> extremal_functions(const DistanceMatrix& d, std::uint64_t cap) {
  const auto ecc0 = eccentricities(d).ecc[0];
  std::atomic<std::uint64_t> found{0};
  std::vector<std::vector<ExtremalFunction>> parts(static_cast<std::size_t>(ecc0) + 1);
  parallel::for_each_index(parts.size(), [&](std::size_t value) {
    ExtremalSearch search(d, cap, found);
    search.run_with_first(static_cast<int>(value), parts[value]);
  });
  std::vector<ExtremalFunction> all;
  for (auto& p : parts) all.insert(all.end(), std::make_move_iterator(p.begin()), std::make_move_iterator(p.end()));
  std::sort(all.begin(), all.end());
  return all;
}

HullGraph injective_hull(const Graph& g, std::uint64_t cap) { return injective_hull(g, DistanceMatrix(g), cap); }

HullGraph injective_hull(const Graph& g, const DistanceMatrix& d, std::uint64_t cap) {
  const Vertex n = g.order();
  if (cap < static_cast<std::uint64_t>(n)) {
    throw InvalidArgument("hull cap " + std::to_string(cap) + " is below the vertex count " + std::to_string(n));
  }
  auto functions = extremal_functions(d, cap);

  std::vector<Vertex> original_to_hull;
  for (Vertex v = 0; v < n; ++v) {
    ExtremalFunction dv;
    for (Vertex w = 0; w < n; ++w) dv.values.push_back(d(v, w));
    const auto it = std::lower_bound(functions.begin(), functions.end(), dv);
    if (it == functions.end() || *it != dv) throw Error("distance function of vertex " + std::to_string(v) + " is not extremal");
    original_to_hull.push_back(static_cast<Vertex>(it - functions.begin()));
  }

  // Adjacent functions differ by at most 1 everywhere, so bucketing by the
  // first two coordinates limits comparisons to the 3x3 neighboring buckets.
  auto key = [&](const ExtremalFunction& f) {
    return std::pair<int, int>{f.values[0], n > 1 ? f.values[1] : 0};
  };
  std::map<std::pair<int, int>, std::vector<std::size_t>> buckets;
  for (std::size_t i = 0; i < functions.size(); ++i) buckets[key(functions[i])].push_back(i);

  std::vector<std::vector<Edge>> found(functions.size());
  parallel::for_each_index(functions.size(), [&](std::size_t i) {
    const auto& f = functions[i].values;
    const auto [a, b] = key(functions[i]);
    for (int da = -1; da <= 1; ++da) {
      for (int db = -1; db <= 1; ++db) {
        const auto it = buckets.find({a + da, b + db});
        if (it == buckets.end()) continue;
        for (std::size_t j : it->second) {
          if (j <= i) continue;
          const auto& h = functions[j].values;
          int sup = 0;
          for (std::size_t t = 0; t < f.size() && sup <= 1; ++t) sup = std::max(sup, std::abs(f[t] - h[t]));
          if (sup == 1) found[i].push_back({static_cast<Vertex>(i), static_cast<Vertex>(j)});
        }
      }
    }
  });
  std::vector<Edge> edges;
  for (auto& part : found) edges.insert(edges.end(), part.begin(), part.end());

  Graph hull(static_cast<Vertex>(functions.size()), edges);
  return HullGraph{std::move(hull), std::move(functions), std::move(original_to_hull)};
}

bool is_helly(const Graph& g, const DistanceMatrix& d, std::uint64_t cap) {
  return extremal_functions(d, std::max<std::uint64_t>(cap, static_cast<std::uint64_t>(g.order()))).size() ==
         static_cast<std::size_t>(g.order());
}

}  // namespace amg
