#include "amg/invariants.hpp"

#include <algorithm>

#include "amg/error.hpp"
#include "amg/parallel.hpp"

namespace amg {

namespace {

using parallel::ArgMax;

template <class Key>
auto merge_argmax() {
  return [](ArgMax<Key>& into, const ArgMax<Key>& from) { into.merge(from); };
}

std::size_t idx(Vertex v) { return static_cast<std::size_t>(v); }

}  // namespace

AlphaResult alpha_index(const Graph& g, const DistanceMatrix& d) {
  using Key = std::array<Vertex, 4>;
  const Vertex n = g.order();

  auto best = parallel::reduce(
      idx(n), ArgMax<Key>{},
      [&](std::size_t vi, ArgMax<Key>& acc) {
        const auto v = static_cast<Vertex>(vi);
        const auto row_v = d.row(v);
        std::vector<Vertex> before;  // u with v in I(u,w)
        std::vector<Vertex> after;   // x with w in I(v,x)
        for (Vertex w : g.neighbors(v)) {
          const auto row_w = d.row(w);
          before.clear();
          after.clear();
          for (Vertex t = 0; t < n; ++t) {
            if (row_w[idx(t)] == row_v[idx(t)] + 1) before.push_back(t);
            if (row_v[idx(t)] == row_w[idx(t)] + 1) after.push_back(t);
          }
          for (Vertex u : before) {
            const auto row_u = d.row(u);
            const int head = row_u[idx(v)] + 1;
            for (Vertex x : after) {
              const int defect = head + row_w[idx(x)] - row_u[idx(x)];
              if (!acc.has || defect >= acc.value) acc.offer(defect, Key{u, v, w, x});
            }
          }
        }
      },
      merge_argmax<Key>());

  AlphaResult result;
  if (best.has) {
    result.index = static_cast<int>(std::max(0LL, best.value));
    const auto& k = best.key;
    result.witness = AlphaWitness{k[0], k[1], k[2], k[3], static_cast<int>(best.value)};
  }
  return result;
}

namespace {

std::array<int, 3> pairing_sums(const DistanceMatrix& d, Vertex u, Vertex v, Vertex w, Vertex x) {
  std::array<int, 3> s{d(u, x) + d(v, w), d(u, w) + d(v, x), d(u, v) + d(w, x)};
  std::sort(s.begin(), s.end(), std::greater<>());
  return s;
}

}  // namespace

HyperbolicityResult hyperbolicity(const Graph& g, const DistanceMatrix& d) {
  using Key = std::array<Vertex, 4>;
  const Vertex n = g.order();

  // Degenerate quadruples contribute 0; (0,0,0,0) is the smallest of them.
  ArgMax<Key> identity;
  identity.offer(0, Key{0, 0, 0, 0});

  // Only strictly increasing quadruples are scanned: the value is symmetric,
  // so the smallest maximizer is always a sorted one.
  auto best = parallel::reduce(
      idx(n), identity,
      [&](std::size_t ui, ArgMax<Key>& acc) {
        const auto u = static_cast<Vertex>(ui);
        const auto ru = d.row(u);
        for (Vertex v = u + 1; v < n; ++v) {
          const auto rv = d.row(v);
          const int duv = ru[idx(v)];
          for (Vertex w = v + 1; w < n; ++w) {
            const auto rw = d.row(w);
            const int duw = ru[idx(w)];
            const int dvw = rv[idx(w)];
            for (Vertex x = w + 1; x < n; ++x) {
              const int s1 = ru[idx(x)] + dvw;
              const int s2 = duw + rv[idx(x)];
              const int s3 = duv + rw[idx(x)];
              const int hi = std::max(s1, std::max(s2, s3));
              const int lo = std::min(s1, std::min(s2, s3));
              const int diff = hi - (s1 + s2 + s3 - hi - lo);
              if (diff > acc.value || (diff == acc.value && diff > 0)) acc.offer(diff, Key{u, v, w, x});
            }
          }
        }
      },
      merge_argmax<Key>());

  const auto& k = best.key;
  HyperbolicityResult result;
  result.delta = HalfInteger::from_doubled(best.value);
  result.witness = FourPointWitness{k[0], k[1], k[2], k[3], pairing_sums(d, k[0], k[1], k[2], k[3]), result.delta};
  return result;
}

ThinnessResult interval_thinness(const Graph& g, const DistanceMatrix& d) {
  using Key = std::array<Vertex, 5>;  // u, v, k, x, y
  const Vertex n = g.order();
  ThinnessResult result;
  if (n == 1) return result;

  ArgMax<Key> identity;
  identity.offer(0, Key{0, 0, 0, 0, 0});

  // kappa(u,v) = kappa(v,u) with mirrored slices, and the mirrored witness
  // with u < v is the lexicographically smaller one, so only u < v is scanned.
  auto best = parallel::reduce(
      idx(n), identity,
      [&](std::size_t ui, ArgMax<Key>& acc) {
        const auto u = static_cast<Vertex>(ui);
        const auto ru = d.row(u);
        std::vector<std::vector<Vertex>> layers;
        for (Vertex v = u + 1; v < n; ++v) {
          const auto rv = d.row(v);
          const int duv = ru[idx(v)];
          layers.assign(static_cast<std::size_t>(duv) + 1, {});
          for (Vertex w = 0; w < n; ++w) {
            if (ru[idx(w)] + rv[idx(w)] == duv) layers[ru[idx(w)]].push_back(w);
          }
          for (int k = 1; k < duv; ++k) {
            const auto& s = layers[static_cast<std::size_t>(k)];
            for (std::size_t i = 0; i < s.size(); ++i) {
              const auto rx = d.row(s[i]);
              for (std::size_t j = i + 1; j < s.size(); ++j) {
                const int dist = rx[idx(s[j])];
                if (dist >= acc.value) acc.offer(dist, Key{u, v, k, s[i], s[j]});
              }
            }
          }
        }
      },
      merge_argmax<Key>());

  const auto& k = best.key;
  result.kappa = static_cast<int>(best.value);
  result.witness = ThinnessWitness{k[0], k[1], k[2], k[3], k[4], result.kappa};
  return result;
}

HalfInteger gromov_product(const DistanceMatrix& d, Vertex x, Vertex y, Vertex z) {
  return HalfInteger::from_doubled(d(x, z) + d(y, z) - d(x, y));
}

SliceTriangleResult slice_triangle_thinness(const Graph& g, const DistanceMatrix& d) {
  using Key = std::array<Vertex, 6>;  // x, y, z, k, z', x'
  const Vertex n = g.order();
  SliceTriangleResult result;
  if (n == 1) return result;

  ArgMax<Key> identity;
  identity.offer(0, Key{0, 0, 0, 0, 0, 0});

  // Swapping x and z mirrors the witness; the copy with x <= z is the
  // lexicographically smaller one, so only those triples are scanned.
  auto best = parallel::reduce(
      idx(n), identity,
      [&](std::size_t yi, ArgMax<Key>& acc) {
        const auto y = static_cast<Vertex>(yi);
        const auto ry = d.row(y);
        // members[t] lists I(y,t) ordered by (distance from y, id); start[t][k]
        // is the offset of S_k(y,t) in that list.
        std::vector<std::vector<Vertex>> members(idx(n));
        std::vector<std::vector<std::size_t>> start(idx(n));
        for (Vertex t = 0; t < n; ++t) {
          const auto rt = d.row(t);
          const int dyt = ry[idx(t)];
          std::vector<std::vector<Vertex>> layers(static_cast<std::size_t>(dyt) + 1);
          for (Vertex a = 0; a < n; ++a) {
            if (ry[idx(a)] + rt[idx(a)] == dyt) layers[ry[idx(a)]].push_back(a);
          }
          auto& list = members[idx(t)];
          auto& offs = start[idx(t)];
          for (const auto& layer : layers) {
            offs.push_back(list.size());
            list.insert(list.end(), layer.begin(), layer.end());
          }
          offs.push_back(list.size());
        }
        for (Vertex x = 0; x < n; ++x) {
          const auto rx = d.row(x);
          for (Vertex z = x; z < n; ++z) {
            const int k = (ry[idx(x)] + ry[idx(z)] - rx[idx(z)]) / 2;
            const auto& mx = members[idx(x)];
            const auto& mz = members[idx(z)];
            const auto kk = static_cast<std::size_t>(k);
            for (std::size_t i = start[idx(x)][kk]; i < start[idx(x)][kk + 1]; ++i) {
              const Vertex zp = mx[i];
              const auto rzp = d.row(zp);
              for (std::size_t j = start[idx(z)][kk]; j < start[idx(z)][kk + 1]; ++j) {
                const Vertex xp = mz[j];
                const int dist = rzp[idx(xp)];
                if (dist >= acc.value) acc.offer(dist, Key{x, y, z, k, zp, xp});
              }
            }
          }
        }
      },
      merge_argmax<Key>());

  const auto& k = best.key;
  result.tau = static_cast<int>(best.value);
  result.witness = SliceTriangleWitness{k[0], k[1], k[2], k[3], k[4], k[5], result.tau};
  return result;
}

BowResult bow_defect(const Graph& g, const DistanceMatrix& d, HalfInteger lambda) {
  if (lambda < HalfInteger{}) throw InvalidArgument("bow metric lambda must be non-negative");
  using Key = std::array<Vertex, 4>;
  const Vertex n = g.order();

  auto best = parallel::reduce(
      idx(n), ArgMax<Key>{},
      [&](std::size_t vi, ArgMax<Key>& acc) {
        const auto v = static_cast<Vertex>(vi);
        const auto rv = d.row(v);
        std::vector<Vertex> before;
        std::vector<Vertex> after;
        for (Vertex w = 0; w < n; ++w) {
          const int overlap = rv[idx(w)];
          if (2LL * overlap <= lambda.doubled()) continue;
          const auto rw = d.row(w);
          before.clear();
          after.clear();
          for (Vertex t = 0; t < n; ++t) {
            if (rw[idx(t)] == rv[idx(t)] + overlap) before.push_back(t);
            if (rv[idx(t)] == rw[idx(t)] + overlap) after.push_back(t);
          }
          for (Vertex u : before) {
            const auto ru = d.row(u);
            const int head = ru[idx(v)] + overlap;
            for (Vertex x : after) {
              const int defect = head + rw[idx(x)] - ru[idx(x)];
              if (!acc.has || defect >= acc.value) acc.offer(defect, Key{u, v, w, x});
            }
          }
        }
      },
      merge_argmax<Key>());

  BowResult result;
  if (best.has) {
    const auto& k = best.key;
    result.mu = static_cast<int>(best.value);
    result.witness = BowWitness{k[0], k[1], k[2], k[3], d(k[1], k[2]), static_cast<int>(best.value)};
  }
  return result;
}

}  // namespace amg
