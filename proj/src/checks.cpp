#include "amg/checks.hpp"

#include <algorithm>
#include <functional>

#include "amg/dismantling.hpp"
#include "amg/error.hpp"
#include "amg/generators.hpp"
#include "amg/metric_triangles.hpp"
#include "amg/pattern_check.hpp"

namespace amg {

GraphFacts::GraphFacts(Graph g, std::optional<int> assumed_alpha)
    : g_(std::move(g)), assumed_alpha_(assumed_alpha) {}

const DistanceMatrix& GraphFacts::distances() {
  if (!d_) d_.emplace(g_);
  return *d_;
}

const Eccentricities& GraphFacts::ecc() {
  if (!ecc_) ecc_ = eccentricities(distances());
  return *ecc_;
}

int GraphFacts::computed_alpha() {
  if (!alpha_) alpha_ = alpha_index(g_, distances());
  return alpha_->index;
}

int GraphFacts::alpha() { return assumed_alpha_ ? *assumed_alpha_ : computed_alpha(); }

HalfInteger GraphFacts::delta() {
  if (!hyp_) hyp_ = hyperbolicity(g_, distances());
  return hyp_->delta;
}

const ThinnessResult& GraphFacts::thinness() {
  if (!thin_) thin_ = interval_thinness(g_, distances());
  return *thin_;
}

const HullGraph& GraphFacts::hull(std::uint64_t cap) {
  if (!hull_) hull_ = injective_hull(g_, distances(), cap);
  return *hull_;
}

const DistanceMatrix& GraphFacts::hull_distances(std::uint64_t cap) {
  if (!hull_d_) hull_d_.emplace(hull(cap).hull);
  return *hull_d_;
}

namespace {

std::size_t at(Vertex v) { return static_cast<std::size_t>(v); }

Json vertices(std::initializer_list<Vertex> vs) { return Json(std::vector<Vertex>(vs)); }

// Collects configurations and the first failing witness.
struct Tally {
  CheckResult& r;

  void count() { ++r.configurations; }
  void fail(Json witness) {
    if (r.pass) {
      r.pass = false;
      r.witness = std::move(witness);
    }
  }
  bool failed() const { return !r.pass; }
};

void not_applicable(CheckResult& r, std::string why) {
  r.hypothesis_met = false;
  r.note = std::move(why);
}

bool require_alpha1(CheckResult& r, GraphFacts& f) {
  if (f.alpha() <= 1) return true;
  not_applicable(r, "alpha index " + std::to_string(f.alpha()) + " > 1");
  return false;
}

int ceil_half(int x) { return (x + 1) / 2; }

void three_balls(CheckResult& r, GraphFacts& f, const CheckOptions&) {
  Tally t{r};
  const auto& d = f.distances();
  const auto& ecc = f.ecc().ecc;
  const int i = f.alpha();
  const Vertex n = f.graph().order();
  std::vector<Vertex> common;
  // For fixed (u, r_u, v, r_v) the hardest admissible r_w is the smallest one
  // keeping the three disks pairwise intersecting.
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u; v < n; ++v) {
      for (int ru = 0; ru <= ecc[at(u)]; ++ru) {
        for (int rv = 0; rv <= ecc[at(v)]; ++rv) {
          if (d(u, v) > ru + rv) continue;
          common.clear();
          for (Vertex x = 0; x < n; ++x) {
            if (d(u, x) <= ru && d(v, x) <= rv) common.push_back(x);
          }
          for (Vertex w = 0; w < n; ++w) {
            t.count();
            const int rw = std::max({0, d(u, w) - ru, d(v, w) - rv});
            int closest = n;
            Vertex best = -1;
            for (Vertex x : common) {
              if (d(w, x) < closest) {
                closest = d(w, x);
                best = x;
              }
            }
            if (closest > rw + i) {
              t.fail({{"u", u}, {"v", v}, {"w", w}, {"r_u", ru}, {"r_v", rv}, {"r_w", rw}, {"i", i},
                      {"closest_common_vertex", best}, {"d_w_closest", closest}});
              return;
            }
          }
        }
      }
    }
  }
}

void aux_gd(CheckResult& r, GraphFacts& f, const CheckOptions&) {
  Tally t{r};
  const auto& d = f.distances();
  const int i = f.alpha();
  const Vertex n = f.graph().order();
  // The smallest admissible k is d(v,y) - d(v,x), which is never negative.
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      for (Vertex x = 0; x < n; ++x) {
        if (d(u, x) + d(x, v) != d(u, v)) continue;
        for (Vertex y = 0; y < n; ++y) {
          if (d(u, y) != d(u, x)) continue;
          t.count();
          const int k = d(v, y) - d(v, x);
          if (d(x, y) > k + i + 2) {
            t.fail({{"u", u}, {"v", v}, {"x", x}, {"y", y}, {"k", k}, {"i", i}, {"d_x_y", d(x, y)}});
            return;
          }
        }
      }
    }
  }
}

Json thinness_json(const ThinnessResult& th) {
  if (!th.witness) return nullptr;
  const auto& w = *th.witness;
  return {{"u", w.u}, {"v", w.v}, {"k", w.k}, {"x", w.x}, {"y", w.y}, {"dist", w.dist}};
}

void thinness_check(CheckResult& r, GraphFacts& f, const CheckOptions&) {
  Tally t{r};
  t.count();
  const int i = f.alpha();
  const auto& th = f.thinness();
  if (th.kappa > i + 1) t.fail({{"kappa", th.kappa}, {"bound", i + 1}, {"i", i}, {"slice", thinness_json(th)}});
}

void subdivision_thinness(CheckResult& r, GraphFacts& f, const CheckOptions&) {
  Tally t{r};
  t.count();
  const int i = f.alpha();
  const auto sub = subdivide(f.graph());
  const auto th = interval_thinness(sub.graph, DistanceMatrix(sub.graph));
  if (th.kappa > 2 * i + 12) {
    t.fail({{"kappa_subdivision", th.kappa}, {"bound", 2 * i + 12}, {"i", i}, {"slice", thinness_json(th)}});
  }
}

void dismantl_i(CheckResult& r, GraphFacts& f, const CheckOptions&) {
  Tally t{r};
  const int i = f.alpha();
  const Graph p = power(f.graph(), i + 1);
  for (Vertex u = 0; u < f.graph().order(); ++u) {
    t.count();
    const auto o = bfs_ordering(f.graph(), u);
    const auto res = is_dismantling_ordering(p, o);
    if (!res.ok) {
      t.fail({{"start", u}, {"power", i + 1}, {"ordering", o.order}, {"fail_k", *res.fail_k},
              {"v_k", o.order[at(*res.fail_k - 1)]}});
      return;
    }
  }
}

void ss_star(CheckResult& r, GraphFacts& f, const CheckOptions&) {
  Tally t{r};
  const int i = f.alpha();
  const auto& d = f.distances();
  const int diam = f.ecc().diameter;
  for (Vertex u = 0; u < f.graph().order(); ++u) {
    const auto o = bfs_ordering(f.graph(), u);
    for (int rr = 1; rr <= 2 * diam; ++rr) {
      t.count();
      const int sp = ceil_half(rr) + 2 * i + 1;
      const auto res = is_ss_dismantling_ordering(f.graph(), d, o, rr, sp, true);
      if (!res.ok) {
        t.fail({{"start", u}, {"s", rr}, {"s_prime", sp}, {"ordering", o.order}, {"fail_k", *res.fail_k},
                {"v_k", o.order[at(*res.fail_k - 1)]}});
        return;
      }
    }
  }
}

void triangle_thinness(CheckResult& r, GraphFacts& f, const CheckOptions&) {
  Tally t{r};
  t.count();
  const int i = f.alpha();
  const auto tau = slice_triangle_thinness(f.graph(), f.distances());
  if (tau.tau > 3 * (i + 1)) {
    const auto& w = *tau.witness;
    t.fail({{"tau", tau.tau}, {"bound", 3 * (i + 1)}, {"i", i},
            {"triangle", {{"x", w.x}, {"y", w.y}, {"z", w.z}, {"k", w.k}, {"z_prime", w.z_prime},
                          {"x_prime", w.x_prime}, {"dist", w.dist}}}});
  }
}

Json hyp_json(const HyperbolicityResult& h) {
  const auto& w = h.witness;
  return {{"quadruple", vertices({w.u, w.v, w.w, w.x})}, {"sums", w.sums}, {"delta", w.delta.to_string()}};
}

void main_bound(CheckResult& r, GraphFacts& f, const CheckOptions&) {
  Tally t{r};
  t.count();
  const int i = f.alpha();
  const std::int64_t bound_x2 = 2 * (i + ceil_half(i + 1));
  const auto delta = f.delta();
  if (delta.doubled() > bound_x2) {
    t.fail({{"hyperbolicity_x2", delta.doubled()}, {"bound_x2", bound_x2}, {"i", i},
            {"four_point", hyp_json(hyperbolicity(f.graph(), f.distances()))}});
  }
}

void alpha1_hyp(CheckResult& r, GraphFacts& f, const CheckOptions&) {
  if (!require_alpha1(r, f)) return;
  Tally t{r};
  t.count();
  const auto delta = f.delta();
  if (delta.doubled() > 2) {
    t.fail({{"hyperbolicity_x2", delta.doubled()}, {"bound_x2", 2}, {"i", f.alpha()},
            {"four_point", hyp_json(hyperbolicity(f.graph(), f.distances()))}});
  }
}

void triangle_types(CheckResult& r, GraphFacts& f, const CheckOptions&) {
  if (!require_alpha1(r, f)) return;
  Tally t{r};
  for (const auto& tri : enumerate_metric_triangles(f.graph(), f.distances()).triangles) {
    t.count();
    auto sides = tri.type;
    std::sort(sides.begin(), sides.end());
    const bool ok = sides == std::array<int, 3>{1, 1, 1} || sides == std::array<int, 3>{1, 2, 2} ||
                    sides == std::array<int, 3>{2, 2, 2};
    if (!ok) {
      t.fail({{"triangle", vertices({tri.u, tri.v, tri.w})}, {"type", tri.type}});
      return;
    }
  }
}

void c3(CheckResult& r, GraphFacts& f, const CheckOptions&) {
  if (!require_alpha1(r, f)) return;
  Tally t{r};
  const auto& g = f.graph();
  const auto& d = f.distances();
  const Vertex n = g.order();
  auto common_in_slice = [&](Vertex x, Vertex y, Vertex u, Vertex v, int j) {
    for (Vertex c : g.neighbors(x)) {
      if (g.adjacent(c, y) && d(u, c) == j && d(c, v) == d(u, v) - j) return true;
    }
    return false;
  };
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      const int duv = d(u, v);
      for (Vertex x = 0; x < n; ++x) {
        const int k = d(u, x);
        if (k + d(x, v) != duv) continue;
        for (Vertex y : g.neighbors(x)) {
          if (y < x || d(u, y) != k || d(y, v) != duv - k) continue;
          t.count();
          const bool below = k == 0 || common_in_slice(x, y, u, v, k - 1);
          const bool above = k == duv || common_in_slice(x, y, u, v, k + 1);
          if (!below || !above) {
            t.fail({{"u", u}, {"v", v}, {"k", k}, {"x", x}, {"y", y}, {"common_below", below},
                    {"common_above", above}});
            return;
          }
        }
      }
    }
  }
}

void c3_or_c5(CheckResult& r, GraphFacts& f, const CheckOptions&) {
  if (!require_alpha1(r, f)) return;
  Tally t{r};
  const auto& g = f.graph();
  const auto& d = f.distances();
  const Vertex n = g.order();
  auto induced_c5 = [&](Vertex x, Vertex z, Vertex c, Vertex w, Vertex y) {
    const std::array<Vertex, 5> cyc{x, z, c, w, y};
    for (int a = 0; a < 5; ++a) {
      for (int b = a + 1; b < 5; ++b) {
        if (cyc[a] == cyc[b]) return false;
        const bool consecutive = b == a + 1 || (a == 0 && b == 4);
        if (g.adjacent(cyc[a], cyc[b]) != consecutive) return false;
      }
    }
    return true;
  };
  for (const auto& e : g.edges()) {
    const Vertex x = e.u;
    const Vertex y = e.v;
    for (Vertex u = 0; u < n; ++u) {
      const int k = d(u, x);
      if (d(u, y) != k) continue;
      t.count();
      bool ok = false;
      for (Vertex c : g.neighbors(x)) {
        if (g.adjacent(c, y) && d(u, c) == k - 1) {
          ok = true;
          break;
        }
      }
      for (Vertex c = 0; c < n && !ok && k >= 2; ++c) {
        if (d(c, x) != 2 || d(c, y) != 2 || d(u, c) != k - 2) continue;
        bool all = true;
        for (Vertex z : g.neighbors(x)) {
          if (!g.adjacent(z, c)) continue;
          for (Vertex w : g.neighbors(y)) {
            if (g.adjacent(w, c) && !induced_c5(x, z, c, w, y)) all = false;
          }
        }
        ok = all;
      }
      if (!ok) {
        t.fail({{"x", x}, {"y", y}, {"u", u}, {"k", k}});
        return;
      }
    }
  }
}

void alpha1_thinness(CheckResult& r, GraphFacts& f, const CheckOptions&) {
  if (!require_alpha1(r, f)) return;
  Tally t{r};
  const auto& d = f.distances();
  const Vertex n = f.graph().order();
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      const int duv = d(u, v);
      for (int ru = 0; ru <= duv; ++ru) {
        const int rv = duv - ru;
        for (Vertex w = 0; w < n; ++w) {
          const int rw = std::max({0, d(w, u) - ru, d(w, v) - rv});
          for (Vertex x = 0; x < n; ++x) {
            if (d(u, x) != ru || d(x, v) != rv) continue;
            t.count();
            if (d(w, x) > rw + 2) {
              t.fail({{"u", u}, {"v", v}, {"w", w}, {"r_u", ru}, {"r_v", rv}, {"r_w", rw}, {"x", x},
                      {"d_w_x", d(w, x)}});
              return;
            }
          }
        }
      }
    }
  }
}

void close_balls(CheckResult& r, GraphFacts& f, const CheckOptions&) {
  if (!require_alpha1(r, f)) return;
  Tally t{r};
  const auto& d = f.distances();
  const Vertex n = f.graph().order();
  std::vector<int> need(at(n));
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      const int duv = d(u, v);
      for (int ru = 0; ru <= duv; ++ru) {
        const int rv = duv - ru;
        // Smallest radius satisfying both inequalities for each vertex.
        for (Vertex a = 0; a < n; ++a) need[at(a)] = std::max({0, d(u, a) - ru, d(v, a) - rv});
        for (Vertex a = 0; a < n; ++a) {
          for (Vertex b = 0; b < n; ++b) {
            t.count();
            if (d(a, b) > need[at(a)] + need[at(b)] + 2) {
              t.fail({{"u", u}, {"v", v}, {"a", a}, {"b", b}, {"r_u", ru}, {"r_v", rv}, {"r_a", need[at(a)]},
                      {"r_b", need[at(b)]}, {"d_a_b", d(a, b)}});
              return;
            }
          }
        }
      }
    }
  }
}

void equality_case(CheckResult& r, GraphFacts& f, const CheckOptions&) {
  if (!require_alpha1(r, f)) return;
  const auto res = check_equality_case(f.graph(), f.distances());
  r.configurations = res.configurations;
  if (!res.holds) {
    const auto& w = *res.witness;
    Tally{r}.fail({{"x", w.x}, {"y", w.y}, {"v", w.v}, {"u", w.u}, {"equality", w.equality},
                   {"pair_exists", w.pair_exists}});
  }
}

Json disk_json(const DiskWitness& w) {
  return {{"center", w.center}, {"radius", w.radius}, {"a", w.a}, {"b", w.b}, {"c", w.c}};
}

void charact(CheckResult& r, GraphFacts& f, const CheckOptions&) {
  Tally t{r};
  t.count();
  const int i = f.alpha();
  const auto ch = alpha1_characterization(f.graph(), f.distances());
  if ((i <= 1) != ch.alpha1) {
    Json w{{"alpha_index", i}, {"characterization", ch.alpha1}, {"reason", to_string(ch.reason)}};
    if (ch.disk) w["disk"] = disk_json(*ch.disk);
    if (ch.w6pp) w["w6pp_embedding"] = *ch.w6pp;
    t.fail(std::move(w));
  }
}

void convex_criterion(CheckResult& r, GraphFacts& f, const CheckOptions&) {
  Tally t{r};
  t.count();
  const auto& d = f.distances();
  const auto disks = all_disks_convex(f.graph(), d);
  const int cycle = max_isometric_cycle(f.graph(), d);
  const auto s1 = s1_slices_clique(f.graph(), d);
  if (disks.convex != (cycle <= 5 && s1.cliques)) {
    Json w{{"disks_convex", disks.convex}, {"max_isometric_cycle", cycle}, {"s1_cliques", s1.cliques}};
    if (disks.witness) w["disk"] = disk_json(*disks.witness);
    if (s1.witness) w["slice"] = {{"x", s1.witness->x}, {"y", s1.witness->y}, {"a", s1.witness->a}, {"b", s1.witness->b}};
    t.fail(std::move(w));
  }
}

void diam_approx(CheckResult& r, GraphFacts& f, const CheckOptions&) {
  if (!require_alpha1(r, f)) return;
  Tally t{r};
  const auto& d = f.distances();
  const auto& e = f.ecc();
  const Vertex n = f.graph().order();
  for (Vertex s = 0; s < n; ++s) {
    for (Vertex far = 0; far < n; ++far) {
      if (d(s, far) != e.ecc[at(s)]) continue;
      t.count();
      if (e.ecc[at(far)] < e.diameter - 2) {
        t.fail({{"start", s}, {"furthest", far}, {"eccentricity", e.ecc[at(far)]}, {"diameter", e.diameter}});
        return;
      }
    }
  }
}

Json bow_json(const BowResult& b) {
  if (!b.witness) return nullptr;
  const auto& w = *b.witness;
  return {{"u", w.u}, {"v", w.v}, {"w", w.w}, {"x", w.x}, {"overlap", w.overlap}, {"defect", w.defect}};
}

void bow(CheckResult& r, GraphFacts& f, const CheckOptions&) {
  Tally t{r};
  t.count();
  const auto delta = f.delta();
  const auto b = bow_defect(f.graph(), f.distances(), delta);
  if (b.mu > delta.doubled()) {
    t.fail({{"lambda", delta.to_string()}, {"mu", b.mu}, {"bound", delta.doubled()}, {"bow", bow_json(b)}});
  }
}

void bow_alpha(CheckResult& r, GraphFacts& f, const CheckOptions&) {
  Tally t{r};
  t.count();
  const int i = f.alpha();
  const auto b = bow_defect(f.graph(), f.distances(), HalfInteger{});
  if (b.mu != i) t.fail({{"mu_at_lambda_0", b.mu}, {"alpha_index", i}, {"bow", bow_json(b)}});
}

// Returns null after marking r not applicable when the hull is out of reach.
const HullGraph* hull_or_skip(CheckResult& r, GraphFacts& f, const CheckOptions& o) {
  if (f.graph().order() > o.hull_max_n) {
    not_applicable(r, "order " + std::to_string(f.graph().order()) + " above hull limit " +
                          std::to_string(o.hull_max_n));
    return nullptr;
  }
  try {
    return &f.hull(o.hull_cap);
  } catch (const CapExceeded& e) {
    not_applicable(r, e.what());
    return nullptr;
  }
}

void hull_hyp(CheckResult& r, GraphFacts& f, const CheckOptions& o) {
  const HullGraph* h = hull_or_skip(r, f, o);
  if (!h) return;
  Tally t{r};
  t.count();
  const auto hh = hyperbolicity(h->hull, f.hull_distances(o.hull_cap));
  if (hh.delta != f.delta()) {
    t.fail({{"hyperbolicity_x2", f.delta().doubled()}, {"hull_hyperbolicity_x2", hh.delta.doubled()},
            {"hull_size", h->hull.order()}, {"hull_four_point", hyp_json(hh)}});
  }
}

void hull_helly(CheckResult& r, GraphFacts& f, const CheckOptions& o) {
  const HullGraph* h = hull_or_skip(r, f, o);
  if (!h) return;
  Tally t{r};
  const auto& d = f.distances();
  const auto& hd = f.hull_distances(o.hull_cap);
  const Vertex n = f.graph().order();
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      t.count();
      const int in_hull = hd(h->original_to_hull[at(u)], h->original_to_hull[at(v)]);
      if (in_hull != d(u, v)) {
        t.fail({{"embedding_not_isometric", vertices({u, v})}, {"d", d(u, v)}, {"hull_d", in_hull}});
        return;
      }
    }
  }
  t.count();
  if (!is_helly(h->hull, hd, o.hull_cap)) {
    t.fail({{"hull_is_helly", false}, {"hull_size", h->hull.order()}});
    return;
  }
  t.count();
  const auto kappa = interval_thinness(h->hull, hd).kappa;
  const auto delta = hyperbolicity(h->hull, hd).delta;
  if (delta.doubled() > 2 * ceil_half(kappa)) {
    t.fail({{"hull_hyperbolicity_x2", delta.doubled()}, {"hull_kappa", kappa}, {"bound_x2", 2 * ceil_half(kappa)}});
  }
}

void hull_dist(CheckResult& r, GraphFacts& f, const CheckOptions& o) {
  const HullGraph* h = hull_or_skip(r, f, o);
  if (!h) return;
  Tally t{r};
  const auto& hd = f.hull_distances(o.hull_cap);
  const Vertex n = f.graph().order();
  const Vertex hn = h->hull.order();
  const auto& img = h->original_to_hull;
  for (Vertex x = 0; x < hn; ++x) {
    for (Vertex y = 0; y < hn; ++y) {
      t.count();
      // Smallest lambda meeting the hypothesis for this pair.
      int lambda = 0;
      for (Vertex v = 0; v < n; ++v) lambda = std::max(lambda, hd(x, img[at(v)]) - hd(y, img[at(v)]));
      if (hd(x, y) > lambda) {
        t.fail({{"x", x}, {"y", y}, {"lambda", lambda}, {"d_x_y", hd(x, y)}});
        return;
      }
    }
  }
  if (n > o.max_sp_max_n) return;
  for (Vertex x = 0; x < hn; ++x) {
    for (Vertex y = 0; y < hn; ++y) {
      t.count();
      bool extends = false;
      for (Vertex a = 0; a < n && !extends; ++a) {
        for (Vertex b = 0; b < n && !extends; ++b) {
          extends = hd(img[at(a)], img[at(b)]) == hd(img[at(a)], x) + hd(x, y) + hd(y, img[at(b)]);
        }
      }
      if (!extends) {
        t.fail({{"x", x}, {"y", y}, {"shortest_path_not_extendable", true}});
        return;
      }
    }
  }
}

// The six closed-form distance rules for G_p, p = n / 4.
int gp_expected(int p, Vertex a, Vertex b) {
  const int ka = a / p;
  const int kb = b / p;
  const int i = a % p;
  const int j = b % p;
  enum { W, X, Y, Z };
  auto is = [&](int s, int t) { return (ka == s && kb == t) || (ka == t && kb == s); };
  if (ka == kb && (ka == Y || ka == Z)) return std::abs(j - i);
  if (is(Y, Z)) return i == j ? 2 : std::abs(j - i) + 1;
  if (ka == kb) return i == j ? 0 : std::abs(j - i) + 1;  // X-X, W-W
  auto oriented = [&](int first) { return ka == first ? std::pair{i, j} : std::pair{j, i}; };
  if (is(X, Y) || is(X, Z)) {
    const auto [xi, yj] = oriented(X);
    return yj >= xi ? 1 + yj - xi : xi - yj;
  }
  if (is(W, Y) || is(W, Z)) {
    const auto [wi, yj] = oriented(W);
    return yj <= wi ? 1 + wi - yj : yj - wi;
  }
  const auto [xi, wj] = oriented(X);  // X-W
  if (xi <= wj) return wj - xi + 2;
  if (xi == wj + 1) return 2;
  return xi - wj;
}

void gp_distances(CheckResult& r, GraphFacts& f, const CheckOptions&) {
  const Vertex n = f.graph().order();
  if (n % 4 != 0 || !(f.graph() == g_p(n / 4))) {
    not_applicable(r, "not a G_p graph");
    return;
  }
  Tally t{r};
  const int p = n / 4;
  const auto& d = f.distances();
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = 0; b < n; ++b) {
      t.count();
      const int want = gp_expected(p, a, b);
      if (d(a, b) != want) {
        t.fail({{"p", p}, {"a", a}, {"b", b}, {"d", d(a, b)}, {"expected", want}});
        return;
      }
    }
  }
}

using CheckFn = std::function<void(CheckResult&, GraphFacts&, const CheckOptions&)>;

const std::vector<std::pair<std::string, CheckFn>>& registry() {
  static const std::vector<std::pair<std::string, CheckFn>> table{
      {"three-balls", three_balls},
      {"aux-gd", aux_gd},
      {"thinness", thinness_check},
      {"subdivision-thinness", subdivision_thinness},
      {"dismantl-i", dismantl_i},
      {"ss-star", ss_star},
      {"triangle-thinness", triangle_thinness},
      {"main-bound", main_bound},
      {"alpha1-hyp", alpha1_hyp},
      {"triangle-types", triangle_types},
      {"c3", c3},
      {"c3-or-c5", c3_or_c5},
      {"alpha1-thinness", alpha1_thinness},
      {"close-balls", close_balls},
      {"equality-case", equality_case},
      {"charact", charact},
      {"convex-criterion", convex_criterion},
      {"diam-approx", diam_approx},
      {"bow", bow},
      {"bow-alpha", bow_alpha},
      {"hull-hyp", hull_hyp},
      {"hull-helly", hull_helly},
      {"hull-dist", hull_dist},
      {"gp-distances", gp_distances},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& check_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& [id, fn] : registry()) out.push_back(id);
    return out;
  }();
  return ids;
}

bool is_check_id(std::string_view id) {
  return std::find(check_ids().begin(), check_ids().end(), id) != check_ids().end();
}

CheckResult run_check(std::string_view id, GraphFacts& facts, const CheckOptions& options) {
  for (const auto& [name, fn] : registry()) {
    if (name == id) {
      CheckResult r;
      r.check = name;
      fn(r, facts, options);
      return r;
    }
  }
  throw InvalidArgument("unknown check id '" + std::string(id) + "'");
}

Json to_json(const CheckResult& r) {
  Json j{{"check", r.check}, {"pass", r.pass}, {"witness", r.witness}, {"configurations_checked", r.configurations},
         {"hypothesis_met", r.hypothesis_met}};
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

}  // namespace amg
