#include "amg/generators.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <set>

#include "amg/error.hpp"

namespace amg {

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw InvalidArgument("Rng::below needs a positive bound");
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x = engine_();
  while (x >= limit) x = engine_();
  return x % bound;
}

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw InvalidArgument(message);
}

void require_order(Vertex n, Vertex least, const char* family) {
  require(n >= least, std::string(family) + " needs n >= " + std::to_string(least) + ", got " + std::to_string(n));
}

// Applies a random relabeling so random families do not leak insertion order.
Graph relabeled(Vertex n, const std::vector<Edge>& edges, Rng& rng) {
  std::vector<Vertex> label(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) label[static_cast<std::size_t>(v)] = v;
  rng.shuffle(label);
  std::vector<Edge> out;
  out.reserve(edges.size());
  for (const auto& e : edges) out.push_back({label[static_cast<std::size_t>(e.u)], label[static_cast<std::size_t>(e.v)]});
  return Graph(n, out);
}

std::vector<Edge> random_tree_edges(Vertex n, Rng& rng) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.push_back({static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(v))), v});
  return edges;
}

}  // namespace

Graph path_graph(Vertex n) {
  require_order(n, 1, "path");
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Graph(n, edges);
}

Graph cycle_graph(Vertex n) {
  require_order(n, 3, "cycle");
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return Graph(n, edges);
}

Graph complete_graph(Vertex n) {
  require_order(n, 1, "complete");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v});
  }
  return Graph(n, edges);
}

Graph star_graph(Vertex n) {
  require_order(n, 1, "star");
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.push_back({0, v});
  return Graph(n, edges);
}

Graph hypercube(int dim) {
  require(dim >= 0 && dim <= 16, "hypercube dim must be in [0, 16], got " + std::to_string(dim));
  const Vertex n = Vertex{1} << dim;
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) {
    for (int b = 0; b < dim; ++b) {
      const Vertex w = v ^ (Vertex{1} << b);
      if (v < w) edges.push_back({v, w});
    }
  }
  return Graph(n, edges);
}

Graph g_p(int p) {
  require(p >= 1 && p <= 5000, "g_p needs 1 <= p <= 5000, got " + std::to_string(p));
  auto w = [&](int i) { return Vertex{i}; };
  auto x = [&](int i) { return Vertex{p + i}; };
  auto y = [&](int i) { return Vertex{2 * p + i}; };
  auto z = [&](int i) { return Vertex{3 * p + i}; };
  std::vector<Edge> edges;
  for (int i = 0; i < p; ++i) {
    edges.push_back({x(i), y(i)});
    edges.push_back({y(i), w(i)});
    edges.push_back({w(i), z(i)});
    edges.push_back({z(i), x(i)});
    if (i + 1 < p) {
      edges.push_back({y(i), y(i + 1)});
      edges.push_back({z(i), z(i + 1)});
      edges.push_back({w(i), y(i + 1)});
      edges.push_back({w(i), z(i + 1)});
    }
    if (i >= 1) {
      edges.push_back({x(i), y(i - 1)});
      edges.push_back({x(i), z(i - 1)});
    }
  }
  return Graph(4 * p, edges);
}

Graph triangular_grid(int n) {
  require(n >= 2 && n <= 10000, "triangular_grid needs 2 <= n <= 10000, got " + std::to_string(n));
  std::vector<Edge> edges;
  for (int j = 0; j < n; ++j) {
    edges.push_back({j, n + j});
    if (j + 1 < n) {
      edges.push_back({j, j + 1});
      edges.push_back({n + j, n + j + 1});
      edges.push_back({n + j, j + 1});
    }
  }
  return Graph(2 * n, edges);
}

GridCorners triangular_grid_corners(int n) { return {0, n, n - 1, 2 * n - 1}; }

Graph ladder(int l) {
  require(l >= 1 && l <= 10000, "ladder needs 1 <= l <= 10000, got " + std::to_string(l));
  const int cols = l + 1;
  std::vector<Edge> edges;
  for (int j = 0; j < cols; ++j) {
    edges.push_back({j, cols + j});
    if (j + 1 < cols) {
      edges.push_back({j, j + 1});
      edges.push_back({cols + j, cols + j + 1});
    }
  }
  return Graph(2 * cols, edges);
}

GridCorners ladder_corners(int l) { return {0, l + 1, l, 2 * l + 1}; }

Graph w6pp() {
  std::vector<Edge> edges;
  for (Vertex r = 0; r < 6; ++r) {
    edges.push_back({r, (r + 1) % 6});
    edges.push_back({r, 6});
  }
  edges.push_back({7, 1});
  edges.push_back({7, 2});
  edges.push_back({8, 3});
  edges.push_back({8, 4});
  return Graph(9, edges);
}

Graph random_connected(Vertex n, std::int64_t m, std::uint64_t seed) {
  require_order(n, 1, "random_connected");
  const std::int64_t most = static_cast<std::int64_t>(n) * (n - 1) / 2;
  require(m >= n - 1 && m <= most, "random_connected needs n-1 <= m <= n(n-1)/2, got m=" + std::to_string(m));
  Rng rng(seed);
  auto edges = random_tree_edges(n, rng);
  std::set<Edge> taken;
  for (const auto& e : edges) taken.insert({std::min(e.u, e.v), std::max(e.u, e.v)});
  std::vector<Edge> spare;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (!taken.contains({u, v})) spare.push_back({u, v});
    }
  }
  rng.shuffle(spare);
  edges.insert(edges.end(), spare.begin(), spare.begin() + (m - (n - 1)));
  return relabeled(n, edges, rng);
}

Graph random_chordal(Vertex n, std::uint64_t seed) {
  require_order(n, 1, "random_chordal");
  Rng rng(seed);
  // Each new vertex is joined to a nonempty subset of an existing clique, so
  // it is simplicial when added and the reversed insertion order is a
  // perfect elimination ordering.
  std::vector<std::vector<Vertex>> cliques{{0}};
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) {
    const auto& base = cliques[rng.below(cliques.size())];
    std::vector<Vertex> picked;
    for (Vertex c : base) {
      if (rng.coin()) picked.push_back(c);
    }
    if (picked.empty()) picked.push_back(base[rng.below(base.size())]);
    for (Vertex c : picked) edges.push_back({c, v});
    picked.push_back(v);
    cliques.push_back(std::move(picked));
  }
  return relabeled(n, edges, rng);
}

Graph random_tree(Vertex n, std::uint64_t seed) {
  require_order(n, 1, "random_tree");
  Rng rng(seed);
  const auto edges = random_tree_edges(n, rng);
  return relabeled(n, edges, rng);
}

Graph random_block(Vertex n, std::uint64_t seed) {
  require_order(n, 1, "random_block");
  Rng rng(seed);
  // Blocks are cliques; a new vertex either joins a whole block or starts a
  // new two-vertex block at a random cut vertex.
  std::vector<std::vector<Vertex>> blocks;
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) {
    if (!blocks.empty() && rng.coin()) {
      auto& block = blocks[rng.below(blocks.size())];
      for (Vertex c : block) edges.push_back({c, v});
      block.push_back(v);
    } else {
      const auto c = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(v)));
      edges.push_back({c, v});
      blocks.push_back({c, v});
    }
  }
  return relabeled(n, edges, rng);
}

namespace {

struct Family {
  std::vector<std::string> params;
  bool random;
  std::function<Graph(const std::vector<std::int64_t>&, std::uint64_t)> build;
};

Vertex as_vertex(std::int64_t value) {
  require(value >= 0 && value <= std::numeric_limits<Vertex>::max(), "parameter out of range: " + std::to_string(value));
  return static_cast<Vertex>(value);
}

int as_int(std::int64_t value) {
  require(value >= std::numeric_limits<int>::min() && value <= std::numeric_limits<int>::max(),
          "parameter out of range: " + std::to_string(value));
  return static_cast<int>(value);
}

const std::map<std::string, Family, std::less<>>& families() {
  using Args = const std::vector<std::int64_t>&;
  static const std::map<std::string, Family, std::less<>> table{
      {"path", {{"n"}, false, [](Args a, std::uint64_t) { return path_graph(as_vertex(a[0])); }}},
      {"cycle", {{"n"}, false, [](Args a, std::uint64_t) { return cycle_graph(as_vertex(a[0])); }}},
      {"complete", {{"n"}, false, [](Args a, std::uint64_t) { return complete_graph(as_vertex(a[0])); }}},
      {"star", {{"n"}, false, [](Args a, std::uint64_t) { return star_graph(as_vertex(a[0])); }}},
      {"hypercube", {{"dim"}, false, [](Args a, std::uint64_t) { return hypercube(as_int(a[0])); }}},
      {"g_p", {{"p"}, false, [](Args a, std::uint64_t) { return g_p(as_int(a[0])); }}},
      {"triangular_grid", {{"n"}, false, [](Args a, std::uint64_t) { return triangular_grid(as_int(a[0])); }}},
      {"ladder", {{"l"}, false, [](Args a, std::uint64_t) { return ladder(as_int(a[0])); }}},
      {"w6pp", {{}, false, [](Args, std::uint64_t) { return w6pp(); }}},
      {"random_connected",
       {{"n", "m"}, true, [](Args a, std::uint64_t s) { return random_connected(as_vertex(a[0]), a[1], s); }}},
      {"random_chordal", {{"n"}, true, [](Args a, std::uint64_t s) { return random_chordal(as_vertex(a[0]), s); }}},
      {"random_tree", {{"n"}, true, [](Args a, std::uint64_t s) { return random_tree(as_vertex(a[0]), s); }}},
      {"random_block", {{"n"}, true, [](Args a, std::uint64_t s) { return random_block(as_vertex(a[0]), s); }}},
  };
  return table;
}

const Family& lookup(std::string_view name) {
  const auto it = families().find(name);
  if (it == families().end()) throw InvalidArgument("unknown graph family '" + std::string(name) + "'");
  return it->second;
}

}  // namespace

Graph generate(std::string_view family, const FamilyParams& params, std::uint64_t seed) {
  const Family& f = lookup(family);
  for (const auto& [key, value] : params) {
    if (std::find(f.params.begin(), f.params.end(), key) == f.params.end()) {
      throw InvalidArgument("family '" + std::string(family) + "' has no parameter '" + key + "'");
    }
  }
  std::vector<std::int64_t> args;
  for (const auto& name : f.params) {
    const auto it = params.find(name);
    if (it == params.end()) {
      throw InvalidArgument("family '" + std::string(family) + "' needs parameter '" + name + "'");
    }
    args.push_back(it->second);
  }
  return f.build(args, seed);
}

const std::vector<std::string>& family_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, f] : families()) out.push_back(name);
    return out;
  }();
  return names;
}

bool is_random_family(std::string_view family) { return lookup(family).random; }

}  // namespace amg
