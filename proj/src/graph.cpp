#include "amg/graph.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

#include "amg/error.hpp"

namespace amg {

namespace {

bool is_connected(const std::vector<std::vector<Vertex>>& adj) {
  if (adj.empty()) return true;
  std::vector<char> seen(adj.size(), 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : adj[static_cast<std::size_t>(v)]) {
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == adj.size();
}

}  // namespace

Graph::Graph(Vertex n, std::span<const Edge> edges) {
  if (n < 1) throw GraphError(GraphErrorKind::MalformedHeader, 0, "vertex count must be at least 1");
  adj_.resize(static_cast<std::size_t>(n));
  for (const Edge& e : edges) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) {
      throw GraphError(GraphErrorKind::VertexOutOfRange, 0,
                       std::to_string(e.u) + " " + std::to_string(e.v));
    }
    if (e.u == e.v) throw GraphError(GraphErrorKind::SelfLoop, 0, std::to_string(e.u));
    adj_[static_cast<std::size_t>(e.u)].push_back(e.v);
    adj_[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  for (auto& list : adj_) {
    std::sort(list.begin(), list.end());
    if (std::adjacent_find(list.begin(), list.end()) != list.end()) {
      throw GraphError(GraphErrorKind::DuplicateEdge, 0, "repeated edge");
    }
  }
  m_ = edges.size();
  if (!is_connected(adj_)) throw GraphError(GraphErrorKind::Disconnected, 0, "graph is not connected");
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto& list = adj_[static_cast<std::size_t>(u)];
  return std::binary_search(list.begin(), list.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

namespace {

std::string_view trim(std::string_view s) {
  const auto ws = " \t\r";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

// Parses exactly two non-negative integers separated by whitespace.
bool parse_pair(std::string_view s, long long& a, long long& b) {
  auto skip_ws = [&](std::size_t i) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    return i;
  };
  std::size_t i = skip_ws(0);
  auto r1 = std::from_chars(s.data() + i, s.data() + s.size(), a);
  if (r1.ec != std::errc() || r1.ptr == s.data() + i) return false;
  std::size_t j = static_cast<std::size_t>(r1.ptr - s.data());
  if (j >= s.size() || (s[j] != ' ' && s[j] != '\t')) return false;
  j = skip_ws(j);
  auto r2 = std::from_chars(s.data() + j, s.data() + s.size(), b);
  if (r2.ec != std::errc() || r2.ptr == s.data() + j) return false;
  std::size_t k = skip_ws(static_cast<std::size_t>(r2.ptr - s.data()));
  return k == s.size();
}

}  // namespace

Graph parse_graph(std::istream& in) {
  std::string raw;
  std::size_t line_no = 0;
  std::size_t header_line = 0;
  long long n = -1;
  long long m = -1;
  std::vector<Edge> edges;
  std::set<Edge> seen;

  while (std::getline(in, raw)) {
    ++line_no;
    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;

    long long a = 0;
    long long b = 0;
    if (header_line == 0) {
      if (!parse_pair(line, a, b) || a < 1 || b < 0) {
        throw GraphError(GraphErrorKind::MalformedHeader, line_no, "expected \"n m\" with n >= 1");
      }
      header_line = line_no;
      n = a;
      m = b;
      continue;
    }
    if (!parse_pair(line, a, b)) {
      throw GraphError(GraphErrorKind::MalformedEdge, line_no, "expected \"u v\"");
    }
    if (static_cast<long long>(edges.size()) == m) {
      throw GraphError(GraphErrorKind::EdgeCountMismatch, line_no,
                       "more than the declared " + std::to_string(m) + " edges");
    }
    if (a < 0 || a >= n || b < 0 || b >= n) {
      throw GraphError(GraphErrorKind::VertexOutOfRange, line_no,
                       std::to_string(a) + " " + std::to_string(b) + " with n=" + std::to_string(n));
    }
    if (a == b) throw GraphError(GraphErrorKind::SelfLoop, line_no, std::to_string(a));
    const Edge key{static_cast<Vertex>(std::min(a, b)), static_cast<Vertex>(std::max(a, b))};
    if (!seen.insert(key).second) {
      throw GraphError(GraphErrorKind::DuplicateEdge, line_no,
                       std::to_string(key.u) + " " + std::to_string(key.v));
    }
    edges.push_back(key);
  }

  if (header_line == 0) throw GraphError(GraphErrorKind::MalformedHeader, line_no + 1, "missing header");
  if (static_cast<long long>(edges.size()) != m) {
    throw GraphError(GraphErrorKind::EdgeCountMismatch, line_no + 1,
                     "declared " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
  }
  if (n > INT32_MAX) throw GraphError(GraphErrorKind::MalformedHeader, header_line, "too many vertices");
  try {
    return Graph(static_cast<Vertex>(n), edges);
  } catch (const GraphError& e) {
    // Only connectivity can still fail here; report it against the header.
    throw GraphError(e.kind(), header_line, "graph is not connected");
  }
}

Graph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_graph(in);
}

void write_graph(std::ostream& out, const Graph& g) {
  out << g.order() << ' ' << g.size() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

std::string write_graph(const Graph& g) {
  std::ostringstream out;
  write_graph(out, g);
  return out.str();
}

}  // namespace amg
