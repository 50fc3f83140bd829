#include "amg/error.hpp"

namespace amg {

std::string_view to_string(GraphErrorKind kind) {
  switch (kind) {
    case GraphErrorKind::MalformedHeader: return "malformed-header";
    case GraphErrorKind::MalformedEdge: return "malformed-edge";
    case GraphErrorKind::VertexOutOfRange: return "vertex-out-of-range";
    case GraphErrorKind::SelfLoop: return "self-loop";
    case GraphErrorKind::DuplicateEdge: return "duplicate-edge";
    case GraphErrorKind::EdgeCountMismatch: return "edge-count-mismatch";
    case GraphErrorKind::Disconnected: return "disconnected";
  }
  return "unknown";
}

namespace {

std::string graph_message(GraphErrorKind kind, std::size_t line, const std::string& detail) {
  std::string msg(to_string(kind));
  if (line > 0) msg += " at line " + std::to_string(line);
  if (!detail.empty()) msg += ": " + detail;
  return msg;
}

}  // namespace

GraphError::GraphError(GraphErrorKind kind, std::size_t line, const std::string& detail)
    : Error(graph_message(kind, line, detail)), kind_(kind), line_(line) {}

CapExceeded::CapExceeded(std::string_view what, std::uint64_t reached, std::uint64_t cap)
    : Error(std::string(what) + " exceeds cap " + std::to_string(cap) + " (reached " +
            std::to_string(reached) + ")"),
      reached_(reached),
      cap_(cap) {}

}  // namespace amg
