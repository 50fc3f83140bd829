// Exception types shared by every module.
#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace amg {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad parameter to an operation (family parameter, slice index, exponent...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

enum class GraphErrorKind {
  MalformedHeader,
  MalformedEdge,
  VertexOutOfRange,
  SelfLoop,
  DuplicateEdge,
  EdgeCountMismatch,
  Disconnected,
};

std::string_view to_string(GraphErrorKind kind);

// Invalid graph input. `line` is the 1-based input line, or 0 when the graph
// was built in memory rather than parsed.
class GraphError : public Error {
 public:
  GraphError(GraphErrorKind kind, std::size_t line, const std::string& detail);

  GraphErrorKind kind() const noexcept { return kind_; }
  std::size_t line() const noexcept { return line_; }

 private:
  GraphErrorKind kind_;
  std::size_t line_;
};

// A size guard tripped (hull vertex cap, metric-triangle vertex cap, ...).
class CapExceeded : public Error {
 public:
  CapExceeded(std::string_view what, std::uint64_t reached, std::uint64_t cap);

  std::uint64_t reached() const noexcept { return reached_; }
  std::uint64_t cap() const noexcept { return cap_; }

 private:
  std::uint64_t reached_;
  std::uint64_t cap_;
};

}  // namespace amg
