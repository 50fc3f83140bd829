// Exact half-integers stored as doubled integers.
#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace amg {

class HalfInteger {
 public:
  constexpr HalfInteger() = default;

  static constexpr HalfInteger from_doubled(std::int64_t doubled) { return HalfInteger(doubled); }
  static constexpr HalfInteger from_integer(std::int64_t value) { return HalfInteger(2 * value); }

  constexpr std::int64_t doubled() const { return doubled_; }
  constexpr bool is_integer() const { return doubled_ % 2 == 0; }

  constexpr std::int64_t floor() const {
    return doubled_ >= 0 ? doubled_ / 2 : -((-doubled_ + 1) / 2);
  }
  constexpr std::int64_t ceil() const {
    return doubled_ >= 0 ? (doubled_ + 1) / 2 : -((-doubled_) / 2);
  }

  constexpr HalfInteger operator+(HalfInteger o) const { return HalfInteger(doubled_ + o.doubled_); }
  constexpr HalfInteger operator-(HalfInteger o) const { return HalfInteger(doubled_ - o.doubled_); }

  constexpr auto operator<=>(const HalfInteger&) const = default;

  // "3/2", "1", "-1/2"
  std::string to_string() const {
    if (is_integer()) return std::to_string(doubled_ / 2);
    return std::to_string(doubled_) + "/2";
  }

 private:
  constexpr explicit HalfInteger(std::int64_t doubled) : doubled_(doubled) {}

  std::int64_t doubled_ = 0;
};

}  // namespace amg
