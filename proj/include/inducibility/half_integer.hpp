#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <string>

namespace inducibility {

// Exact multiple of 1/2, stored in half-units.
class HalfInteger {
 public:
  constexpr HalfInteger() = default;
  static constexpr HalfInteger from_halves(std::int64_t halves) { return HalfInteger(halves); }
  static constexpr HalfInteger from_integer(std::int64_t value) { return HalfInteger(2 * value); }

  constexpr std::int64_t halves() const { return halves_; }
  constexpr bool is_integer() const { return halves_ % 2 == 0; }
  constexpr double to_double() const { return static_cast<double>(halves_) / 2.0; }

  // Reduced "p/q" text, e.g. "5/2", "3/1".
  std::string to_string() const {
    const std::int64_t g = std::gcd(halves_, std::int64_t{2});
    const std::int64_t den = 2 / (g == 0 ? 2 : g);
    return std::to_string(halves_ / (2 / den)) + "/" + std::to_string(den);
  }

  constexpr HalfInteger& operator+=(HalfInteger o) {
    halves_ += o.halves_;
    return *this;
  }
  friend constexpr HalfInteger operator+(HalfInteger a, HalfInteger b) { return a += b; }
  friend constexpr HalfInteger operator-(HalfInteger a, HalfInteger b) {
    return HalfInteger(a.halves_ - b.halves_);
  }
  friend constexpr HalfInteger operator*(std::int64_t k, HalfInteger a) {
    return HalfInteger(k * a.halves_);
  }
  constexpr auto operator<=>(const HalfInteger&) const = default;

 private:
  constexpr explicit HalfInteger(std::int64_t halves) : halves_(halves) {}
  std::int64_t halves_ = 0;
};

}  // namespace inducibility
