#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>

namespace inducibility {

using Int128 = __int128;

// Exact rational with a 128-bit numerator and a positive denominator, always
// reduced. Arithmetic that would overflow returns std::nullopt.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t value) : num_(value) {}  // NOLINT(google-explicit-constructor)
  static std::optional<Rational> fraction(Int128 num, Int128 den);

  Int128 num() const { return num_; }
  Int128 den() const { return den_; }
  bool is_integer() const { return den_ == 1; }
  double to_double() const;
  // "p/q"; integers keep the "/1".
  std::string to_string() const;

  friend std::optional<Rational> multiply(const Rational& a, const Rational& b);
  friend std::optional<Rational> divide(const Rational& a, const Rational& b);
  friend std::optional<Rational> power(const Rational& a, int exponent);

  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);
  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  Int128 num_ = 0;
  Int128 den_ = 1;
};

std::string int128_to_string(Int128 value);

}  // namespace inducibility
