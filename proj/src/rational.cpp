#include "inducibility/rational.hpp"

#include <algorithm>

#include "inducibility/errors.hpp"

namespace inducibility {
namespace {

Int128 abs128(Int128 x) { return x < 0 ? -x : x; }

Int128 gcd128(Int128 a, Int128 b) {
  a = abs128(a);
  b = abs128(b);
  while (b != 0) {
    const Int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::optional<Int128> mul(Int128 a, Int128 b) {
  Int128 out;
  if (__builtin_mul_overflow(a, b, &out)) return std::nullopt;
  return out;
}

}  // namespace

std::string int128_to_string(Int128 value) {
  if (value == 0) return "0";
  const bool negative = value < 0;
  std::string digits;
  while (value != 0) {
    const int d = static_cast<int>(value % 10);
    digits.push_back(static_cast<char>('0' + (d < 0 ? -d : d)));
    value /= 10;
  }
  if (negative) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

std::optional<Rational> Rational::fraction(Int128 num, Int128 den) {
  if (den == 0) throw InputError("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const Int128 g = gcd128(num, den);
  Rational r;
  r.num_ = g == 0 ? 0 : num / g;
  r.den_ = g == 0 ? 1 : den / g;
  return r;
}

double Rational::to_double() const {
  return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string Rational::to_string() const {
  return int128_to_string(num_) + "/" + int128_to_string(den_);
}

std::optional<Rational> multiply(const Rational& a, const Rational& b) {
  // Cross-reduce first to keep intermediates small.
  const Int128 g1 = gcd128(a.num_, b.den_);
  const Int128 g2 = gcd128(b.num_, a.den_);
  const auto num = mul(g1 ? a.num_ / g1 : 0, g2 ? b.num_ / g2 : 0);
  const auto den = mul(g2 ? a.den_ / g2 : a.den_, g1 ? b.den_ / g1 : b.den_);
  if (!num || !den) return std::nullopt;
  return Rational::fraction(*num, *den);
}

std::optional<Rational> divide(const Rational& a, const Rational& b) {
  if (b.num_ == 0) throw InputError("division by zero");
  Rational inverse;
  inverse.num_ = b.num_ < 0 ? -b.den_ : b.den_;
  inverse.den_ = abs128(b.num_);
  return multiply(a, inverse);
}

std::optional<Rational> power(const Rational& a, int exponent) {
  Rational out(1);
  for (int i = 0; i < exponent; ++i) {
    const auto next = multiply(out, a);
    if (!next) return std::nullopt;
    out = *next;
  }
  return out;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  const auto lhs = mul(a.num_, b.den_);
  const auto rhs = mul(b.num_, a.den_);
  if (lhs && rhs) return *lhs <=> *rhs;
  // Fall back to floating comparison only when cross products overflow.
  const double x = a.to_double();
  const double y = b.to_double();
  if (x < y) return std::strong_ordering::less;
  if (x > y) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace inducibility
