#include <gtest/gtest.h>

#include <cmath>

#include "inducibility/bounds.hpp"
#include "inducibility/errors.hpp"
#include "inducibility/family.hpp"
#include "inducibility/rational.hpp"

using namespace inducibility;

namespace {

const BoundValue& row(const BoundReport& r, const std::string& provenance) {
  for (const BoundValue& v : r.values) {
    if (v.provenance == provenance) return v;
  }
  throw std::runtime_error("missing row " + provenance);
}

}  // namespace

TEST(Bounds, SixCycleHypergraphUpper) {
  const BoundReport r = bound_eval(PatternFamily::cycle(6), 36);
  const BoundValue& b = row(r, "c6_hypergraph_upper");
  EXPECT_EQ(b.kind, BoundKind::kUpper);
  ASSERT_TRUE(b.exact);
  EXPECT_EQ(*b.exact, Rational(648));
  EXPECT_DOUBLE_EQ(b.value, 648.0);
}

TEST(Bounds, EvenPathUpper) {
  const BoundValue& b = row(bound_eval(PatternFamily::path(4), 10), "even_path_upper");
  ASSERT_TRUE(b.exact);
  EXPECT_EQ(*b.exact, Rational(50));
}

TEST(Bounds, CherryExact) {
  const BoundReport r = bound_eval(PatternFamily::path(3), 9);
  const BoundValue& b = row(r, "p3_star_exact");
  EXPECT_EQ(b.kind, BoundKind::kExact);
  EXPECT_EQ(*b.exact, Rational(36));
  EXPECT_EQ(effective_upper(r.values).provenance, "p3_star_exact");
  EXPECT_EQ(construction_lower(r.values).value, 36.0);
}

TEST(Bounds, FourCycleQuarterSquare) {
  const BoundReport r = bound_eval(PatternFamily::cycle(4), 16);
  EXPECT_EQ(*row(r, "c4_upper").exact, Rational(64));
  const BoundValue& odd = row(bound_eval(PatternFamily::cycle(4), 7), "c4_upper");
  EXPECT_EQ(*odd.exact, *Rational::fraction(49, 4));
}

TEST(Bounds, OddCycleExactAtPerfectSquares) {
  const BoundValue& b = row(bound_eval(PatternFamily::cycle(5), 25), "odd_cycle_upper");
  ASSERT_TRUE(b.exact);
  EXPECT_EQ(*b.exact, *Rational::fraction(625, 2));
  EXPECT_NEAR(b.value, std::pow(25.0, 2.5) / 10.0, 1e-9);
}

TEST(Bounds, GenericAutomorphismUpper) {
  // K_{1,3}: 2^{4/2} / 6 * m^3.
  const PatternFamily f = PatternFamily::of(star_graph(3));
  const BoundValue& b = row(bound_eval(f, 6), "generic_aut_upper");
  EXPECT_NEAR(b.value, 4.0 / 6.0 * 216.0, 1e-9);
}

TEST(Bounds, EveryRowHasAFiniteValue) {
  for (const PatternFamily f : {PatternFamily::path(3), PatternFamily::path(4), PatternFamily::path(5),
                                PatternFamily::path(8), PatternFamily::cycle(4), PatternFamily::cycle(5),
                                PatternFamily::cycle(6), PatternFamily::cycle(8), PatternFamily::cycle(9)}) {
    for (const std::int64_t m : {1, 4, 9, 100, 1000000}) {
      const BoundReport r = bound_eval(f, m);
      EXPECT_FALSE(r.values.empty());
      for (const BoundValue& v : r.values) {
        EXPECT_TRUE(std::isfinite(v.value)) << f.name() << " " << m << " " << v.provenance;
        if (v.exact) EXPECT_NEAR(v.exact->to_double(), v.value, 1e-9 * std::max(1.0, v.value)) << v.provenance;
      }
      const BoundValue& upper = effective_upper(r.values);
      EXPECT_TRUE(within_upper(r.construction.count, upper)) << f.name() << " " << m;
    }
  }
}

TEST(Bounds, RangeErrors) {
  EXPECT_THROW(bound_eval(PatternFamily::path(4), 0), RangeError);
  EXPECT_THROW(PatternFamily::path(0), RangeError);
  EXPECT_THROW(PatternFamily::cycle(2), RangeError);
  EXPECT_THROW(PatternFamily::parse("Q7"), Error);
}

TEST(Rational, ArithmeticAndPrinting) {
  const Rational half = *Rational::fraction(2, 4);
  EXPECT_EQ(half.to_string(), "1/2");
  EXPECT_EQ(Rational(3).to_string(), "3/1");
  EXPECT_EQ(*multiply(half, Rational(6)), Rational(3));
  EXPECT_EQ(*divide(Rational(1), Rational(3)), *Rational::fraction(1, 3));
  EXPECT_EQ(*power(Rational(10), 30), *multiply(*power(Rational(10), 15), *power(Rational(10), 15)));
  EXPECT_FALSE(power(Rational(10), 40).has_value());
  EXPECT_LT(*Rational::fraction(1, 3), half);
  EXPECT_THROW(Rational::fraction(1, 0), InputError);
}
