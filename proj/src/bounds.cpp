#include "inducibility/bounds.hpp"

#include <cmath>

#include "inducibility/canonical.hpp"
#include "inducibility/errors.hpp"
#include "inducibility/frac_independence.hpp"

namespace inducibility {
namespace {

struct Builder {
  std::string family;
  std::int64_t m;
  std::vector<BoundValue> rows;

  void add(BoundKind kind, std::string provenance, double value,
           std::optional<Rational> exact = std::nullopt) {
    if (exact) value = exact->to_double();
    rows.push_back({family, m, kind, std::move(provenance), value, exact});
  }
};

std::optional<Rational> ratio(std::optional<Rational> num, std::optional<Rational> den) {
  if (!num || !den) return std::nullopt;
  return divide(*num, *den);
}

std::optional<Rational> times(std::optional<Rational> a, std::optional<Rational> b) {
  if (!a || !b) return std::nullopt;
  return multiply(*a, *b);
}

std::optional<Rational> pow_int(std::int64_t base, int e) { return power(Rational(base), e); }

// m^(p/2) exactly when p is even or m is a perfect square.
std::optional<Rational> pow_half(std::int64_t m, int halves) {
  if (halves % 2 == 0) return pow_int(m, halves / 2);
  const auto r = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(m))));
  if (r * r != m) return std::nullopt;
  return pow_int(r, halves);
}

}  // namespace

std::string to_string(BoundKind kind) {
  switch (kind) {
    case BoundKind::kUpper:
      return "upper";
    case BoundKind::kExact:
      return "exact";
    case BoundKind::kConjecture:
      return "conjecture";
    case BoundKind::kAsymptoticLower:
      return "asymptotic_lower";
    case BoundKind::kConstructionLower:
      return "construction_lower";
  }
  return "unknown";
}

bool within_upper(std::uint64_t x, const BoundValue& bound) {
  if (bound.exact) return Rational(static_cast<std::int64_t>(x)) <= *bound.exact;
  return static_cast<double>(x) <= bound.value * (1.0 + kBoundSlack) + kBoundSlack;
}

BoundReport bound_eval(const PatternFamily& family, std::int64_t m) {
  if (m < 1) throw RangeError("edge budget must be at least 1");
  const int k = family.k();
  if (family.kind() == PatternFamily::Kind::kPath && k < 3) {
    throw RangeError("path bounds need P_k with k >= 3");
  }
  if (family.kind() == PatternFamily::Kind::kCycle && k < 3) {
    throw RangeError("cycle bounds need C_k with k >= 3");
  }
  const Graph h = family.graph();
  if (h.has_isolated_vertex()) {
    throw InputError("pattern has an isolated vertex; its induced count is unbounded");
  }
  Builder b{family.name(), m, {}};
  const double md = static_cast<double>(m);

  // Generic bound, valid for every pattern without isolated vertices.
  const std::uint64_t aut = automorphism_order(h);
  const HalfInteger af = alpha_f(h);
  const int v = h.order();
  {
    const double value = std::pow(2.0, v / 2.0) / static_cast<double>(aut) *
                         std::pow(md, af.to_double());
    std::optional<Rational> exact;
    if (v % 2 == 0) exact = ratio(times(pow_int(2, v / 2), pow_half(m, static_cast<int>(af.halves()))),
                                  Rational(static_cast<std::int64_t>(aut)));
    b.add(BoundKind::kUpper, "generic_aut_upper", value, exact);
  }
  {
    const int edges = h.size();
    const double value = std::pow(md / edges, af.to_double());
    b.add(BoundKind::kAsymptoticLower, "generic_asymptotic_lower", value,
          af.is_integer() ? power(*Rational::fraction(m, edges), static_cast<int>(af.halves() / 2))
                          : std::nullopt);
  }

  if (family.kind() == PatternFamily::Kind::kPath) {
    if (k == 3) {
      b.add(BoundKind::kExact, "p3_star_exact", md * (md - 1) / 2,
            Rational::fraction(static_cast<Int128>(m) * (m - 1), 2));
    } else if (k % 2 == 0) {
      const int l = k / 2;
      const double value = std::pow(md, l) / (2.0 * std::pow(l - 1.0, l - 1));
      b.add(BoundKind::kUpper, "even_path_upper", value,
            ratio(pow_int(m, l), times(Rational(2), pow_int(l - 1, l - 1))));
      const double conj = (k + 1) * std::pow(md / (k + 1), k / 2.0);
      b.add(BoundKind::kConjecture, "even_path_conjecture", conj,
            times(Rational(k + 1), power(*Rational::fraction(m, k + 1), k / 2)));
    } else {
      const int l = (k - 1) / 2;
      const double value = std::pow(md, l + 1) / (4.0 * std::pow(l, l));
      b.add(BoundKind::kUpper, "odd_path_upper", value,
            ratio(pow_int(m, l + 1), times(Rational(4), pow_int(l, l))));
      const double conj = 4.0 * std::pow(md / (k + 1), (k + 1) / 2.0);
      b.add(BoundKind::kConjecture, "odd_path_conjecture", conj,
            times(Rational(4), power(*Rational::fraction(m, k + 1), (k + 1) / 2)));
    }
  } else if (family.kind() == PatternFamily::Kind::kCycle && k >= 4) {
    if (k == 4) {
      b.add(BoundKind::kUpper, "c4_upper", md * md / 4, ratio(pow_int(m, 2), Rational(4)));
    } else if (k == 6) {
      b.add(BoundKind::kUpper, "c6_hypergraph_upper", 3 * std::pow(md / 6, 3),
            times(Rational(3), power(*Rational::fraction(m, 6), 3)));
    } else if (k % 2 == 0) {
      const int l = k / 2;
      const double value = std::pow(md / (2.0 * l), l) * std::pow(1.0 + 1.0 / (l - 1), l - 1);
      b.add(BoundKind::kUpper, "even_cycle_upper", value,
            times(power(*Rational::fraction(m, 2 * l), l),
                  power(*Rational::fraction(l, l - 1), l - 1)));
    } else {
      const int l = (k - 1) / 2;
      const double lead = std::pow(2.0 * l + 1, l - 0.5) /
                          (2.0 * std::pow(l - 1.0, (l - 1.0) * (2.0 * l + 1) / (2.0 * l)));
      const double value = lead * std::pow(md / (2.0 * l + 1), (2.0 * l + 1) / 2.0);
      // For l = 2 the constant collapses: value = m^(5/2) / 10.
      std::optional<Rational> exact;
      if (l == 2) exact = ratio(pow_half(m, 5), Rational(10));
      b.add(BoundKind::kUpper, "odd_cycle_upper", value, exact);
    }
    if (k >= 5) {
      b.add(BoundKind::kConjecture, "cycle_conjecture", std::pow(md / k, k / 2.0),
            k % 2 == 0 ? power(*Rational::fraction(m, k), k / 2) : std::nullopt);
    }
  }

  BoundReport report;
  report.construction = optimize_part_sizes(family, m);
  b.add(BoundKind::kConstructionLower, "construction_lower",
        static_cast<double>(report.construction.count),
        Rational(static_cast<std::int64_t>(report.construction.count)));
  report.values = std::move(b.rows);
  return report;
}

const BoundValue& effective_upper(const std::vector<BoundValue>& values) {
  const BoundValue* best = nullptr;
  for (const BoundValue& v : values) {
    if (v.kind != BoundKind::kUpper && v.kind != BoundKind::kExact) continue;
    if (!best) {
      best = &v;
      continue;
    }
    const bool smaller = v.exact && best->exact ? *v.exact < *best->exact : v.value < best->value;
    if (smaller) best = &v;
  }
  if (!best) throw RangeError("no applicable upper bound");
  return *best;
}

const BoundValue& construction_lower(const std::vector<BoundValue>& values) {
  for (const BoundValue& v : values) {
    if (v.kind == BoundKind::kConstructionLower) return v;
  }
  throw RangeError("no construction lower bound");
}

}  // namespace inducibility
