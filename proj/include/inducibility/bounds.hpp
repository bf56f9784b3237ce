#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "inducibility/constructions.hpp"
#include "inducibility/family.hpp"
#include "inducibility/rational.hpp"

namespace inducibility {

enum class BoundKind {
  kUpper,              // rigorous upper bound on rho(H, m)
  kExact,              // exact value (P_3)
  kConjecture,         // conjectured asymptotic value
  kAsymptoticLower,    // leading term of an asymptotic lower bound
  kConstructionLower,  // exact count of an explicit construction
};

std::string to_string(BoundKind kind);

struct BoundValue {
  std::string family;
  std::int64_t m = 0;
  BoundKind kind = BoundKind::kUpper;
  std::string provenance;
  double value = 0.0;
  std::optional<Rational> exact;
};

// Relative slack for float-only bound comparisons.
inline constexpr double kBoundSlack = 1e-9;

// x <= bound, using the exact value when present.
bool within_upper(std::uint64_t x, const BoundValue& bound);

struct BoundReport {
  std::vector<BoundValue> values;
  Construction construction;
};

// Every applicable upper bound, the conjectured value, the generic asymptotic
// lower term and the construction lower bound. Throws RangeError for P_k with
// k < 3, C_k with k < 3, or m < 1. C_3 falls under the generic bound.
BoundReport bound_eval(const PatternFamily& family, std::int64_t m);

// Minimum over kUpper and kExact rows. Throws RangeError when there is none.
const BoundValue& effective_upper(const std::vector<BoundValue>& values);
const BoundValue& construction_lower(const std::vector<BoundValue>& values);

}  // namespace inducibility
