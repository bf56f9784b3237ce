#pragma once

#include <cstdint>
#include <ostream>
#include <vector>

#include "inducibility/graph.hpp"
#include "inducibility/half_integer.hpp"

namespace inducibility {

// Contribution of one host edge to every S_j^+ and S_j^- of a fixed induced
// C_{2l}, in half-units, plus the per-case caps derived from J_e.
struct ClaimLedgerRow {
  Edge edge;
  std::vector<int> j_set;         // cycle positions adjacent to the edge
  std::vector<int> plus_halves;   // index j
  std::vector<int> minus_halves;  // index j
  std::vector<int> plus_caps;     // case caps, half-units
  std::vector<int> minus_caps;
};

struct ClaimLedger {
  std::vector<int> cycle;  // v_0 .. v_{2l-1}; e_j = v_j v_{j+1}
  int l = 0;
  std::int64_t m = 0;
  std::vector<HalfInteger> s_plus;
  std::vector<HalfInteger> s_minus;
  HalfInteger total_plus;
  HalfInteger total_minus;
  std::vector<ClaimLedgerRow> rows;  // one per host edge, in edge order

  bool rows_reconstruct = true;  // row sums equal the directly computed S_j
  int cap_violations = 0;        // (row, j, sign) entries above their case cap
  int row_total_violations = 0;  // rows contributing more than l to a total

  HalfInteger budget() const { return HalfInteger::from_integer(m * l); }
  bool within_ml() const { return total_plus <= budget() && total_minus <= budget(); }
  bool within_fallback() const;  // both totals <= (l + 1) m
  bool exceeds_3m() const;       // either total > 3m (exploratory, C_6)
};

// Throws InputError unless `cycle` is an induced C_{2l} of g with l >= 3.
ClaimLedger claim1_check(const Graph& g, const std::vector<int>& cycle);

// One row per host edge: u, v, J_e, then S+_0.., S-_0.. as "p/q" values.
void write_ledger_csv(const ClaimLedger& ledger, std::ostream& out);

}  // namespace inducibility
