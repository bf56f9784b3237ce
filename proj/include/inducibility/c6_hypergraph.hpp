#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "inducibility/graph.hpp"

namespace inducibility {

using EdgeTriple = std::array<Edge, 3>;  // sorted

struct C6HypergraphReport {
  std::int64_t m = 0;
  std::uint64_t gamma = 0;                // c(G, C6)
  std::vector<EdgeTriple> capable_triples;  // sorted
  std::map<std::pair<Edge, Edge>, std::uint64_t> codegrees;  // pairs with d > 0
  std::uint64_t codegree_sum = 0;           // sum over pairs of d, equals 3 e(H)
  std::uint64_t hyperedge_codegree_sum = 0;  // sum over hyperedges of d12 + d13 + d23
  std::uint64_t codegree_square_sum = 0;     // sum over pairs of d^2
  std::uint64_t two_section_edges = 0;

  std::uint64_t hyperedges() const { return capable_triples.size(); }
  // Each inequality of the chain and the two counting identities, exactly.
  bool hyperedges_equal_two_gamma() const { return hyperedges() == 2 * gamma; }
  bool codegree_sum_within_m_gamma() const;
  bool squares_identity() const { return hyperedge_codegree_sum == codegree_square_sum; }
  bool cauchy_schwarz() const;  // sum d^2 * e(2-section) >= (6 Gamma)^2
  bool two_section_within_half_m_squared() const;
  bool gamma_within_bound() const;  // 72 Gamma <= m^3
  bool pass() const;
};

C6HypergraphReport c6_hypergraph_check(const Graph& g);

}  // namespace inducibility
