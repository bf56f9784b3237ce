#pragma once

#include <utility>
#include <vector>

#include "inducibility/graph.hpp"
#include "inducibility/half_integer.hpp"

namespace inducibility {

// Vertex weights in {0, 1/2, 1}, stored in half-units (0, 1, 2).
struct HalfIntegralWeighting {
  std::vector<int> halves;

  HalfInteger total() const;
  // Every edge uv has w(u) + w(v) <= 1.
  bool feasible(const Graph& h) const;
};

struct ABCDecomposition {
  VertexSet a = 0;  // weight 1
  VertexSet b = 0;  // weight 0, equals N(A)
  VertexSet c = 0;  // weight 1/2
  VertexSet d = 0;  // A-vertices left unmatched by `matching`
  // Pairs (b, a) with b in B, a in A, ab an edge; saturates B.
  std::vector<std::pair<int, int>> matching;
};

struct OptimalWeighting {
  HalfIntegralWeighting weighting;
  ABCDecomposition decomposition;
};

// n - nu(double cover)/2, where nu is a maximum matching of the bipartite
// double cover. Isolated vertices contribute 1.
HalfInteger alpha_f(const Graph& h);
HalfInteger alpha_f(const Graph& h, VertexSet within);

// Maximum over all 3^n half-integral feasible weightings. Throws RangeError
// when n > 14.
HalfInteger alpha_f_bruteforce(const Graph& h);

// Among optimal half-integral weightings, one with the largest weight-1 set A;
// ties go to the lexicographically smallest A (sorted vertex lists). Throws
// InvariantViolation if the B-saturating matching cannot be found.
OptimalWeighting optimal_weighting(const Graph& h);

// Maximum matching between `left` and `right` using edges of h. Returns
// pairs (l, r).
std::vector<std::pair<int, int>> bipartite_matching(const Graph& h, VertexSet left,
                                                    VertexSet right);

}  // namespace inducibility
