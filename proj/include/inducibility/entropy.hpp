#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "inducibility/graph.hpp"
#include "inducibility/induced_count.hpp"

namespace inducibility {

// Uniform distribution on the ordered induced copies of a pattern. Rows are
// either vertex tuples or edge tuples; edge coordinate i is the unordered
// edge {x_i, x_{i+1}} (indices mod k for cycles), encoded as min * 64 + max.
class CopyDistribution {
 public:
  // Vertex view of all ordered induced copies of `pattern` in `host`.
  CopyDistribution(const Graph& host, const Graph& pattern);
  CopyDistribution(std::vector<std::vector<int>> rows, int arity);

  // Edge view along the pattern's path order (k - 1 coordinates) or cycle
  // order (k coordinates). Requires a vertex view.
  CopyDistribution edge_view(bool cyclic) const;

  int arity() const { return arity_; }
  std::size_t size() const { return rows_.size(); }
  const std::vector<std::vector<int>>& rows() const { return rows_; }

 private:
  std::vector<std::vector<int>> rows_;
  int arity_ = 0;
};

inline int encode_edge(int a, int b) { return a < b ? a * 64 + b : b * 64 + a; }

// H(target | given) in nats, from exact group counts:
// (1/N) * sum over given-groups g of (n_g log n_g - sum_t c_{g,t} log c_{g,t}).
// Coordinates are 0-based and must be disjoint. Throws InputError on an empty
// support or a bad coordinate.
double projection_entropy(const CopyDistribution& dist, const std::vector<int>& target,
                          const std::vector<int>& given = {});

inline constexpr double kEntropyTolerance = 1e-9;

struct EntropyTerm {
  enum class Kind { kIdentity, kInequality };
  std::string name;
  double lhs = 0;
  double rhs = 0;
  Kind kind = Kind::kInequality;

  // rhs - lhs: must be >= -tol for inequalities, within +-tol for identities.
  double slack() const { return rhs - lhs; }
  bool holds() const;
};

// An exact integer inequality lhs <= rhs.
struct IntegerCheck {
  std::string name;
  std::int64_t lhs = 0;
  std::int64_t rhs = 0;
  bool holds() const { return lhs <= rhs; }
};

struct EntropyReport {
  std::vector<EntropyTerm> terms;
  std::vector<IntegerCheck> integer_checks;

  bool pass() const;
  void add_identity(std::string name, double lhs, double rhs);
  void add_inequality(std::string name, double lhs, double rhs);
  void append(const EntropyReport& other);
};

// Chain rule along `ordering`: H(X) = sum_i H(X_{o_i} | X_{o_<i}), and each
// conditional term is at most the matching marginal. Also H(X) = log N.
EntropyReport verify_chain(const CopyDistribution& dist, const std::vector<int>& ordering);

// |H(X, Y) - H(X) - H(Y | X)| over `splits` random disjoint coordinate sets.
EntropyReport verify_random_splits(const CopyDistribution& dist, int splits, std::uint64_t seed);

// r * H(X) <= sum_A H(X_A). Throws InputError if some coordinate lies in
// fewer than r sets.
EntropyReport verify_shearer(const CopyDistribution& dist,
                             const std::vector<std::vector<int>>& cover, int r);

// All (k-1)-subsets, each coordinate covered k-1 times.
std::vector<std::vector<int>> leave_one_out_cover(int k);

// Term-by-term check of the entropy decomposition for P_{2l} or P_{2l+1}
// (l >= 2) on `host`, including the per-copy edge budgets as integer checks
// and the aggregate bound against the closed form. Throws InputError when
// the host has no induced copy.
EntropyReport verify_path_decomposition(const Graph& host, PathOrCycle path);

// H(C) = log(2(2l+1) Gamma) <= (2l+1)/(2l) log(2 Upsilon) for C_{2l+1}
// through the leave-one-out cover of its vertex tuple.
EntropyReport verify_odd_cycle_reduction(const Graph& host, int k);

// C_4: log(8 Gamma) <= H(e1) + H(e3) + H(e2, e4 | e1, e3) <= 2 log m + log 2.
EntropyReport verify_c4_decomposition(const Graph& host);

}  // namespace inducibility
