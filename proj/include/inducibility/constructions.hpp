#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "inducibility/family.hpp"
#include "inducibility/graph.hpp"

namespace inducibility {

// Base graph plus one part size per base vertex.
struct BlowupSpec {
  Graph base;
  std::vector<int> sizes;

  int order() const;
  // Sum over base edges ij of n_i * n_j.
  std::uint64_t realized_edges() const;
};

// Parts V_i of the given sizes; u in V_i, w in V_j adjacent iff ij is a base
// edge. Vertices of V_0 come first, then V_1, ... Throws RangeError past 64.
Graph blow_up(const BlowupSpec& spec);

// Exact induced-copy counts of a fixed pattern in blow-ups of a fixed base,
// without building the host. An ordered copy maps each pattern vertex to a
// part; two pattern vertices may share a part only if they are non-adjacent,
// and distinct parts must reproduce the pattern's adjacency. Each such part
// map contributes the product of falling factorials of the part sizes.
class BlowupCounter {
 public:
  BlowupCounter(const Graph& pattern, const Graph& base);
  // c(blow_up(spec), pattern) for spec.base == base. Works past 64 vertices;
  // throws RangeError if the count does not fit in 64 bits.
  std::uint64_t count(const std::vector<int>& sizes) const;

 private:
  std::uint64_t aut_ = 1;
  // Part-occupancy profile -> number of part maps with that profile.
  std::map<std::vector<int>, std::uint64_t> profiles_;
};

struct Theorem1Construction {
  BlowupSpec spec;
  std::optional<std::string> warning;
};

// Part sizes floor((m/|E(H)|)^w(v)) for the optimal half-integral weighting w.
// Throws InputError for patterns with isolated vertices and RangeError past
// 64 vertices; a budget below |E(H)| yields a degenerate spec plus a warning.
Theorem1Construction theorem1_lower_construction(const Graph& h, std::int64_t m);

struct Construction {
  BlowupSpec spec;
  std::uint64_t edges = 0;
  std::uint64_t count = 0;  // c(blow_up(spec), pattern)
};

// Best spec found among balanced roundings, the unbalanced templates for each
// family, and a deterministic +-1 local search; objective is the exact count
// under realized edges <= m and at most 64 vertices. Ties prefer fewer edges,
// then the earlier template base, then the lexicographically smaller sizes.
Construction optimize_part_sizes(const PatternFamily& family, std::int64_t m);

}  // namespace inducibility
