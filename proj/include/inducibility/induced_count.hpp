#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "inducibility/graph.hpp"

namespace inducibility {

// Directed view of a host edge: `tail` -> `head` (u_i -> v_i).
struct OrientedEdge {
  int tail = 0;
  int head = 0;

  OrientedEdge reversed() const { return {head, tail}; }
  Edge unordered() const { return {tail, head}; }
  auto operator<=>(const OrientedEdge&) const = default;
};

using OrientedEdgeTuple = std::vector<OrientedEdge>;

struct CountSummary {
  std::uint64_t ordered = 0;    // injective maps preserving adjacency and non-adjacency
  std::uint64_t unordered = 0;  // c(G, H)
  std::uint64_t aut = 1;        // |Aut(H)|
};

// A path or cycle pattern on k vertices, vertices numbered along the path/cycle.
struct PathOrCycle {
  enum class Kind { kPath, kCycle };
  Kind kind = Kind::kPath;
  int k = 0;

  static PathOrCycle path(int k) { return {Kind::kPath, k}; }
  static PathOrCycle cycle(int k) { return {Kind::kCycle, k}; }
  Graph graph() const;
  // Edges of an ordered copy: k-1 for paths, k for cycles.
  int edge_count() const { return kind == Kind::kPath ? k - 1 : k; }
};

// Visits every ordered induced copy of `pattern` in `host`. The callback gets
// the host image of each pattern vertex (indexed by pattern vertex). Pattern
// vertices 0..pinned.size()-1 are fixed to the given host vertices.
void for_each_ordered_copy(const Graph& host, const Graph& pattern, std::span<const int> pinned,
                           const std::function<void(std::span<const int>)>& visit);

std::uint64_t count_ordered_copies(const Graph& host, const Graph& pattern,
                                   std::span<const int> pinned = {});

std::vector<std::vector<int>> ordered_copies(const Graph& host, const Graph& pattern);

// Throws InputError if the pattern has an isolated vertex.
CountSummary count_induced(const Graph& host, const Graph& pattern);

// Throws InputError on an empty tuple, a non-edge entry or a repeated vertex.
bool is_well_ordered(const Graph& g, const OrientedEdgeTuple& t);

// True iff t = (e_1..e_l), l >= 2, closes a chordless cycle C_{2l} through the
// links head_i -> tail_{i+1} (indices mod l). Same validation as above.
bool characterizes_cycle(const Graph& g, const OrientedEdgeTuple& t);

struct ExtensionMode {
  enum class Kind { kPathExtend, kCycleClose };
  Kind kind = Kind::kPathExtend;
  int cycle_length = 0;

  static ExtensionMode path_extend() { return {Kind::kPathExtend, 0}; }
  static ExtensionMode cycle_close(int k) { return {Kind::kCycleClose, k}; }
};

// Oriented host edges e with (t, e) well-ordered (path-extend) or with (t, e)
// characterizing an induced C_k (cycle-close, requires |t| = k/2 - 1).
// Throws InputError when t is not well-ordered.
std::vector<OrientedEdge> extension_edges(const Graph& g, const OrientedEdgeTuple& t,
                                          ExtensionMode mode);
std::uint64_t alpha_extensions(const Graph& g, const OrientedEdgeTuple& t, ExtensionMode mode);

// Extensions of a single unordered edge from either end: the count that
// bounds the next odd edge when the first edge is known only as a set.
std::uint64_t alpha_both_ends(const Graph& g, Edge e);

// Ordered induced copies of the family whose odd-indexed edges equal t.
std::uint64_t beta_embeddings(const Graph& g, const OrientedEdgeTuple& t, PathOrCycle family);

struct GammaStats {
  std::vector<Edge> s_set;  // final edges e'_{2l} of completions, sorted
  std::uint64_t gamma0 = 0;
  std::optional<std::uint64_t> gamma1;  // admissible e'_{2l-2} given e_last
  std::optional<std::uint64_t> gamma2;  // admissible e'_{2l-1} given e_last
};

// Statistics of ordered induced P_{2l+1} copies whose first l-1 odd edges are t.
// Throws InputError if t is not well-ordered or e_last is not in the S-set.
GammaStats gamma_stats(const Graph& g, const OrientedEdgeTuple& t,
                       std::optional<Edge> e_last = std::nullopt);

}  // namespace inducibility
