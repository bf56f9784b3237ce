#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "inducibility/bounds.hpp"
#include "inducibility/family.hpp"
#include "inducibility/graph.hpp"

namespace inducibility {

struct SearchOptions {
  int shards = 1;
  std::size_t max_certificates = 1000;
  int ceiling = 12;  // largest m accepted by the enumerator
};

struct SearchResult {
  std::string pattern;  // canonical graph6 of H
  int m = 0;
  std::uint64_t rho = 0;
  std::vector<std::string> extremal;  // sorted canonical graph6 labels
  bool truncated = false;             // more maximizers than max_certificates
  std::uint64_t classes_scanned = 0;
  std::string version;

  bool operator==(const SearchResult&) const = default;
};

// Number of isomorphism classes of m-edge graphs without isolated vertices:
// exact for m <= 12, a geometric extrapolation beyond.
std::uint64_t estimated_class_count(int m);

// Calls visit(graph, canonical label) once per isomorphism class of graphs
// with m edges and no isolated vertices (orderly generation by canonical edge
// deletion). Only the classes of shard `shard` of `shards` are visited; the
// shards partition the classes. Throws ResourceCeiling when m > ceiling.
void enumerate_m_edge_graphs(int m,
                             const std::function<void(const Graph&, const std::string&)>& visit,
                             int shard = 0, int shards = 1, int ceiling = 12);

// Exact rho(H, m). The result does not depend on opts.shards.
SearchResult rho_exact(const Graph& h, int m, const SearchOptions& opts = {});

struct SandwichReport {
  std::string family;
  int m = 0;
  std::uint64_t lower = 0;  // construction count
  std::uint64_t rho = 0;
  BoundValue upper;  // effective upper
  std::vector<BoundValue> bounds;
  Construction construction;
  SearchResult search;
  std::vector<std::string> violations;  // one entry per failed inequality

  bool pass() const { return violations.empty(); }
  // Throws VerificationFailure naming the first violated bound.
  void check() const;
};

SandwichReport verify_sandwich(const PatternFamily& family, int m, const SearchOptions& opts = {});
// Same, reusing a search result computed (or cached) elsewhere.
SandwichReport verify_sandwich(const PatternFamily& family, const SearchResult& search);

}  // namespace inducibility
