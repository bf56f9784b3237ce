#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "inducibility/graph.hpp"

namespace inducibility {

// Canonical representative of an isomorphism class.
// `perm[v]` is the canonical index of input vertex v, and
// write_graph6(g.permuted(perm)) == label.
struct CanonicalForm {
  std::string label;
  std::vector<int> perm;
};

// Equitable-partition refinement plus an individualization search tree with
// automorphism pruning. The label is the graph6 text of the leaf whose
// relabelled adjacency rows are lexicographically greatest.
CanonicalForm canonical_form(const Graph& g);

std::string canonical_label(const Graph& g);
Graph canonical_graph(const Graph& g);
bool isomorphic(const Graph& a, const Graph& b);

// |Aut(g)|, from orbit sizes along the first path of the same search tree.
// Throws RangeError if the order does not fit in 64 bits.
std::uint64_t automorphism_order(const Graph& g);

struct CanonicalSearch {
  CanonicalForm form;
  std::vector<std::vector<int>> generators;
};

// Label, relabelling and automorphism generators from one search.
CanonicalSearch canonical_search(const Graph& g);

// Generators of Aut(g) found during the canonical search (each maps v -> gamma[v]).
std::vector<std::vector<int>> automorphism_generators(const Graph& g);

}  // namespace inducibility
