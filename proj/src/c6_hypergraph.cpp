#include "inducibility/c6_hypergraph.hpp"

#include <algorithm>

#include "inducibility/induced_count.hpp"

namespace inducibility {
namespace {

using U128 = unsigned __int128;

bool capable(const Graph& g, const EdgeTriple& t) {
  const std::array<std::array<int, 3>, 2> orders{{{0, 1, 2}, {0, 2, 1}}};
  for (const auto& order : orders) {
    for (int flips = 0; flips < 8; ++flips) {
      OrientedEdgeTuple tuple;
      for (int i = 0; i < 3; ++i) {
        const Edge& e = t[order[i]];
        tuple.push_back((flips >> i) & 1 ? OrientedEdge{e.v, e.u} : OrientedEdge{e.u, e.v});
      }
      if (characterizes_cycle(g, tuple)) return true;
    }
  }
  return false;
}

}  // namespace

bool C6HypergraphReport::codegree_sum_within_m_gamma() const {
  return static_cast<U128>(hyperedge_codegree_sum) <= static_cast<U128>(m) * gamma;
}

bool C6HypergraphReport::cauchy_schwarz() const {
  const U128 six_gamma = 6 * static_cast<U128>(gamma);
  return static_cast<U128>(codegree_square_sum) * two_section_edges >= six_gamma * six_gamma;
}

bool C6HypergraphReport::two_section_within_half_m_squared() const {
  return 2 * static_cast<U128>(two_section_edges) <= static_cast<U128>(m) * m;
}

bool C6HypergraphReport::gamma_within_bound() const {
  return 72 * static_cast<U128>(gamma) <= static_cast<U128>(m) * m * m;
}

bool C6HypergraphReport::pass() const {
  return hyperedges_equal_two_gamma() && codegree_sum == 3 * hyperedges() &&
         codegree_sum_within_m_gamma() && squares_identity() && cauchy_schwarz() &&
         two_section_within_half_m_squared() && gamma_within_bound();
}

C6HypergraphReport c6_hypergraph_check(const Graph& g) {
  C6HypergraphReport r;
  r.m = g.size();
  r.gamma = count_induced(g, cycle_graph(6)).unordered;
  const std::vector<Edge> edges = g.edges();
  const std::size_t n = edges.size();
  auto disjoint = [](const Edge& a, const Edge& b) {
    return a.u != b.u && a.u != b.v && a.v != b.u && a.v != b.v;
  };
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (!disjoint(edges[a], edges[b])) continue;
      for (std::size_t c = b + 1; c < n; ++c) {
        if (!disjoint(edges[a], edges[c]) || !disjoint(edges[b], edges[c])) continue;
        const EdgeTriple t{edges[a], edges[b], edges[c]};
        if (capable(g, t)) r.capable_triples.push_back(t);
      }
    }
  }
  for (const EdgeTriple& t : r.capable_triples) {
    ++r.codegrees[{t[0], t[1]}];
    ++r.codegrees[{t[0], t[2]}];
    ++r.codegrees[{t[1], t[2]}];
  }
  for (const auto& [pair, d] : r.codegrees) {
    r.codegree_sum += d;
    r.codegree_square_sum += d * d;
  }
  for (const EdgeTriple& t : r.capable_triples) {
    r.hyperedge_codegree_sum += r.codegrees.at({t[0], t[1]}) + r.codegrees.at({t[0], t[2]}) +
                                r.codegrees.at({t[1], t[2]});
  }
  r.two_section_edges = r.codegrees.size();
  return r;
}

}  // namespace inducibility
