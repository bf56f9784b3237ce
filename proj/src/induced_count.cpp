#include "inducibility/induced_count.hpp"

#include <algorithm>
#include <array>
#include <set>

#include "inducibility/canonical.hpp"
#include "inducibility/errors.hpp"

namespace inducibility {
namespace {

// Pinned vertices first, then max-adjacency order (most neighbours already
// placed, then highest degree, then lowest index).
std::vector<int> visit_order(const Graph& pattern, int pinned) {
  const int k = pattern.order();
  std::vector<int> order;
  order.reserve(k);
  VertexSet placed = 0;
  for (int i = 0; i < pinned; ++i) {
    order.push_back(i);
    placed |= bit(i);
  }
  while (static_cast<int>(order.size()) < k) {
    int best = -1;
    int best_links = -1;
    int best_degree = -1;
    for (int x = 0; x < k; ++x) {
      if (contains(placed, x)) continue;
      const int links = count(pattern.neighbors(x) & placed);
      const int degree = pattern.degree(x);
      if (links > best_links || (links == best_links && degree > best_degree)) {
        best = x;
        best_links = links;
        best_degree = degree;
      }
    }
    order.push_back(best);
    placed |= bit(best);
  }
  return order;
}

template <class Visit>
void enumerate_copies(const Graph& host, const Graph& pattern, std::span<const int> pinned,
                      Visit&& visit) {
  const int k = pattern.order();
  const int p = static_cast<int>(pinned.size());
  if (p > k) throw InputError("more pinned vertices than pattern vertices");
  for (const int v : pinned) {
    if (v < 0 || v >= host.order()) throw InputError("pinned vertex outside host");
  }
  if (k == 0) {
    visit(std::span<const int>{});
    return;
  }
  if (k > host.order()) return;

  const std::vector<int> order = visit_order(pattern, p);
  // adjacency[i] bit j: pattern vertices order[i], order[j] adjacent (j < i).
  std::array<VertexSet, Graph::kMaxVertices> earlier_adjacent{};
  std::array<VertexSet, Graph::kMaxVertices> degree_ok{};
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < i; ++j) {
      if (pattern.adjacent(order[i], order[j])) earlier_adjacent[i] |= bit(j);
    }
    const int need = pattern.degree(order[i]);
    for (int v = 0; v < host.order(); ++v) {
      if (host.degree(v) >= need) degree_ok[i] |= bit(v);
    }
  }

  std::array<int, Graph::kMaxVertices> image_by_position{};
  std::vector<int> image(k);
  const VertexSet all = host.vertices();

  auto candidates = [&](int i, VertexSet used) {
    VertexSet cand = all & ~used & degree_ok[i];
    for (int j = 0; j < i; ++j) {
      const VertexSet nb = host.neighbors(image_by_position[j]);
      cand &= contains(earlier_adjacent[i], j) ? nb : ~nb;
    }
    if (i < p) cand &= bit(pinned[order[i]]);
    return cand;
  };

  // Iterative depth-first search over positions.
  std::array<VertexSet, Graph::kMaxVertices + 1> pending{};
  std::array<VertexSet, Graph::kMaxVertices + 1> used_at{};
  int depth = 0;
  used_at[0] = 0;
  pending[0] = candidates(0, 0);
  while (depth >= 0) {
    if (pending[depth] == 0) {
      --depth;
      continue;
    }
    const int v = std::countr_zero(pending[depth]);
    pending[depth] &= pending[depth] - 1;
    image_by_position[depth] = v;
    if (depth + 1 == k) {
      for (int i = 0; i < k; ++i) image[order[i]] = image_by_position[i];
      visit(std::span<const int>(image));
      continue;
    }
    used_at[depth + 1] = used_at[depth] | bit(v);
    pending[depth + 1] = candidates(depth + 1, used_at[depth + 1]);
    ++depth;
  }
}

void validate_tuple(const Graph& g, const OrientedEdgeTuple& t) {
  if (t.empty()) throw InputError("edge tuple is empty");
  VertexSet seen = 0;
  for (const OrientedEdge& e : t) {
    if (e.tail < 0 || e.head < 0 || e.tail >= g.order() || e.head >= g.order()) {
      throw InputError("tuple vertex outside host");
    }
    if (!g.adjacent(e.tail, e.head)) {
      throw InputError("tuple entry " + std::to_string(e.tail) + "->" + std::to_string(e.head) +
                       " is not a host edge");
    }
    if (contains(seen, e.tail) || contains(seen, e.head)) {
      throw InputError("tuple entries share a vertex");
    }
    seen |= bit(e.tail) | bit(e.head);
  }
}

// The tuple's 2|t| endpoints induce exactly the path tail_1 head_1 tail_2 ...
// (plus the closing link head_l tail_1 when `closed`).
bool induces_linked_sequence(const Graph& g, const OrientedEdgeTuple& t, bool closed) {
  const int len = static_cast<int>(t.size());
  std::vector<int> seq;
  seq.reserve(2 * len);
  VertexSet all = 0;
  for (const OrientedEdge& e : t) {
    seq.push_back(e.tail);
    seq.push_back(e.head);
    all |= bit(e.tail) | bit(e.head);
  }
  const int s = static_cast<int>(seq.size());
  for (int i = 0; i < s; ++i) {
    VertexSet expected = 0;
    if (i > 0) expected |= bit(seq[i - 1]);
    if (i + 1 < s) expected |= bit(seq[i + 1]);
    if (closed && i == 0) expected |= bit(seq[s - 1]);
    if (closed && i == s - 1) expected |= bit(seq[0]);
    if ((g.neighbors(seq[i]) & all) != expected) return false;
  }
  return true;
}

void require_well_ordered(const Graph& g, const OrientedEdgeTuple& t) {
  if (!is_well_ordered(g, t)) throw InputError("edge tuple is not well-ordered");
}

}  // namespace

Graph PathOrCycle::graph() const {
  return kind == Kind::kPath ? path_graph(k) : cycle_graph(k);
}

void for_each_ordered_copy(const Graph& host, const Graph& pattern, std::span<const int> pinned,
                           const std::function<void(std::span<const int>)>& visit) {
  enumerate_copies(host, pattern, pinned, visit);
}

std::uint64_t count_ordered_copies(const Graph& host, const Graph& pattern,
                                   std::span<const int> pinned) {
  std::uint64_t n = 0;
  enumerate_copies(host, pattern, pinned, [&](std::span<const int>) { ++n; });
  return n;
}

std::vector<std::vector<int>> ordered_copies(const Graph& host, const Graph& pattern) {
  std::vector<std::vector<int>> out;
  enumerate_copies(host, pattern, {}, [&](std::span<const int> img) {
    out.emplace_back(img.begin(), img.end());
  });
  return out;
}

CountSummary count_induced(const Graph& host, const Graph& pattern) {
  if (pattern.has_isolated_vertex()) {
    throw InputError("pattern has an isolated vertex; its induced count is unbounded");
  }
  CountSummary s;
  s.aut = automorphism_order(pattern);
  s.ordered = count_ordered_copies(host, pattern);
  if (s.ordered % s.aut != 0) {
    throw InvariantViolation("ordered copy count is not a multiple of |Aut(H)|");
  }
  s.unordered = s.ordered / s.aut;
  return s;
}

bool is_well_ordered(const Graph& g, const OrientedEdgeTuple& t) {
  validate_tuple(g, t);
  return induces_linked_sequence(g, t, false);
}

bool characterizes_cycle(const Graph& g, const OrientedEdgeTuple& t) {
  validate_tuple(g, t);
  if (t.size() < 2) return false;
  return induces_linked_sequence(g, t, true);
}

std::vector<OrientedEdge> extension_edges(const Graph& g, const OrientedEdgeTuple& t,
                                          ExtensionMode mode) {
  require_well_ordered(g, t);
  const bool closing = mode.kind == ExtensionMode::Kind::kCycleClose;
  if (closing) {
    const int k = mode.cycle_length;
    if (k < 4 || k % 2 != 0 || static_cast<int>(t.size()) != k / 2 - 1) {
      throw InputError("cycle-close needs an even k >= 4 and a tuple of length k/2 - 1");
    }
  }

  VertexSet tuple_vertices = 0;
  for (const OrientedEdge& e : t) tuple_vertices |= bit(e.tail) | bit(e.head);
  const int last_head = t.back().head;
  const int first_tail = t.front().tail;

  // A tail may only see last_head among tuple vertices; a head may see
  // nothing (path) or only first_tail (cycle).
  VertexSet tails = 0;
  VertexSet heads = 0;
  for (int v = 0; v < g.order(); ++v) {
    if (contains(tuple_vertices, v)) continue;
    const VertexSet seen = g.neighbors(v) & tuple_vertices;
    if (seen == bit(last_head)) tails |= bit(v);
    if (seen == (closing ? bit(first_tail) : VertexSet{0})) heads |= bit(v);
  }

  std::vector<OrientedEdge> out;
  for_each_vertex(tails, [&](int a) {
    for_each_vertex(g.neighbors(a) & heads, [&](int b) { out.push_back({a, b}); });
  });
  return out;
}

std::uint64_t alpha_extensions(const Graph& g, const OrientedEdgeTuple& t, ExtensionMode mode) {
  return extension_edges(g, t, mode).size();
}

std::uint64_t alpha_both_ends(const Graph& g, Edge e) {
  return alpha_extensions(g, {{e.u, e.v}}, ExtensionMode::path_extend()) +
         alpha_extensions(g, {{e.v, e.u}}, ExtensionMode::path_extend());
}

std::uint64_t beta_embeddings(const Graph& g, const OrientedEdgeTuple& t, PathOrCycle family) {
  const int odd_edges = family.k / 2;
  const int len = static_cast<int>(t.size());
  if (family.k < 3) throw InputError("family needs at least 3 vertices");
  if (len > odd_edges) throw InputError("tuple longer than the family's odd edges");
  const bool full_even_cycle =
      family.kind == PathOrCycle::Kind::kCycle && family.k % 2 == 0 && len == odd_edges;
  if (full_even_cycle) {
    if (!characterizes_cycle(g, t)) throw InputError("tuple does not characterize a cycle");
  } else {
    require_well_ordered(g, t);
  }

  std::vector<int> pinned;
  for (const OrientedEdge& e : t) {
    pinned.push_back(e.tail);
    pinned.push_back(e.head);
  }
  return count_ordered_copies(g, family.graph(), pinned);
}

GammaStats gamma_stats(const Graph& g, const OrientedEdgeTuple& t, std::optional<Edge> e_last) {
  require_well_ordered(g, t);
  const int l = static_cast<int>(t.size()) + 1;
  const Graph pattern = path_graph(2 * l + 1);

  std::vector<int> pinned;
  for (const OrientedEdge& e : t) {
    pinned.push_back(e.tail);
    pinned.push_back(e.head);
  }

  // Copy vertices x_1..x_{2l+1} are img[0..2l]; e'_{2l} = {x_{2l}, x_{2l+1}}.
  std::set<Edge> s_set;
  std::set<Edge> penultimate_even;  // e'_{2l-2} = {x_{2l-2}, x_{2l-1}}
  std::set<Edge> last_odd;          // e'_{2l-1} = {x_{2l-1}, x_{2l}}
  enumerate_copies(g, pattern, pinned, [&](std::span<const int> img) {
    const Edge final_edge(img[2 * l - 1], img[2 * l]);
    s_set.insert(final_edge);
    if (e_last && final_edge == *e_last) {
      penultimate_even.emplace(img[2 * l - 3], img[2 * l - 2]);
      last_odd.emplace(img[2 * l - 2], img[2 * l - 1]);
    }
  });

  GammaStats out;
  out.s_set.assign(s_set.begin(), s_set.end());
  out.gamma0 = s_set.size();
  if (e_last) {
    if (!s_set.contains(*e_last)) throw InputError("e_last is not in the S-set of the tuple");
    out.gamma1 = penultimate_even.size();
    out.gamma2 = last_odd.size();
  }
  return out;
}

}  // namespace inducibility
