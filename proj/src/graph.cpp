#include "inducibility/graph.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "inducibility/errors.hpp"

namespace inducibility {

std::vector<int> members(VertexSet s) {
  std::vector<int> out;
  out.reserve(count(s));
  for_each_vertex(s, [&](int v) { out.push_back(v); });
  return out;
}

Graph::Graph(int n) : n_(n) {
  if (n < 0 || n > kMaxVertices) {
    throw RangeError("graph order " + std::to_string(n) + " outside [0, 64]");
  }
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
  for (const Edge& e : edges) add_edge(e.u, e.v);
}

int Graph::size() const {
  int twice = 0;
  for (int v = 0; v < n_; ++v) twice += count(adj_[v]);
  return twice / 2;
}

void Graph::add_edge(int u, int v) {
  if (u == v || u < 0 || v < 0 || u >= n_ || v >= n_) {
    throw InputError("invalid edge " + std::to_string(u) + "-" + std::to_string(v));
  }
  adj_[u] |= bit(v);
  adj_[v] |= bit(u);
}

void Graph::remove_edge(int u, int v) {
  adj_[u] &= ~bit(v);
  adj_[v] &= ~bit(u);
}

int Graph::add_vertex() {
  if (n_ == kMaxVertices) throw RangeError("graph order would exceed 64");
  return n_++;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < n_; ++u) {
    for_each_vertex(adj_[u] & ~low_bits(u + 1), [&](int v) { out.emplace_back(u, v); });
  }
  return out;
}

std::vector<int> Graph::degree_sequence() const {
  std::vector<int> d(n_);
  for (int v = 0; v < n_; ++v) d[v] = degree(v);
  std::sort(d.begin(), d.end(), std::greater<>());
  return d;
}

bool Graph::has_isolated_vertex() const {
  for (int v = 0; v < n_; ++v) {
    if (adj_[v] == 0) return true;
  }
  return false;
}

Graph Graph::permuted(std::span<const int> perm) const {
  Graph out(n_);
  for (int u = 0; u < n_; ++u) {
    VertexSet row = 0;
    for_each_vertex(adj_[u], [&](int v) { row |= bit(perm[v]); });
    out.adj_[perm[u]] = row;
  }
  return out;
}

Graph Graph::induced(VertexSet keep) const {
  keep &= vertices();
  std::array<int, kMaxVertices> index{};
  int next = 0;
  for_each_vertex(keep, [&](int v) { index[v] = next++; });
  Graph out(next);
  for_each_vertex(keep, [&](int u) {
    VertexSet row = 0;
    for_each_vertex(adj_[u] & keep, [&](int v) { row |= bit(index[v]); });
    out.adj_[index[u]] = row;
  });
  return out;
}

Graph Graph::without_isolated_vertices() const {
  VertexSet keep = 0;
  for (int v = 0; v < n_; ++v) {
    if (adj_[v]) keep |= bit(v);
  }
  return induced(keep);
}

bool Graph::operator==(const Graph& other) const {
  if (n_ != other.n_) return false;
  return std::equal(adj_.begin(), adj_.begin() + n_, other.adj_.begin());
}

Graph path_graph(int k) {
  Graph g(k);
  for (int i = 0; i + 1 < k; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph cycle_graph(int k) {
  if (k < 3) throw RangeError("cycle needs at least 3 vertices");
  Graph g = path_graph(k);
  g.add_edge(k - 1, 0);
  return g;
}

Graph complete_graph(int k) {
  Graph g(k);
  for (int u = 0; u < k; ++u)
    for (int v = u + 1; v < k; ++v) g.add_edge(u, v);
  return g;
}

Graph complete_bipartite(int a, int b) {
  Graph g(a + b);
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
  return g;
}

Graph star_graph(int leaves) { return complete_bipartite(1, leaves); }

Graph petersen_graph() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);          // outer cycle
    g.add_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    g.add_edge(i, 5 + i);                // spokes
  }
  return g;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph g(a.order() + b.order());
  for (const Edge& e : a.edges()) g.add_edge(e.u, e.v);
  for (const Edge& e : b.edges()) g.add_edge(a.order() + e.u, a.order() + e.v);
  return g;
}

std::string describe(const Graph& g) {
  std::ostringstream os;
  os << "n=" << g.order() << " [";
  bool first = true;
  for (const Edge& e : g.edges()) {
    os << (first ? "" : " ") << e.u << "-" << e.v;
    first = false;
  }
  os << "]";
  return os.str();
}

}  // namespace inducibility
