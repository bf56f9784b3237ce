#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace inducibility {

// A vertex set over at most 64 vertices.
using VertexSet = std::uint64_t;

constexpr VertexSet bit(int v) { return VertexSet{1} << v; }
constexpr VertexSet low_bits(int n) { return n >= 64 ? ~VertexSet{0} : bit(n) - 1; }
constexpr int count(VertexSet s) { return std::popcount(s); }
constexpr bool contains(VertexSet s, int v) { return (s >> v) & 1U; }

// Calls f(v) for every member of s in increasing order.
template <class F>
void for_each_vertex(VertexSet s, F&& f) {
  while (s) {
    const int v = std::countr_zero(s);
    s &= s - 1;
    f(v);
  }
}

std::vector<int> members(VertexSet s);

// Unordered edge, normalized so that u < v.
struct Edge {
  int u = 0;
  int v = 0;

  Edge() = default;
  Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

  bool contains(int w) const { return u == w || v == w; }
  auto operator<=>(const Edge&) const = default;
};

// Simple undirected graph on at most 64 vertices; adjacency rows are bitsets.
class Graph {
 public:
  static constexpr int kMaxVertices = 64;

  Graph() = default;
  explicit Graph(int n);
  Graph(int n, std::span<const Edge> edges);

  int order() const { return n_; }
  int size() const;  // number of edges

  VertexSet vertices() const { return low_bits(n_); }
  VertexSet neighbors(int v) const { return adj_[v]; }
  bool adjacent(int u, int v) const { return contains(adj_[u], v); }
  int degree(int v) const { return count(adj_[v]); }

  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  // Appends one isolated vertex and returns its index.
  int add_vertex();

  std::vector<Edge> edges() const;
  std::vector<int> degree_sequence() const;  // sorted, descending

  bool has_isolated_vertex() const;

  // Relabels vertex v as perm[v].
  Graph permuted(std::span<const int> perm) const;

  // Subgraph induced by `keep`, vertices renumbered in increasing order.
  Graph induced(VertexSet keep) const;

  Graph without_isolated_vertices() const;

  bool operator==(const Graph& other) const;

 private:
  int n_ = 0;
  std::array<VertexSet, kMaxVertices> adj_{};
};

Graph path_graph(int k);
Graph cycle_graph(int k);
Graph complete_graph(int k);
Graph complete_bipartite(int a, int b);
Graph star_graph(int leaves);
Graph petersen_graph();
Graph disjoint_union(const Graph& a, const Graph& b);

// Debug rendering: "n=5 [0-1 1-2 ...]".
std::string describe(const Graph& g);

}  // namespace inducibility
