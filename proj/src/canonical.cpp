#include "inducibility/canonical.hpp"

#include <algorithm>
#include <climits>
#include <numeric>

#include "inducibility/errors.hpp"
#include "inducibility/graph6.hpp"

namespace inducibility {
namespace {

using Partition = std::vector<VertexSet>;

constexpr int kNoJump = INT_MAX;

// Refines `cells` to the coarsest equitable partition finer than it. Fragments
// of a split cell are ordered by increasing neighbour count into the splitter,
// so the result depends only on the graph structure and the input order.
void refine(const Graph& g, Partition& cells) {
  bool changed = true;
  std::array<VertexSet, Graph::kMaxVertices + 1> by_count{};
  while (changed) {
    changed = false;
    for (std::size_t s = 0; s < cells.size() && !changed; ++s) {
      const VertexSet splitter = cells[s];
      Partition next;
      next.reserve(cells.size() + 4);
      for (const VertexSet cell : cells) {
        if (count(cell) == 1) {
          next.push_back(cell);
          continue;
        }
        int lo = Graph::kMaxVertices + 1;
        int hi = -1;
        for_each_vertex(cell, [&](int v) {
          const int c = count(g.neighbors(v) & splitter);
          by_count[c] |= bit(v);
          lo = std::min(lo, c);
          hi = std::max(hi, c);
        });
        if (lo != hi) changed = true;
        for (int c = lo; c <= hi; ++c) {
          if (by_count[c]) {
            next.push_back(by_count[c]);
            by_count[c] = 0;
          }
        }
      }
      cells = std::move(next);
    }
  }
}

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<int> parent_;
};

class Searcher {
 public:
  explicit Searcher(const Graph& g) : g_(g), n_(g.order()) {}

  void run() {
    if (n_ == 0) return;
    Partition cells{g_.vertices()};
    search(std::move(cells));
  }

  CanonicalForm form() const {
    CanonicalForm out;
    out.perm.assign(n_, 0);
    for (int i = 0; i < n_; ++i) out.perm[best_lab_[i]] = i;
    out.label = write_graph6(g_.permuted(out.perm));
    return out;
  }

  std::uint64_t group_order() const {
    unsigned __int128 order = 1;
    for (std::size_t level = 0; level < first_path_.size(); ++level) {
      UnionFind orbits = orbits_fixing(first_path_, level);
      const int root = orbits.find(first_path_[level]);
      std::uint64_t size = 0;
      for (int v = 0; v < n_; ++v) size += orbits.find(v) == root;
      order *= size;
      if (order > UINT64_MAX) throw RangeError("automorphism group order exceeds 64 bits");
    }
    return static_cast<std::uint64_t>(order);
  }

  const std::vector<std::vector<int>>& generators() const { return generators_; }

 private:
  // Orbits of the group generated by the stored generators fixing path[0..len).
  UnionFind orbits_fixing(const std::vector<int>& path, std::size_t len) const {
    UnionFind uf(n_);
    for (const auto& gamma : generators_) {
      bool fixes = true;
      for (std::size_t i = 0; i < len && fixes; ++i) fixes = gamma[path[i]] == path[i];
      if (!fixes) continue;
      for (int v = 0; v < n_; ++v) uf.unite(v, gamma[v]);
    }
    return uf;
  }

  static int common_prefix(const std::vector<int>& a, const std::vector<int>& b) {
    std::size_t i = 0;
    while (i < a.size() && i < b.size() && a[i] == b[i]) ++i;
    return static_cast<int>(i);
  }

  void add_generator(const std::vector<int>& from_lab, const std::vector<int>& to_lab) {
    std::vector<int> gamma(n_);
    for (int i = 0; i < n_; ++i) gamma[from_lab[i]] = to_lab[i];
    generators_.push_back(std::move(gamma));
  }

  int leaf(const Partition& cells) {
    std::vector<int> lab(n_);
    std::array<int, Graph::kMaxVertices> pos{};
    for (int i = 0; i < n_; ++i) {
      lab[i] = std::countr_zero(cells[i]);
      pos[lab[i]] = i;
    }
    std::vector<VertexSet> code(n_);
    for (int i = 0; i < n_; ++i) {
      VertexSet row = 0;
      for_each_vertex(g_.neighbors(lab[i]), [&](int w) { row |= bit(pos[w]); });
      code[i] = row;
    }

    if (first_lab_.empty()) {
      first_lab_ = best_lab_ = lab;
      first_code_ = best_code_ = code;
      first_path_ = best_path_ = path_;
      return kNoJump;
    }
    if (code == first_code_) {
      add_generator(first_lab_, lab);
      return common_prefix(path_, first_path_);
    }
    if (code == best_code_) {
      add_generator(best_lab_, lab);
      return common_prefix(path_, best_path_);
    }
    if (code > best_code_) {
      best_lab_ = std::move(lab);
      best_code_ = std::move(code);
      best_path_ = path_;
    }
    return kNoJump;
  }

  int search(Partition cells) {
    refine(g_, cells);
    if (static_cast<int>(cells.size()) == n_) return leaf(cells);

    const int level = static_cast<int>(path_.size());
    std::size_t target = 0;
    while (count(cells[target]) == 1) ++target;
    const VertexSet target_cell = cells[target];

    VertexSet explored = 0;
    for (const int v : members(target_cell)) {
      if (explored) {
        UnionFind orbits = orbits_fixing(path_, path_.size());
        const int root = orbits.find(v);
        bool equivalent = false;
        for_each_vertex(explored, [&](int w) { equivalent |= orbits.find(w) == root; });
        if (equivalent) continue;
      }
      explored |= bit(v);

      Partition child;
      child.reserve(cells.size() + 1);
      child.insert(child.end(), cells.begin(), cells.begin() + target);
      child.push_back(bit(v));
      child.push_back(target_cell & ~bit(v));
      child.insert(child.end(), cells.begin() + target + 1, cells.end());

      path_.push_back(v);
      const int jump = search(std::move(child));
      path_.pop_back();
      if (jump < level) return jump;
    }
    return kNoJump;
  }

  const Graph& g_;
  int n_;
  std::vector<int> path_;
  std::vector<int> first_lab_, best_lab_;
  std::vector<VertexSet> first_code_, best_code_;
  std::vector<int> first_path_, best_path_;
  std::vector<std::vector<int>> generators_;
};

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
  Searcher s(g);
  s.run();
  if (g.order() == 0) return CanonicalForm{write_graph6(g), {}};
  return s.form();
}

CanonicalSearch canonical_search(const Graph& g) {
  Searcher s(g);
  s.run();
  if (g.order() == 0) return {CanonicalForm{write_graph6(g), {}}, {}};
  return {s.form(), s.generators()};
}

std::string canonical_label(const Graph& g) { return canonical_form(g).label; }

Graph canonical_graph(const Graph& g) { return g.permuted(canonical_form(g).perm); }

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  if (a.degree_sequence() != b.degree_sequence()) return false;
  return canonical_label(a) == canonical_label(b);
}

std::uint64_t automorphism_order(const Graph& g) {
  Searcher s(g);
  s.run();
  return s.group_order();
}

std::vector<std::vector<int>> automorphism_generators(const Graph& g) {
  Searcher s(g);
  s.run();
  return s.generators();
}

}  // namespace inducibility
