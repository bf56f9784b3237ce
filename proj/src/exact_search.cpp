#include "inducibility/exact_search.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <thread>

#include "inducibility/canonical.hpp"
#include "inducibility/errors.hpp"
#include "inducibility/induced_count.hpp"
#include "inducibility/version.hpp"

namespace inducibility {
namespace {

constexpr int kShardDepth = 3;

// Graphs with m edges and no isolated vertices, m = 0..12.
constexpr std::uint64_t kKnownClassCounts[] = {1,   1,    2,    5,     11,    26,   68,
                                                177, 497, 1476, 4613, 15216, 52944};

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

struct Node {
  Graph g;
  std::vector<std::vector<int>> generators;
  std::string label;
};

Node root() { return {Graph(0), {}, ""}; }

// Accepts `child` (obtained by adding edge ab) iff ab lies in the Aut(child)
// orbit of the canonical-last edge: the edge maximizing (larger, smaller)
// canonical endpoint.
bool accept(const Graph& child, int a, int b, const CanonicalSearch& cs) {
  const int n = child.order();
  std::vector<int> inverse(n);
  for (int v = 0; v < n; ++v) inverse[cs.form.perm[v]] = v;
  int hi = -1;
  int lo = -1;
  for (const Edge& e : child.edges()) {
    int x = cs.form.perm[e.u];
    int y = cs.form.perm[e.v];
    if (x < y) std::swap(x, y);
    if (x > hi || (x == hi && y > lo)) {
      hi = x;
      lo = y;
    }
  }
  const Edge last(inverse[hi], inverse[lo]);
  const Edge added(a, b);
  if (last == added) return true;
  UnionFind uf(n * n);
  for (const auto& gamma : cs.generators) {
    for (const Edge& e : child.edges()) {
      const Edge image(gamma[e.u], gamma[e.v]);
      uf.unite(e.u * n + e.v, image.u * n + image.v);
    }
  }
  return uf.find(last.u * n + last.v) == uf.find(added.u * n + added.v);
}

// Children of `parent` in a fixed order, one per accepted augmentation orbit.
template <class F>
void for_each_child(const Node& parent, F&& emit) {
  const Graph& p = parent.g;
  const int n = p.order();
  std::set<std::string> seen;

  auto attempt = [&](Graph child, int a, int b) {
    child.add_edge(a, b);
    CanonicalSearch cs = canonical_search(child);
    if (!accept(child, a, b, cs)) return;
    if (!seen.insert(cs.form.label).second) return;
    emit(Node{std::move(child), std::move(cs.generators), std::move(cs.form.label)});
  };

  // Orbits of Aut(parent) on vertices and on non-adjacent pairs.
  UnionFind vertex_orbits(std::max(n, 1));
  UnionFind pair_orbits(std::max(n * n, 1));
  for (const auto& gamma : parent.generators) {
    for (int u = 0; u < n; ++u) {
      vertex_orbits.unite(u, gamma[u]);
      for (int v = u + 1; v < n; ++v) {
        const Edge image(gamma[u], gamma[v]);
        pair_orbits.unite(u * n + v, image.u * n + image.v);
      }
    }
  }

  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (p.adjacent(u, v) || pair_orbits.find(u * n + v) != u * n + v) continue;
      attempt(p, u, v);
    }
  }
  if (n + 1 <= Graph::kMaxVertices) {
    for (int u = 0; u < n; ++u) {
      if (vertex_orbits.find(u) != u) continue;
      Graph child = p;
      const int w = child.add_vertex();
      attempt(std::move(child), u, w);
    }
  }
  if (n + 2 <= Graph::kMaxVertices) {
    Graph child = p;
    const int a = child.add_vertex();
    const int b = child.add_vertex();
    attempt(std::move(child), a, b);
  }
}

template <class F>
void descend(const Node& node, int depth, int m, F& visit) {
  if (depth == m) {
    visit(node.g, node.label);
    return;
  }
  for_each_child(node, [&](Node child) { descend(child, depth + 1, m, visit); });
}

}  // namespace

std::uint64_t estimated_class_count(int m) {
  if (m < 0) return 0;
  if (m <= 12) return kKnownClassCounts[m];
  // Ratio of the last two known terms, held constant.
  const double growth = static_cast<double>(kKnownClassCounts[12]) / kKnownClassCounts[11];
  return static_cast<std::uint64_t>(kKnownClassCounts[12] * std::pow(growth, m - 12));
}

void enumerate_m_edge_graphs(int m,
                             const std::function<void(const Graph&, const std::string&)>& visit,
                             int shard, int shards, int ceiling) {
  if (m < 0) throw InputError("edge count must be nonnegative");
  if (m > ceiling) {
    throw ResourceCeiling("m = " + std::to_string(m) + " exceeds the search ceiling " +
                          std::to_string(ceiling) + " (about " +
                          std::to_string(estimated_class_count(m)) + " classes)");
  }
  if (shards < 1 || shard < 0 || shard >= shards) throw InputError("invalid shard selection");

  const int split = std::min(kShardDepth, m);
  std::vector<Node> frontier;
  std::function<void(const Node&, int)> gather = [&](const Node& node, int depth) {
    if (depth == split) {
      frontier.push_back(node);
      return;
    }
    for_each_child(node, [&](Node child) { gather(child, depth + 1); });
  };
  // m = 0 has the single empty class, whose label is the 0-vertex graph6 "?".
  Node start = root();
  start.label = canonical_label(start.g);
  gather(start, 0);
  for (std::size_t i = shard; i < frontier.size(); i += shards) {
    descend(frontier[i], split, m, visit);
  }
}

SearchResult rho_exact(const Graph& h, int m, const SearchOptions& opts) {
  if (h.has_isolated_vertex()) {
    throw InputError("pattern has an isolated vertex; rho would be infinite");
  }
  if (opts.shards < 1) throw InputError("shard count must be positive");
  const std::uint64_t aut = automorphism_order(h);

  struct Partial {
    std::uint64_t rho = 0;
    std::uint64_t maximizers = 0;
    std::set<std::string> smallest;  // at most max_certificates labels
    std::uint64_t classes = 0;
  };
  const std::size_t cap = opts.max_certificates;
  auto record = [cap](Partial& part, std::uint64_t value, const std::string& label) {
    if (part.classes == 0 || value > part.rho) {
      part.rho = value;
      part.maximizers = 0;
      part.smallest.clear();
    }
    if (value == part.rho) {
      ++part.maximizers;
      part.smallest.insert(label);
      if (part.smallest.size() > cap) part.smallest.erase(std::prev(part.smallest.end()));
    }
    ++part.classes;
  };

  std::vector<Partial> parts(opts.shards);
  auto run = [&](int shard) {
    Partial& part = parts[shard];
    enumerate_m_edge_graphs(
        m,
        [&](const Graph& g, const std::string& label) {
          const std::uint64_t value =
              g.order() < h.order() ? 0 : count_ordered_copies(g, h) / aut;
          record(part, value, label);
        },
        shard, opts.shards, opts.ceiling);
  };
  if (opts.shards == 1) {
    run(0);
  } else {
    std::vector<std::exception_ptr> errors(opts.shards);
    std::vector<std::thread> workers;
    for (int s = 0; s < opts.shards; ++s) {
      workers.emplace_back([&, s] {
        try {
          run(s);
        } catch (...) {
          errors[s] = std::current_exception();
        }
      });
    }
    for (auto& w : workers) w.join();
    for (const auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

  // Max-reduction, then certificate union.
  SearchResult out;
  out.pattern = canonical_label(h);
  out.m = m;
  out.version = kVersion;
  std::uint64_t maximizers = 0;
  std::set<std::string> labels;
  bool any = false;
  for (const Partial& part : parts) {
    out.classes_scanned += part.classes;
    if (part.classes == 0) continue;
    if (!any || part.rho > out.rho) {
      out.rho = part.rho;
      maximizers = 0;
      labels.clear();
      any = true;
    }
    if (part.rho == out.rho) {
      maximizers += part.maximizers;
      labels.insert(part.smallest.begin(), part.smallest.end());
    }
  }
  out.extremal.assign(labels.begin(), labels.end());
  if (out.extremal.size() > cap) out.extremal.resize(cap);
  out.truncated = maximizers > cap;
  return out;
}

void SandwichReport::check() const {
  if (!violations.empty()) throw VerificationFailure(violations.front());
}

SandwichReport verify_sandwich(const PatternFamily& family, int m, const SearchOptions& opts) {
  return verify_sandwich(family, rho_exact(family.graph(), m, opts));
}

SandwichReport verify_sandwich(const PatternFamily& family, const SearchResult& search) {
  BoundReport bounds = bound_eval(family, search.m);
  SandwichReport r;
  r.family = family.name();
  r.m = search.m;
  r.search = search;
  r.rho = search.rho;
  r.construction = bounds.construction;
  r.lower = bounds.construction.count;
  r.upper = effective_upper(bounds.values);
  r.bounds = std::move(bounds.values);
  if (r.lower > r.rho) {
    r.violations.push_back("construction_lower: " + std::to_string(r.lower) + " > rho " +
                           std::to_string(r.rho));
  }
  for (const BoundValue& b : r.bounds) {
    if (b.kind != BoundKind::kUpper && b.kind != BoundKind::kExact) continue;
    if (!within_upper(r.rho, b)) {
      r.violations.push_back(b.provenance + ": rho " + std::to_string(r.rho) + " > " +
                             (b.exact ? b.exact->to_string() : std::to_string(b.value)));
    }
  }
  return r;
}

}  // namespace inducibility
