#include "inducibility/frac_independence.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <unordered_map>

#include "inducibility/errors.hpp"

namespace inducibility {
namespace {

// Kuhn's augmenting paths. `edges_of(l)` gives the right-side candidates of l.
template <class EdgesOf>
int kuhn(const std::vector<int>& left, int right_size, EdgesOf&& edges_of,
         std::vector<int>& match_of_right) {
  match_of_right.assign(right_size, -1);
  std::vector<char> visited;
  std::function<bool(int)> augment = [&](int l) -> bool {
    bool found = false;
    for_each_vertex(edges_of(l), [&](int r) {
      if (found || visited[r]) return;
      visited[r] = 1;
      if (match_of_right[r] < 0 || augment(match_of_right[r])) {
        match_of_right[r] = l;
        found = true;
      }
    });
    return found;
  };
  int size = 0;
  for (const int l : left) {
    visited.assign(right_size, 0);
    if (augment(l)) ++size;
  }
  return size;
}

}  // namespace

HalfInteger HalfIntegralWeighting::total() const {
  std::int64_t sum = 0;
  for (const int w : halves) sum += w;
  return HalfInteger::from_halves(sum);
}

bool HalfIntegralWeighting::feasible(const Graph& h) const {
  if (static_cast<int>(halves.size()) != h.order()) return false;
  for (const int w : halves) {
    if (w < 0 || w > 2) return false;
  }
  for (const Edge& e : h.edges()) {
    if (halves[e.u] + halves[e.v] > 2) return false;
  }
  return true;
}

HalfInteger alpha_f(const Graph& h) { return alpha_f(h, h.vertices()); }

HalfInteger alpha_f(const Graph& h, VertexSet within) {
  // Left copy of u matches right copy of v for every edge uv inside `within`.
  const std::vector<int> left = members(within);
  std::vector<int> match;
  const int nu = kuhn(left, h.order(), [&](int l) { return h.neighbors(l) & within; }, match);
  return HalfInteger::from_halves(2 * static_cast<std::int64_t>(left.size()) - nu);
}

HalfInteger alpha_f_bruteforce(const Graph& h) {
  const int n = h.order();
  if (n > 14) throw RangeError("brute-force alpha_f is limited to 14 vertices");
  std::array<int, 14> w{};
  int best = 0;
  // Depth-first over vertices; w(v) may not exceed 2 - w(u) for earlier neighbours u.
  std::function<void(int, int)> go = [&](int v, int sum) {
    if (v == n) {
      best = std::max(best, sum);
      return;
    }
    int cap = 2;
    for_each_vertex(h.neighbors(v) & low_bits(v), [&](int u) { cap = std::min(cap, 2 - w[u]); });
    for (int x = 0; x <= cap; ++x) {
      w[v] = x;
      go(v + 1, sum + x);
    }
    w[v] = 0;
  };
  go(0, 0);
  return HalfInteger::from_halves(best);
}

std::vector<std::pair<int, int>> bipartite_matching(const Graph& h, VertexSet left,
                                                    VertexSet right) {
  std::vector<int> match;
  kuhn(members(left), h.order(), [&](int l) { return h.neighbors(l) & right; }, match);
  std::vector<std::pair<int, int>> out;
  for (int r = 0; r < h.order(); ++r) {
    if (match[r] >= 0) out.emplace_back(match[r], r);
  }
  std::sort(out.begin(), out.end());
  return out;
}

OptimalWeighting optimal_weighting(const Graph& h) {
  // v can carry weight 1 in an optimum on `mask` iff dropping N[v] costs
  // exactly 1. The optima with v in A correspond to optima on mask - N[v].
  std::unordered_map<VertexSet, HalfInteger> alpha_memo;
  auto alpha = [&](VertexSet mask) {
    auto it = alpha_memo.find(mask);
    if (it != alpha_memo.end()) return it->second;
    const HalfInteger value = alpha_f(h, mask);
    alpha_memo.emplace(mask, value);
    return value;
  };
  auto closed = [&](int v, VertexSet mask) { return (h.neighbors(v) | bit(v)) & mask; };
  auto valid = [&](int v, VertexSet mask) {
    return alpha(mask & ~closed(v, mask)) + HalfInteger::from_integer(1) == alpha(mask);
  };

  std::unordered_map<VertexSet, int> largest_memo;
  std::function<int(VertexSet)> largest = [&](VertexSet mask) -> int {
    auto it = largest_memo.find(mask);
    if (it != largest_memo.end()) return it->second;
    int best = 0;
    for_each_vertex(mask, [&](int v) {
      if (valid(v, mask)) best = std::max(best, 1 + largest(mask & ~closed(v, mask)));
    });
    largest_memo.emplace(mask, best);
    return best;
  };

  ABCDecomposition abc;
  VertexSet mask = h.vertices();
  while (largest(mask) > 0) {
    const int target = largest(mask);
    int chosen = -1;
    for_each_vertex(mask, [&](int v) {
      if (chosen < 0 && valid(v, mask) && 1 + largest(mask & ~closed(v, mask)) == target) {
        chosen = v;
      }
    });
    abc.a |= bit(chosen);
    mask &= ~closed(chosen, mask);
  }
  for_each_vertex(abc.a, [&](int v) { abc.b |= h.neighbors(v); });
  abc.c = h.vertices() & ~abc.a & ~abc.b;

  OptimalWeighting out;
  out.weighting.halves.assign(h.order(), 0);
  for_each_vertex(abc.a, [&](int v) { out.weighting.halves[v] = 2; });
  for_each_vertex(abc.c, [&](int v) { out.weighting.halves[v] = 1; });
  if (out.weighting.total() != alpha_f(h) || !out.weighting.feasible(h)) {
    throw InvariantViolation("weight-1 set does not extend to an optimal weighting");
  }

  abc.matching = bipartite_matching(h, abc.b, abc.a);
  if (static_cast<int>(abc.matching.size()) != count(abc.b)) {
    throw InvariantViolation("no matching of A into B saturates B");
  }
  abc.d = abc.a;
  for (const auto& [b, a] : abc.matching) abc.d &= ~bit(a);
  out.decomposition = abc;
  return out;
}

}  // namespace inducibility
