#include "inducibility/constructions.hpp"

#include <algorithm>
#include <limits>
#include <cmath>
#include <functional>
#include <numeric>
#include <set>

#include "inducibility/canonical.hpp"
#include "inducibility/errors.hpp"
#include "inducibility/frac_independence.hpp"

namespace inducibility {
namespace {

std::int64_t isqrt(std::int64_t x) {
  if (x <= 0) return 0;
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(x)));
  while (r * r > x) --r;
  while ((r + 1) * (r + 1) <= x) ++r;
  return r;
}

// Candidate ordering: more copies, then fewer edges, then earlier base, then
// lexicographically smaller sizes.
struct Candidate {
  int base_index = 0;
  std::vector<int> sizes;
  std::uint64_t edges = 0;
  std::uint64_t count = 0;

  bool better_than(const Candidate& o) const {
    if (count != o.count) return count > o.count;
    if (edges != o.edges) return edges < o.edges;
    if (base_index != o.base_index) return base_index < o.base_index;
    return sizes < o.sizes;
  }
};

struct TemplateBase {
  Graph base;
  std::vector<std::vector<int>> starts;
};

std::vector<int> repeat(int value, int k) { return std::vector<int>(k, value); }

std::vector<TemplateBase> templates(const PatternFamily& family, std::int64_t m) {
  const Graph h = family.graph();
  const int k = h.order();
  std::vector<TemplateBase> out;
  const int edges_h = std::max(1, h.size());
  const auto balanced = static_cast<int>(std::min<std::int64_t>(64, isqrt(m / edges_h)));

  if (family.kind() == PatternFamily::Kind::kCycle) {
    TemplateBase cyc{h, {repeat(1, k), repeat(balanced, k), repeat(balanced + 1, k)}};
    if (k % 2 == 0) {
      // Alternating lambda/mu parts: k * lambda * mu edges.
      for (int lambda = 1; lambda <= 64; ++lambda) {
        const std::int64_t mu = m / (static_cast<std::int64_t>(k) * lambda);
        if (mu < lambda) break;
        std::vector<int> sizes(k);
        for (int i = 0; i < k; ++i) sizes[i] = i % 2 == 0 ? lambda : static_cast<int>(std::min<std::int64_t>(mu, 64));
        cyc.starts.push_back(sizes);
      }
    }
    out.push_back(std::move(cyc));
    if (k == 4) {
      // Complete bipartite K_{a,b} as a blow-up of an edge.
      TemplateBase edge{path_graph(2), {}};
      for (int a = 1; a <= 64; ++a) {
        const std::int64_t b = std::min<std::int64_t>(m / a, 64);
        if (b < a) break;
        edge.starts.push_back({a, static_cast<int>(b)});
      }
      out.push_back(std::move(edge));
    }
  } else if (family.kind() == PatternFamily::Kind::kPath) {
    TemplateBase path{h, {repeat(1, k), repeat(balanced, k)}};
    if (k % 2 == 1) {
      // Odd parts a, b, ..., b, a with singleton even parts.
      const int interior = (k - 3) / 2;
      for (int b = 1; b <= 64; ++b) {
        const std::int64_t rest = m - 2LL * b * interior;
        if (rest < 2) break;
        std::vector<int> sizes(k, 1);
        const auto a = static_cast<int>(std::min<std::int64_t>(rest / 2, 64));
        for (int i = 0; i < k; i += 2) sizes[i] = (i == 0 || i == k - 1) ? a : b;
        path.starts.push_back(sizes);
        if (rest % 2 == 1 && a < 64) {
          sizes[k - 1] = a + 1;
          path.starts.push_back(sizes);
        }
        if (interior == 0) break;
      }
    }
    out.push_back(std::move(path));
    if (k % 2 == 0) {
      const int cycle_k = k + 1;
      const auto s = static_cast<int>(std::min<std::int64_t>(64, isqrt(m / cycle_k)));
      out.push_back({cycle_graph(cycle_k), {repeat(s, cycle_k), repeat(s + 1, cycle_k)}});
    }
    if (k == 3) {
      out.push_back({path_graph(2), {{1, static_cast<int>(std::min<std::int64_t>(m, 63))}}});
    }
  } else {
    TemplateBase generic{h, {repeat(1, k), repeat(balanced, k)}};
    try {
      generic.starts.push_back(theorem1_lower_construction(h, m).spec.sizes);
    } catch (const RangeError&) {
      // Over 64 vertices; the local search still starts from the other specs.
    }
    out.push_back(std::move(generic));
  }
  return out;
}

}  // namespace

int BlowupSpec::order() const { return std::accumulate(sizes.begin(), sizes.end(), 0); }

std::uint64_t BlowupSpec::realized_edges() const {
  if (static_cast<int>(sizes.size()) != base.order()) {
    throw InputError("blow-up needs one part size per base vertex");
  }
  std::uint64_t total = 0;
  for (const Edge& e : base.edges()) {
    total += static_cast<std::uint64_t>(sizes[e.u]) * static_cast<std::uint64_t>(sizes[e.v]);
  }
  return total;
}

Graph blow_up(const BlowupSpec& spec) {
  if (static_cast<int>(spec.sizes.size()) != spec.base.order()) {
    throw InputError("blow-up needs one part size per base vertex");
  }
  for (const int s : spec.sizes) {
    if (s < 0) throw InputError("negative part size");
  }
  const int n = spec.order();
  if (n > Graph::kMaxVertices) {
    throw RangeError("blow-up has " + std::to_string(n) + " vertices, limit is 64");
  }
  std::vector<int> first(spec.sizes.size() + 1, 0);
  for (std::size_t i = 0; i < spec.sizes.size(); ++i) first[i + 1] = first[i] + spec.sizes[i];
  Graph g(n);
  for (const Edge& e : spec.base.edges()) {
    for (int x = first[e.u]; x < first[e.u + 1]; ++x) {
      for (int y = first[e.v]; y < first[e.v + 1]; ++y) g.add_edge(x, y);
    }
  }
  return g;
}

BlowupCounter::BlowupCounter(const Graph& pattern, const Graph& base) {
  if (pattern.has_isolated_vertex()) {
    throw InputError("pattern has an isolated vertex; its induced count is unbounded");
  }
  aut_ = automorphism_order(pattern);
  const int k = pattern.order();
  const int b = base.order();
  std::vector<int> part(k, -1);
  std::vector<int> occupancy(b, 0);
  std::function<void(int)> go = [&](int x) {
    if (x == k) {
      ++profiles_[occupancy];
      return;
    }
    for (int p = 0; p < b; ++p) {
      bool ok = true;
      for (int y = 0; y < x && ok; ++y) {
        const bool adjacent = pattern.adjacent(x, y);
        ok = part[y] == p ? !adjacent : adjacent == base.adjacent(p, part[y]);
      }
      if (!ok) continue;
      part[x] = p;
      ++occupancy[p];
      go(x + 1);
      --occupancy[p];
    }
    part[x] = -1;
  };
  go(0);
}

std::uint64_t BlowupCounter::count(const std::vector<int>& sizes) const {
  unsigned __int128 ordered = 0;
  constexpr unsigned __int128 kLimit = ~static_cast<unsigned __int128>(0) >> 8;
  for (const auto& [profile, multiplicity] : profiles_) {
    unsigned __int128 term = multiplicity;
    for (std::size_t i = 0; i < profile.size() && term != 0; ++i) {
      for (int j = 0; j < profile[i]; ++j) {
        const int factor = sizes[i] - j;
        if (factor <= 0) {
          term = 0;
          break;
        }
        term *= static_cast<unsigned>(factor);
        if (term > kLimit) throw RangeError("blow-up copy count overflows");
      }
    }
    ordered += term;
    if (ordered > kLimit) throw RangeError("blow-up copy count overflows");
  }
  const unsigned __int128 unordered = ordered / aut_;
  if (unordered > UINT64_MAX) throw RangeError("blow-up copy count exceeds 64 bits");
  return static_cast<std::uint64_t>(unordered);
}

Theorem1Construction theorem1_lower_construction(const Graph& h, std::int64_t m) {
  if (h.has_isolated_vertex()) {
    throw InputError("pattern has an isolated vertex; its induced count is unbounded");
  }
  if (h.size() == 0) throw InputError("pattern has no edges");
  const OptimalWeighting w = optimal_weighting(h);
  const std::int64_t ratio = std::max<std::int64_t>(0, m) / h.size();
  Theorem1Construction out;
  out.spec.base = h;
  out.spec.sizes.resize(h.order());
  for (int v = 0; v < h.order(); ++v) {
    const int halves = w.weighting.halves[v];
    const std::int64_t size = halves == 0 ? 1 : halves == 1 ? isqrt(ratio) : ratio;
    if (size > std::numeric_limits<int>::max()) {
      throw RangeError("construction part of size " + std::to_string(size) + " is too large");
    }
    out.spec.sizes[v] = static_cast<int>(size);
  }
  if (ratio == 0) {
    out.warning = "budget " + std::to_string(m) + " is below |E(H)| = " +
                  std::to_string(h.size()) + "; construction is empty";
  }
  return out;
}

Construction optimize_part_sizes(const PatternFamily& family, std::int64_t m) {
  if (m < 0) throw RangeError("edge budget must be nonnegative");
  const Graph h = family.graph();
  const std::vector<TemplateBase> bases = templates(family, m);

  Candidate overall;
  bool have_overall = false;
  for (std::size_t bi = 0; bi < bases.size(); ++bi) {
    const TemplateBase& tb = bases[bi];
    const BlowupCounter counter(h, tb.base);
    BlowupSpec probe{tb.base, {}};
    auto evaluate = [&](const std::vector<int>& sizes) -> std::optional<Candidate> {
      int total = 0;
      for (const int s : sizes) {
        if (s < 0) return std::nullopt;
        total += s;
      }
      if (total > Graph::kMaxVertices) return std::nullopt;
      probe.sizes = sizes;
      const std::uint64_t edges = probe.realized_edges();
      if (edges > static_cast<std::uint64_t>(m)) return std::nullopt;
      return Candidate{static_cast<int>(bi), sizes, edges, counter.count(sizes)};
    };

    std::optional<Candidate> best;
    for (const auto& start : tb.starts) {
      auto c = evaluate(start);
      if (c && (!best || c->better_than(*best))) best = c;
    }
    if (!best) {
      auto empty = evaluate(std::vector<int>(tb.base.order(), 0));
      if (!empty) continue;
      best = empty;
    }

    // Steepest-ascent over +-1 moves and unit transfers between parts.
    const int parts = tb.base.order();
    for (int step = 0; step < 10000; ++step) {
      std::optional<Candidate> next;
      auto consider = [&](const std::vector<int>& sizes) {
        auto c = evaluate(sizes);
        if (c && c->better_than(next ? *next : *best)) next = c;
      };
      std::vector<int> sizes = best->sizes;
      for (int i = 0; i < parts; ++i) {
        for (const int delta : {1, -1}) {
          sizes[i] += delta;
          consider(sizes);
          sizes[i] -= delta;
        }
        for (int j = 0; j < parts; ++j) {
          if (i == j) continue;
          --sizes[i];
          ++sizes[j];
          consider(sizes);
          ++sizes[i];
          --sizes[j];
        }
      }
      if (!next) break;
      best = next;
    }
    if (!have_overall || best->better_than(overall)) {
      overall = *best;
      have_overall = true;
    }
  }

  Construction out;
  out.spec = {bases[overall.base_index].base, overall.sizes};
  out.edges = overall.edges;
  out.count = overall.count;
  return out;
}

}  // namespace inducibility
