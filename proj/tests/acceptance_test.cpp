// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

#include "inducibility/bounds.hpp"
#include "inducibility/c6_hypergraph.hpp"
#include "inducibility/canonical.hpp"
#include "inducibility/claim_ledger.hpp"
#include "inducibility/cli.hpp"
#include "inducibility/constructions.hpp"
#include "inducibility/entropy.hpp"
#include "inducibility/exact_search.hpp"
#include "inducibility/family.hpp"
#include "inducibility/frac_independence.hpp"
#include "inducibility/graph6.hpp"
#include "inducibility/induced_count.hpp"
#include "oracles.hpp"

using namespace inducibility;

namespace {

struct Verdict {
  bool pass = true;
  std::string detail;
};

// Collects the first few failure messages of a criterion.
class Checker {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    ++failures_;
    if (failures_ <= 3) notes_ += (notes_.empty() ? "" : "; ") + what;
  }
  Verdict verdict(const std::string& summary) const {
    std::ostringstream s;
    s << summary << ", " << checks_ << " checks";
    if (failures_ > 0) s << ", " << failures_ << " failed: " << notes_;
    return {failures_ == 0, s.str()};
  }

 private:
  long checks_ = 0;
  long failures_ = 0;
  std::string notes_;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f", x);
  return buf;
}

// All isomorphism classes on n vertices, by vertex extension.
std::vector<Graph> classes_on(int n) {
  std::vector<Graph> level{Graph(0)};
  for (int order = 1; order <= n; ++order) {
    std::set<std::string> seen;
    std::vector<Graph> next;
    for (const Graph& g : level) {
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (order - 1)); ++mask) {
        Graph child = g;
        const int v = child.add_vertex();
        for_each_vertex(mask, [&](int u) { child.add_edge(u, v); });
        if (seen.insert(canonical_label(child)).second) next.push_back(child);
      }
    }
    level = std::move(next);
  }
  return level;
}

Verdict ac1_alpha_f() {
  const auto t0 = std::chrono::steady_clock::now();
  Checker c;
  const std::vector<std::size_t> known{1, 1, 2, 4, 11, 34, 156, 1044};
  std::size_t graphs = 0;
  for (int n = 1; n <= 7; ++n) {
    const std::vector<Graph> gs = classes_on(n);
    c.expect(gs.size() == known[n], "class count on " + std::to_string(n) + " vertices");
    for (const Graph& g : gs) {
      const HalfInteger fast = alpha_f(g);
      c.expect(fast == alpha_f_bruteforce(g), "mismatch on " + write_graph6(g));
      c.expect(fast.halves() == oracle::alpha_f_halves(g), "oracle mismatch on " + write_graph6(g));
      ++graphs;
    }
  }
  std::mt19937_64 rng(1001);
  for (int i = 0; i < 500; ++i) {
    const int n = 8 + static_cast<int>(rng() % 5);
    const Graph g = oracle::random_graph(rng, n, 0.15 + 0.1 * (i % 6));
    c.expect(alpha_f(g) == alpha_f_bruteforce(g), "mismatch on " + write_graph6(g));
    ++graphs;
  }
  const double secs = seconds_since(t0);
  c.expect(secs < 300.0, "took " + fmt(secs) + " s");
  return c.verdict(std::to_string(graphs) + " graphs in " + fmt(secs) + " s");
}

Verdict ac2_counting() {
  Checker c;
  const std::vector<std::pair<std::string, Graph>> patterns{
      {"P3", path_graph(3)},  {"P4", path_graph(4)},  {"P5", path_graph(5)},     {"C4", cycle_graph(4)},
      {"C5", cycle_graph(5)}, {"C6", cycle_graph(6)}, {"K3", complete_graph(3)}, {"K4", complete_graph(4)}};
  std::mt19937_64 rng(1002);
  for (int i = 0; i < 200; ++i) {
    const int n = 1 + static_cast<int>(rng() % 9);
    const Graph g = oracle::random_graph(rng, n, 0.2 + 0.15 * (i % 5));
    for (const auto& [name, h] : patterns) {
      const std::uint64_t naive = oracle::ordered_induced(g, h);
      const CountSummary s = count_induced(g, h);
      c.expect(s.ordered == naive && s.unordered * oracle::automorphisms(h) == naive,
               name + " in " + write_graph6(g));
    }
  }
  return c.verdict("200 hosts x 8 patterns");
}

Verdict ac3_star_law() {
  Checker c;
  for (int m = 1; m <= 8; ++m) {
    const SearchResult r = rho_exact(path_graph(3), m);
    c.expect(r.rho == oracle::binomial(m, 2), "rho(P3," + std::to_string(m) + ")=" + std::to_string(r.rho));
    const std::string star = canonical_label(star_graph(m));
    c.expect(std::find(r.extremal.begin(), r.extremal.end(), star) != r.extremal.end(),
             "no star certificate at m=" + std::to_string(m));
  }
  return c.verdict("m = 1..8");
}

const std::vector<PatternFamily>& grid_families() {
  static const std::vector<PatternFamily> f{PatternFamily::path(4), PatternFamily::path(5),
                                            PatternFamily::cycle(4), PatternFamily::cycle(5),
                                            PatternFamily::cycle(6)};
  return f;
}

Verdict ac4_sandwich() {
  const auto t0 = std::chrono::steady_clock::now();
  Checker c;
  for (const PatternFamily& f : grid_families()) {
    for (int m = 4; m <= 9; ++m) {
      const SandwichReport r = verify_sandwich(f, m);
      const std::string at = f.name() + ",m=" + std::to_string(m);
      std::string why;
      for (const auto& v : r.violations) why += " " + v;
      c.expect(r.pass(), at + why);
      c.expect(r.lower <= r.rho, at + " lower > rho");
      c.expect(within_upper(r.rho, r.upper), at + " rho above " + r.upper.provenance);
      if (f.kind() == PatternFamily::Kind::kCycle && f.k() == 4) {
        c.expect(4 * r.rho <= static_cast<std::uint64_t>(m) * m, at + " rho > m^2/4");
      }
    }
  }
  const double secs = seconds_since(t0);
  c.expect(secs < 1800.0, "took " + fmt(secs) + " s");
  return c.verdict("30 grid points in " + fmt(secs) + " s");
}

Verdict ac5_generic_sandwich() {
  Checker c;
  std::mt19937_64 rng(1005);
  int patterns = 0;
  while (patterns < 20) {
    const int n = 4 + static_cast<int>(rng() % 3);
    const Graph h = oracle::random_graph(rng, n, 0.5);
    if (h.has_isolated_vertex()) continue;
    ++patterns;
    const double aut = static_cast<double>(automorphism_order(h));
    const double af = alpha_f(h).to_double();
    for (const int m : {6, 7, 8}) {
      const Theorem1Construction t = theorem1_lower_construction(h, m);
      const std::uint64_t lower = BlowupCounter(h, t.spec.base).count(t.spec.sizes);
      const std::uint64_t rho = rho_exact(h, m).rho;
      const double upper = std::pow(2.0, n / 2.0) / aut * std::pow(static_cast<double>(m), af);
      const std::string at = write_graph6(h) + ",m=" + std::to_string(m);
      c.expect(t.spec.realized_edges() <= static_cast<std::uint64_t>(m), at + " over budget");
      c.expect(lower <= rho, at + " lower " + std::to_string(lower) + " > rho " + std::to_string(rho));
      c.expect(static_cast<double>(rho) <= upper + kBoundSlack, at + " rho above generic upper");
    }
  }
  return c.verdict("20 random patterns x m in {6,7,8}");
}

Verdict ac6_c4_trend() {
  Checker c;
  // c(K_{a,a}, C4) = C(a,2)^2 and m = a^2, so the ratio is (a-1)^2 / a^2 exactly.
  for (const int a : {10, 20}) {
    const std::uint64_t counted = count_induced(complete_bipartite(a, a), cycle_graph(4)).unordered;
    c.expect(counted == oracle::binomial(a, 2) * oracle::binomial(a, 2), "closed form at a=" + std::to_string(a));
  }
  double previous = 0;
  std::string ratios;
  for (const int a : {10, 20, 40}) {
    const std::uint64_t count = oracle::binomial(a, 2) * oracle::binomial(a, 2);
    const std::uint64_t m = static_cast<std::uint64_t>(a) * a;
    // ratio = 4 count / m^2; compare with (a-1)^2/a^2 by cross-multiplying.
    c.expect(4 * count * static_cast<std::uint64_t>(a) * a ==
                 m * m * static_cast<std::uint64_t>(a - 1) * (a - 1),
             "ratio at a=" + std::to_string(a));
    const double ratio = 4.0 * static_cast<double>(count) / (static_cast<double>(m) * m);
    c.expect(ratio > previous, "not increasing at a=" + std::to_string(a));
    previous = ratio;
    ratios += (ratios.empty() ? "" : " ") + std::to_string(ratio).substr(0, 6);
  }
  c.expect(previous >= 0.95, "ratio at a=40 below 0.95");
  return c.verdict("ratios " + ratios);
}

Verdict ac7_blowups() {
  Checker c;
  const Graph c6 = blow_up({cycle_graph(6), {2, 2, 2, 2, 2, 2}});
  c.expect(c6.size() == 24, "C6[2] edges");
  c.expect(count_induced(c6, cycle_graph(6)).unordered == 64, "C6[2] count");
  c.expect(64 == (24 / 6) * (24 / 6) * (24 / 6), "(m/6)^3");
  const Graph c5 = blow_up({cycle_graph(5), {5, 5, 5, 5, 5}});
  c.expect(c5.size() == 125, "C5[5] edges");
  const std::uint64_t n5 = count_induced(c5, cycle_graph(5)).unordered;
  c.expect(n5 == 3125, "C5[5] count " + std::to_string(n5));
  // (m/5)^{5/2} = 25^{5/2} = 5^5.
  c.expect(n5 * n5 == 25ULL * 25 * 25 * 25 * 25, "(m/5)^(5/2)");
  return c.verdict("C6[2]: m=24 c=64; C5[5]: m=125 c=3125");
}

std::vector<Graph> entropy_hosts() {
  std::vector<Graph> hosts{complete_bipartite(2, 2),
                           complete_bipartite(3, 3),
                           cycle_graph(5),
                           cycle_graph(6),
                           cycle_graph(7),
                           blow_up({cycle_graph(5), {2, 2, 2, 2, 2}}),
                           blow_up({cycle_graph(5), {2, 1, 2, 1, 1}}),
                           blow_up({cycle_graph(7), {2, 1, 1, 2, 1, 1, 1}}),
                           petersen_graph()};
  std::mt19937_64 rng(1008);
  for (int i = 0; i < 6; ++i) hosts.push_back(oracle::random_graph(rng, 9, 0.35));
  return hosts;
}

Verdict ac8_entropy() {
  Checker c;
  const std::vector<std::pair<std::string, Graph>> patterns{
      {"C4", cycle_graph(4)}, {"C5", cycle_graph(5)}, {"C7", cycle_graph(7)},
      {"P3", path_graph(3)},  {"P4", path_graph(4)},  {"P5", path_graph(5)}};
  int pairs = 0;
  int reductions = 0;
  for (const Graph& g : entropy_hosts()) {
    for (const auto& [name, h] : patterns) {
      const CountSummary s = count_induced(g, h);
      if (s.unordered == 0) continue;
      ++pairs;
      const std::string at = name + " in " + write_graph6(g);
      const CopyDistribution d(g, h);
      std::vector<int> all(h.order());
      std::iota(all.begin(), all.end(), 0);
      const double full = projection_entropy(d, all);
      const double expected = std::log(static_cast<double>(s.aut) * static_cast<double>(s.unordered));
      c.expect(std::abs(full - expected) < 1e-9, at + " full-tuple entropy");
      for (const EntropyTerm& t : verify_random_splits(d, 100, 17).terms) {
        c.expect(std::abs(t.slack()) < 1e-9, at + " " + t.name);
      }
      for (const EntropyTerm& t : verify_shearer(d, leave_one_out_cover(h.order()), h.order() - 1).terms) {
        c.expect(t.slack() >= -1e-9, at + " Shearer");
      }
    }
    for (const int k : {5, 7}) {
      if (count_ordered_copies(g, cycle_graph(k)) == 0 || count_ordered_copies(g, path_graph(k)) == 0) continue;
      ++reductions;
      for (const EntropyTerm& t : verify_odd_cycle_reduction(g, k).terms) {
        const bool ok = t.kind == EntropyTerm::Kind::kIdentity ? std::abs(t.slack()) <= 1e-9 : t.slack() >= -1e-9;
        c.expect(ok, "C" + std::to_string(k) + " in " + write_graph6(g) + ": " + t.name);
      }
    }
  }
  // The four-cycle entropy values on K_{2,2}.
  const CopyDistribution k22(complete_bipartite(2, 2), cycle_graph(4));
  c.expect(std::abs(projection_entropy(k22, {0, 1, 2, 3}) - std::log(8.0)) < 1e-9, "K22 ln 8");
  c.expect(std::abs(projection_entropy(k22.edge_view(true), {1, 3}, {0, 2}) - std::log(2.0)) < 1e-9, "K22 ln 2");
  c.expect(pairs >= 10, "only " + std::to_string(pairs) + " pairs");
  return c.verdict(std::to_string(pairs) + " (G,H) pairs, " + std::to_string(reductions) + " odd-cycle reductions");
}

std::vector<Graph> budget_corpus() {
  std::vector<Graph> corpus{cycle_graph(6), cycle_graph(7)};
  for (const int k : {5, 6, 7}) {
    // All blow-ups with part sizes in {1, 2} and at most 14 vertices, up to rotation.
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
      std::vector<int> sizes(k);
      for (int i = 0; i < k; ++i) sizes[i] = 1 + static_cast<int>((mask >> i) & 1U);
      if (std::accumulate(sizes.begin(), sizes.end(), 0) > 14 || (mask & 1U) == 0) continue;
      corpus.push_back(blow_up({cycle_graph(k), sizes}));
    }
  }
  std::mt19937_64 rng(1009);
  for (int i = 0; i < 50; ++i) corpus.push_back(oracle::random_graph(rng, 8 + static_cast<int>(rng() % 4), 0.3));
  return corpus;
}

Verdict ac9_budgets() {
  Checker c;
  std::size_t runs = 0;
  std::size_t paths = 0;
  for (const Graph& g : budget_corpus()) {
    for (const int k : {4, 5, 6, 7}) {
      const std::uint64_t copies = count_ordered_copies(g, path_graph(k));
      if (copies == 0) continue;
      const EntropyReport r = verify_path_decomposition(g, PathOrCycle::path(k));
      c.expect(!r.integer_checks.empty(), "no budget checks");
      for (const IntegerCheck& ic : r.integer_checks) {
        c.expect(ic.holds(), "P" + std::to_string(k) + " in " + write_graph6(g) + ": " + ic.name + " " +
                                 std::to_string(ic.lhs) + " > " + std::to_string(ic.rhs));
      }
      ++runs;
      paths += copies;
    }
  }
  return c.verdict(std::to_string(runs) + " (host, P_k) runs over " + std::to_string(paths) + " ordered paths");
}

std::vector<std::vector<int>> unordered_cycles(const Graph& g, int k) {
  std::vector<std::vector<int>> out;
  for (const auto& cyc : ordered_copies(g, cycle_graph(k))) {
    if (cyc[0] == *std::min_element(cyc.begin(), cyc.end()) && cyc[1] < cyc[k - 1]) out.push_back(cyc);
  }
  return out;
}

Verdict ac10_claim1() {
  Checker c;
  std::mt19937_64 rng(1010);
  std::size_t c8s = 0;
  std::size_t c6s = 0;
  for (int i = 0; i < 50; ++i) {
    const int n = 10 + static_cast<int>(rng() % 3);
    Graph g = oracle::random_graph(rng, n, 0.25);
    // Seed an induced 8-cycle on a random vertex subset.
    std::vector<int> vs(n);
    std::iota(vs.begin(), vs.end(), 0);
    std::shuffle(vs.begin(), vs.end(), rng);
    for (int a = 0; a < 8; ++a) {
      for (int b = a + 1; b < 8; ++b) {
        if (g.adjacent(vs[a], vs[b])) g.remove_edge(vs[a], vs[b]);
      }
    }
    for (int a = 0; a < 8; ++a) g.add_edge(vs[a], vs[(a + 1) % 8]);
    const HalfInteger four_m = HalfInteger::from_integer(4 * static_cast<std::int64_t>(g.size()));
    const auto eights = unordered_cycles(g, 8);
    c.expect(!eights.empty(), "seeded host has no induced C8");
    for (const auto& cyc : eights) {
      const ClaimLedger l = claim1_check(g, cyc);
      c.expect(l.total_plus <= four_m && l.total_minus <= four_m,
               "C8 in " + write_graph6(g) + " totals " + l.total_plus.to_string() + "/" +
                   l.total_minus.to_string() + " > 4m");
      c.expect(l.rows_reconstruct, "row sums do not reconstruct S_j");
      ++c8s;
    }
    for (const auto& cyc : unordered_cycles(g, 6)) {
      const ClaimLedger l = claim1_check(g, cyc);
      c.expect(l.total_plus <= four_m && l.total_minus <= four_m, "C6 in " + write_graph6(g) + " above 4m");
      ++c6s;
    }
  }
  return c.verdict(std::to_string(c8s) + " induced C8, " + std::to_string(c6s) + " induced C6");
}

Verdict ac11_c6_hypergraph() {
  Checker c;
  std::vector<Graph> hosts{cycle_graph(6), complete_graph(4)};
  for (std::uint64_t mask = 0; mask < 64; ++mask) {
    std::vector<int> sizes(6);
    for (int i = 0; i < 6; ++i) sizes[i] = 1 + static_cast<int>((mask >> i) & 1U);
    hosts.push_back(blow_up({cycle_graph(6), sizes}));
  }
  for (const Graph& g : hosts) {
    const C6HypergraphReport r = c6_hypergraph_check(g);
    const std::string at = write_graph6(g);
    const auto m = static_cast<std::uint64_t>(r.m);
    c.expect(r.hyperedges() == 2 * r.gamma, at + " e(H) != 2 Gamma");
    c.expect(r.hyperedge_codegree_sum <= m * r.gamma, at + " co-degree sum > m Gamma");
    c.expect(2 * r.two_section_edges <= m * m, at + " 2-section > m^2/2");
    c.expect(72 * r.gamma <= m * m * m, at + " Gamma > 3 (m/6)^3");
    c.expect(r.gamma == count_induced(g, cycle_graph(6)).unordered, at + " Gamma differs from count");
  }
  return c.verdict(std::to_string(hosts.size()) + " hosts");
}

Verdict ac12_determinism() {
  Checker c;
  int points = 0;
  for (const PatternFamily& f : grid_families()) {
    for (int m = 4; m <= 9; ++m) {
      std::string reports[2];
      int codes[2];
      const char* shards[2] = {"1", "8"};
      for (int i = 0; i < 2; ++i) {
        std::ostringstream out;
        std::ostringstream err;
        codes[i] = dispatch({"--no-cache", "--shards", shards[i], "rho", "--pattern", f.name(), "-m",
                             std::to_string(m)},
                            out, err);
        reports[i] = out.str();
      }
      const std::string at = f.name() + ",m=" + std::to_string(m);
      c.expect(codes[0] == 0 && codes[1] == 0, at + " nonzero exit");
      c.expect(!reports[0].empty() && reports[0] == reports[1], at + " reports differ");
      ++points;
    }
  }
  return c.verdict(std::to_string(points) + " grid points, shards 1 vs 8");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
      {"AC1 alpha_f oracle equivalence", ac1_alpha_f},
      {"AC2 counting oracle equivalence", ac2_counting},
      {"AC3 exact star law", ac3_star_law},
      {"AC4 sandwich grid", ac4_sandwich},
      {"AC5 generic sandwich", ac5_generic_sandwich},
      {"AC6 C4 ratio trend", ac6_c4_trend},
      {"AC7 blow-up exactness", ac7_blowups},
      {"AC8 entropy identity suite", ac8_entropy},
      {"AC9 budget integer suite", ac9_budgets},
      {"AC10 claim ledger suite", ac10_claim1},
      {"AC11 C6 hypergraph suite", ac11_c6_hypergraph},
      {"AC12 determinism", ac12_determinism},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Verdict v;
    try {
      v = run();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    std::cout << (v.pass ? "PASS " : "FAIL ") << name << " (" << v.detail << ")" << std::endl;
    failed += !v.pass;
  }
  std::cout << (failed == 0 ? "all 12 criteria passed" : std::to_string(failed) + " criteria failed") << std::endl;
  return failed == 0 ? 0 : 1;
}
