#include <gtest/gtest.h>

#include <sstream>

#include "inducibility/claim_ledger.hpp"
#include "inducibility/constructions.hpp"
#include "inducibility/errors.hpp"
#include "inducibility/induced_count.hpp"
#include "oracles.hpp"

using namespace inducibility;

namespace {

// Oriented edges f that extend t by the plain definitions.
std::int64_t alpha_by_definition(const Graph& g, const OrientedEdgeTuple& t, bool close) {
  std::int64_t n = 0;
  for (const Edge& e : g.edges()) {
    for (const OrientedEdge f : {OrientedEdge{e.u, e.v}, OrientedEdge{e.v, e.u}}) {
      bool disjoint = true;
      for (const OrientedEdge& x : t) {
        disjoint &= f.tail != x.tail && f.tail != x.head && f.head != x.tail && f.head != x.head;
      }
      if (!disjoint) continue;
      OrientedEdgeTuple longer = t;
      longer.push_back(f);
      n += close ? characterizes_cycle(g, longer) : is_well_ordered(g, longer);
    }
  }
  return n;
}

// S_j^+ in half-units for the cycle listed as v_0..v_{2l-1}.
std::int64_t s_plus_halves(const Graph& g, const std::vector<int>& v, int j) {
  const int k = static_cast<int>(v.size());
  const int l = k / 2;
  auto edge = [&](int i) { return OrientedEdge{v[((i % k) + k) % k], v[(((i + 1) % k) + k) % k]}; };
  const OrientedEdge first = edge(j);
  std::int64_t halves = alpha_by_definition(g, {first}, false) +
                        alpha_by_definition(g, {first.reversed()}, false);
  for (int i = 2; i <= l - 1; ++i) {
    OrientedEdgeTuple t;
    for (int s = 0; s < i; ++s) t.push_back(edge(j + 2 * s));
    halves += 2 * alpha_by_definition(g, t, i == l - 1);
  }
  return halves;
}

std::vector<std::vector<int>> induced_cycles(const Graph& g, int k) {
  std::vector<std::vector<int>> out;
  for (const auto& c : ordered_copies(g, cycle_graph(k))) {
    if (c[0] == *std::min_element(c.begin(), c.end()) && c[1] < c[k - 1]) out.push_back(c);
  }
  return out;
}

void expect_matches_definition(const Graph& g, const std::vector<int>& cycle) {
  const ClaimLedger ledger = claim1_check(g, cycle);
  const int k = static_cast<int>(cycle.size());
  std::vector<int> reversed{cycle[0]};
  for (int i = k - 1; i >= 1; --i) reversed.push_back(cycle[i]);
  std::int64_t plus = 0;
  std::int64_t minus = 0;
  for (int j = 0; j < k; ++j) {
    const std::int64_t p = s_plus_halves(g, cycle, j);
    const std::int64_t q = s_plus_halves(g, reversed, ((-j - 1) % k + k) % k);
    EXPECT_EQ(ledger.s_plus[j].halves(), p) << "j=" << j;
    EXPECT_EQ(ledger.s_minus[j].halves(), q) << "j=" << j;
    plus += p;
    minus += q;
  }
  EXPECT_EQ(ledger.total_plus.halves(), plus);
  EXPECT_EQ(ledger.total_minus.halves(), minus);
  EXPECT_TRUE(ledger.rows_reconstruct);
  EXPECT_EQ(ledger.cap_violations, 0);
  EXPECT_EQ(ledger.row_total_violations, 0);
  EXPECT_EQ(ledger.m, g.size());
  EXPECT_EQ(ledger.rows.size(), static_cast<std::size_t>(g.size()));
}

}  // namespace

TEST(ClaimLedger, EightCycleItself) {
  const Graph c8 = cycle_graph(8);
  const ClaimLedger l = claim1_check(c8, {0, 1, 2, 3, 4, 5, 6, 7});
  EXPECT_EQ(l.l, 4);
  for (int j = 0; j < 8; ++j) {
    // Half of both-end extensions of one edge (2), then one path and one closing extension.
    EXPECT_EQ(l.s_plus[j], HalfInteger::from_integer(3));
    EXPECT_EQ(l.s_minus[j], HalfInteger::from_integer(3));
  }
  EXPECT_EQ(l.total_plus, HalfInteger::from_integer(24));
  EXPECT_EQ(l.budget(), HalfInteger::from_integer(32));
  EXPECT_TRUE(l.within_ml());
  expect_matches_definition(c8, {0, 1, 2, 3, 4, 5, 6, 7});
}

TEST(ClaimLedger, SixCycleFallback) {
  const Graph c6 = cycle_graph(6);
  const ClaimLedger l = claim1_check(c6, {0, 1, 2, 3, 4, 5});
  EXPECT_EQ(l.l, 3);
  EXPECT_TRUE(l.within_fallback());
  EXPECT_LE(l.total_plus, HalfInteger::from_integer(24));
  expect_matches_definition(c6, {0, 1, 2, 3, 4, 5});
}

TEST(ClaimLedger, BlownUpEightCycle) {
  const Graph g = blow_up({cycle_graph(8), {2, 1, 1, 1, 1, 1, 1, 1}});
  const auto cycles = induced_cycles(g, 8);
  ASSERT_EQ(cycles.size(), 2U);
  for (const auto& c : cycles) {
    const ClaimLedger l = claim1_check(g, c);
    EXPECT_TRUE(l.within_ml());
    expect_matches_definition(g, c);
  }
}

TEST(ClaimLedger, RandomHostsMatchDefinition) {
  std::mt19937_64 rng(59);
  int checked = 0;
  for (int trial = 0; trial < 200 && checked < 40; ++trial) {
    const int n = 9 + static_cast<int>(rng() % 3);
    Graph g = oracle::random_graph(rng, n, 0.25);
    for (int i = 0; i < 8; ++i) {  // plant an 8-cycle on the first vertices
      for (int j = i + 1; j < 8; ++j) {
        if (g.adjacent(i, j)) g.remove_edge(i, j);
      }
      g.add_edge(i, (i + 1) % 8);
    }
    for (const int k : {6, 8}) {
      for (const auto& c : induced_cycles(g, k)) {
        expect_matches_definition(g, c);
        ++checked;
      }
    }
  }
  EXPECT_GE(checked, 40);
}

TEST(ClaimLedger, RejectsNonCycles) {
  EXPECT_THROW(claim1_check(cycle_graph(8), {0, 1, 2, 3, 4, 5}), InputError);
  EXPECT_THROW(claim1_check(cycle_graph(4), {0, 1, 2, 3}), InputError);
  Graph chord = cycle_graph(8);
  chord.add_edge(0, 4);
  EXPECT_THROW(claim1_check(chord, {0, 1, 2, 3, 4, 5, 6, 7}), InputError);
}

TEST(ClaimLedger, CsvHasOneRowPerEdge) {
  const ClaimLedger l = claim1_check(cycle_graph(6), {0, 1, 2, 3, 4, 5});
  std::ostringstream out;
  write_ledger_csv(l, out);
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line.rfind("u,v,J_e,", 0), 0U);
  int rows = 0;
  while (std::getline(in, line)) ++rows;
  EXPECT_EQ(rows, 6);
}
