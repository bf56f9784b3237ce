#include <gtest/gtest.h>

#include "inducibility/canonical.hpp"
#include "inducibility/graph6.hpp"
#include "oracles.hpp"

using namespace inducibility;

TEST(Canonical, AllRelabelingsShareOneLabel) {
  std::mt19937_64 rng(5);
  const Graph g = oracle::random_graph(rng, 5, 0.5);
  std::vector<int> perm{0, 1, 2, 3, 4};
  std::set<std::string> labels;
  int seen = 0;
  do {
    labels.insert(canonical_label(g.permuted(perm)));
    ++seen;
  } while (std::next_permutation(perm.begin(), perm.end()));
  EXPECT_EQ(seen, 120);
  EXPECT_EQ(labels.size(), 1U);
}

TEST(Canonical, FormRelabelsToLabel) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = oracle::random_graph(rng, 3 + static_cast<int>(rng() % 20), 0.3);
    const CanonicalForm f = canonical_form(g);
    EXPECT_EQ(write_graph6(g.permuted(f.perm)), f.label);
  }
}

TEST(Canonical, LabelsSeparateClassesExactly) {
  for (int n = 1; n <= 6; ++n) {
    const std::vector<Graph> classes = oracle::all_graphs(n);
    std::set<std::string> labels;
    for (const Graph& g : classes) labels.insert(canonical_label(g));
    EXPECT_EQ(labels.size(), classes.size()) << "n=" << n;
  }
}

TEST(Canonical, RandomPairsAgreeWithPlainIsomorphism) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 4 + static_cast<int>(rng() % 6);
    const Graph a = oracle::random_graph(rng, n, 0.5);
    Graph b = oracle::random_graph(rng, n, 0.5);
    if (trial % 2 == 0) {
      std::vector<int> perm(n);
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      b = a.permuted(perm);
    }
    EXPECT_EQ(isomorphic(a, b), oracle::plain_isomorphic(a, b));
  }
}

TEST(Canonical, VertexTransitiveGraphs) {
  const Graph p = petersen_graph();
  std::mt19937_64 rng(1);
  std::vector<int> perm(10);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  EXPECT_EQ(canonical_label(p), canonical_label(p.permuted(perm)));
  EXPECT_EQ(automorphism_order(p), 120U);
  EXPECT_EQ(automorphism_order(complete_bipartite(4, 4)), 1152U);
  EXPECT_EQ(automorphism_order(cycle_graph(20)), 40U);
}

TEST(Automorphisms, Examples) {
  EXPECT_EQ(automorphism_order(complete_graph(4)), 24U);
  EXPECT_EQ(automorphism_order(cycle_graph(6)), 12U);
  EXPECT_EQ(automorphism_order(path_graph(5)), 2U);
  EXPECT_EQ(automorphism_order(cycle_graph(6)), oracle::automorphisms(cycle_graph(6)));
  EXPECT_EQ(automorphism_order(path_graph(5)), oracle::automorphisms(path_graph(5)));
}

TEST(Automorphisms, MatchBruteForceOnRandomGraphs) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 7);
    const Graph g = oracle::random_graph(rng, n, trial % 3 == 0 ? 0.2 : 0.5);
    EXPECT_EQ(automorphism_order(g), oracle::automorphisms(g)) << write_graph6(g);
  }
}

TEST(Automorphisms, GeneratorsAreAutomorphisms) {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = oracle::random_graph(rng, 8, 0.4);
    for (const auto& gamma : automorphism_generators(g)) EXPECT_TRUE(oracle::preserves(g, gamma));
  }
}
