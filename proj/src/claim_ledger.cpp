#include "inducibility/claim_ledger.hpp"

#include <algorithm>
#include <map>

#include "inducibility/errors.hpp"
#include "inducibility/induced_count.hpp"

namespace inducibility {
namespace {

int mod(int a, int n) { return ((a % n) + n) % n; }

// S_j^+ along the cycle w in its own orientation: per-edge contributions in
// half-units, indexed [edge][j].
std::map<Edge, std::vector<int>> forward_contributions(const Graph& g, const std::vector<int>& w,
                                                       int l) {
  const int k = 2 * l;
  std::map<Edge, std::vector<int>> out;
  for (const Edge& e : g.edges()) out[e].assign(k, 0);
  for (int j = 0; j < k; ++j) {
    const OrientedEdge first{w[j], w[mod(j + 1, k)]};
    for (const OrientedEdge& x :
         extension_edges(g, {first}, ExtensionMode::path_extend())) {
      out[x.unordered()][j] += 1;
    }
    for (const OrientedEdge& x :
         extension_edges(g, {first.reversed()}, ExtensionMode::path_extend())) {
      out[x.unordered()][j] += 1;
    }
    OrientedEdgeTuple t{first};
    for (int i = 2; i <= l - 1; ++i) {
      const int s = j + 2 * (i - 1);
      t.push_back({w[mod(s, k)], w[mod(s + 1, k)]});
      const ExtensionMode mode =
          i == l - 1 ? ExtensionMode::cycle_close(k) : ExtensionMode::path_extend();
      for (const OrientedEdge& x : extension_edges(g, t, mode)) out[x.unordered()][j] += 2;
    }
  }
  return out;
}

// Case caps (half-units) for e's contribution to S_j^+, j = 0..2l-1, from J_e.
std::vector<int> case_caps(const std::vector<char>& in_j, int l) {
  const int k = 2 * l;
  std::vector<int> caps(k, 0);
  const bool any = std::find(in_j.begin(), in_j.end(), 1) != in_j.end();
  for (int j = 0; j < k; ++j) {
    const bool a = in_j[j];
    const bool b = in_j[mod(j + 1, k)];
    if (a && b) {
      caps[j] = 0;
    } else if (a) {
      bool quiet = true;
      for (int s = j + 2; s <= j + k - 4; ++s) quiet &= !in_j[mod(s, k)];
      caps[j] = quiet && in_j[mod(j - 3, k)] ? 3 : 1;
    } else if (b) {
      caps[j] = 1;
    } else if (!any) {
      caps[j] = 0;
    } else {
      int next = j + 1;
      while (!in_j[mod(next, k)]) ++next;
      caps[j] = (next - j) % 2 == 1 ? 2 : 0;
    }
  }
  return caps;
}

}  // namespace

bool ClaimLedger::within_fallback() const {
  const auto cap = HalfInteger::from_integer(m * (l + 1));
  return total_plus <= cap && total_minus <= cap;
}

bool ClaimLedger::exceeds_3m() const {
  const auto cap = HalfInteger::from_integer(3 * m);
  return total_plus > cap || total_minus > cap;
}

ClaimLedger claim1_check(const Graph& g, const std::vector<int>& cycle) {
  const int k = static_cast<int>(cycle.size());
  if (k < 6 || k % 2 != 0) throw InputError("claim ledger needs an even cycle of length >= 6");
  VertexSet seen = 0;
  for (const int v : cycle) {
    if (v < 0 || v >= g.order() || contains(seen, v)) throw InputError("invalid cycle sequence");
    seen |= bit(v);
  }
  for (int i = 0; i < k; ++i) {
    const VertexSet expected = bit(cycle[mod(i - 1, k)]) | bit(cycle[mod(i + 1, k)]);
    if ((g.neighbors(cycle[i]) & seen) != expected) {
      throw InputError("sequence is not an induced cycle");
    }
  }

  const int l = k / 2;
  ClaimLedger ledger;
  ledger.cycle = cycle;
  ledger.l = l;
  ledger.m = g.size();

  // S^- along v is S^+ along the reversal w_i = v_{-i}, with j -> -j - 1.
  std::vector<int> reversed(k);
  for (int i = 0; i < k; ++i) reversed[i] = cycle[mod(-i, k)];
  const auto plus = forward_contributions(g, cycle, l);
  const auto minus_rev = forward_contributions(g, reversed, l);

  // Direct alpha values for the reconstruction check.
  std::vector<std::int64_t> direct_plus(k, 0), direct_minus(k, 0);
  auto direct = [&](const std::vector<int>& w, std::vector<std::int64_t>& s, bool mirrored) {
    for (int j = 0; j < k; ++j) {
      const int target = mirrored ? mod(-j - 1, k) : j;
      std::int64_t halves = static_cast<std::int64_t>(alpha_both_ends(g, Edge(w[j], w[mod(j + 1, k)])));
      OrientedEdgeTuple t{{w[j], w[mod(j + 1, k)]}};
      for (int i = 2; i <= l - 1; ++i) {
        const int s0 = j + 2 * (i - 1);
        t.push_back({w[mod(s0, k)], w[mod(s0 + 1, k)]});
        const ExtensionMode mode =
            i == l - 1 ? ExtensionMode::cycle_close(k) : ExtensionMode::path_extend();
        halves += 2 * static_cast<std::int64_t>(alpha_extensions(g, t, mode));
      }
      s[target] = halves;
    }
  };
  direct(cycle, direct_plus, false);
  direct(reversed, direct_minus, true);

  std::vector<std::int64_t> row_plus(k, 0), row_minus(k, 0);
  for (const Edge& e : g.edges()) {
    ClaimLedgerRow row;
    row.edge = e;
    std::vector<char> in_j(k, 0), in_j_rev(k, 0);
    for (int j = 0; j < k; ++j) {
      const VertexSet nb = g.neighbors(cycle[j]);
      if (contains(nb, e.u) || contains(nb, e.v)) {
        in_j[j] = 1;
        in_j_rev[mod(-j, k)] = 1;
        row.j_set.push_back(j);
      }
    }
    const auto caps_plus = case_caps(in_j, l);
    const auto caps_rev = case_caps(in_j_rev, l);
    row.plus_halves = plus.at(e);
    row.plus_caps = caps_plus;
    row.minus_halves.assign(k, 0);
    row.minus_caps.assign(k, 0);
    const auto& rev = minus_rev.at(e);
    for (int j = 0; j < k; ++j) {
      row.minus_halves[mod(-j - 1, k)] = rev[j];
      row.minus_caps[mod(-j - 1, k)] = caps_rev[j];
    }
    int sum_plus = 0, sum_minus = 0;
    for (int j = 0; j < k; ++j) {
      row_plus[j] += row.plus_halves[j];
      row_minus[j] += row.minus_halves[j];
      ledger.cap_violations += row.plus_halves[j] > row.plus_caps[j];
      ledger.cap_violations += row.minus_halves[j] > row.minus_caps[j];
      sum_plus += row.plus_halves[j];
      sum_minus += row.minus_halves[j];
    }
    ledger.row_total_violations += sum_plus > 2 * l;
    ledger.row_total_violations += sum_minus > 2 * l;
    ledger.rows.push_back(std::move(row));
  }

  for (int j = 0; j < k; ++j) {
    ledger.s_plus.push_back(HalfInteger::from_halves(direct_plus[j]));
    ledger.s_minus.push_back(HalfInteger::from_halves(direct_minus[j]));
    ledger.total_plus += ledger.s_plus.back();
    ledger.total_minus += ledger.s_minus.back();
    ledger.rows_reconstruct &= row_plus[j] == direct_plus[j] && row_minus[j] == direct_minus[j];
  }
  return ledger;
}

void write_ledger_csv(const ClaimLedger& ledger, std::ostream& out) {
  const int k = 2 * ledger.l;
  out << "u,v,J_e";
  for (int j = 0; j < k; ++j) out << ",S+_" << j;
  for (int j = 0; j < k; ++j) out << ",S-_" << j;
  out << '\n';
  for (const ClaimLedgerRow& row : ledger.rows) {
    out << row.edge.u << ',' << row.edge.v << ',';
    for (std::size_t i = 0; i < row.j_set.size(); ++i) out << (i ? " " : "") << row.j_set[i];
    for (const int h : row.plus_halves) out << ',' << HalfInteger::from_halves(h).to_string();
    for (const int h : row.minus_halves) out << ',' << HalfInteger::from_halves(h).to_string();
    out << '\n';
  }
}

}  // namespace inducibility
