#include "inducibility/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "inducibility/errors.hpp"

namespace inducibility {
namespace {

// sum c log c over the run lengths of a sorted range, in long double.
long double runs_c_log_c(const std::vector<std::vector<int>>& keys, std::size_t begin,
                         std::size_t end) {
  long double total = 0;
  std::size_t i = begin;
  while (i < end) {
    std::size_t j = i + 1;
    while (j < end && keys[j] == keys[i]) ++j;
    const auto c = static_cast<long double>(j - i);
    total += c * std::log(c);
    i = j;
  }
  return total;
}

std::vector<int> project(const std::vector<int>& row, const std::vector<int>& coords) {
  std::vector<int> out;
  out.reserve(coords.size());
  for (const int c : coords) out.push_back(row[c]);
  return out;
}

std::vector<int> range(int begin, int end, int step = 1) {
  std::vector<int> out;
  for (int i = begin; i < end; i += step) out.push_back(i);
  return out;
}

std::vector<int> concat(std::vector<int> a, const std::vector<int>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

double log_u(std::uint64_t x) { return std::log(static_cast<double>(x)); }

// Supports of the final coordinates of ordered induced P_{2l+1} copies whose
// first 2l-2 vertices follow one of `prefixes`.
struct Completions {
  std::set<Edge> finals;                          // e_{2l}
  std::map<Edge, std::set<Edge>> penultimate;     // e_{2l} -> e_{2l-2}
  std::map<Edge, std::set<Edge>> last_odd;        // e_{2l} -> e_{2l-1}
};

Completions completions(const Graph& host, int k, const std::vector<std::vector<int>>& prefixes) {
  Completions out;
  const Graph pattern = path_graph(k);
  for (const auto& prefix : prefixes) {
    for_each_ordered_copy(host, pattern, prefix, [&](std::span<const int> x) {
      const Edge last(x[k - 2], x[k - 1]);
      out.finals.insert(last);
      out.penultimate[last].emplace(x[k - 4], x[k - 3]);
      out.last_odd[last].emplace(x[k - 3], x[k - 2]);
    });
  }
  return out;
}

}  // namespace

bool EntropyTerm::holds() const {
  const double s = slack();
  return kind == Kind::kIdentity ? std::abs(s) <= kEntropyTolerance : s >= -kEntropyTolerance;
}

bool EntropyReport::pass() const {
  for (const auto& t : terms) {
    if (!t.holds()) return false;
  }
  for (const auto& c : integer_checks) {
    if (!c.holds()) return false;
  }
  return true;
}

void EntropyReport::add_identity(std::string name, double lhs, double rhs) {
  terms.push_back({std::move(name), lhs, rhs, EntropyTerm::Kind::kIdentity});
}

void EntropyReport::add_inequality(std::string name, double lhs, double rhs) {
  terms.push_back({std::move(name), lhs, rhs, EntropyTerm::Kind::kInequality});
}

void EntropyReport::append(const EntropyReport& other) {
  terms.insert(terms.end(), other.terms.begin(), other.terms.end());
  integer_checks.insert(integer_checks.end(), other.integer_checks.begin(),
                        other.integer_checks.end());
}

CopyDistribution::CopyDistribution(const Graph& host, const Graph& pattern)
    : rows_(ordered_copies(host, pattern)), arity_(pattern.order()) {}

CopyDistribution::CopyDistribution(std::vector<std::vector<int>> rows, int arity)
    : rows_(std::move(rows)), arity_(arity) {
  for (const auto& r : rows_) {
    if (static_cast<int>(r.size()) != arity_) throw InputError("row arity mismatch");
  }
}

CopyDistribution CopyDistribution::edge_view(bool cyclic) const {
  const int k = arity_;
  const int edges = cyclic ? k : k - 1;
  std::vector<std::vector<int>> out;
  out.reserve(rows_.size());
  for (const auto& r : rows_) {
    std::vector<int> e(edges);
    for (int i = 0; i < edges; ++i) e[i] = encode_edge(r[i], r[(i + 1) % k]);
    out.push_back(std::move(e));
  }
  return CopyDistribution(std::move(out), edges);
}

double projection_entropy(const CopyDistribution& dist, const std::vector<int>& target,
                          const std::vector<int>& given) {
  if (dist.size() == 0) throw InputError("empty support");
  std::vector<char> used(dist.arity(), 0);
  for (const int c : concat(target, given)) {
    if (c < 0 || c >= dist.arity()) throw InputError("coordinate out of range");
    if (used[c]) throw InputError("target and given coordinates overlap");
    used[c] = 1;
  }
  const std::vector<int> both = concat(given, target);
  std::vector<std::vector<int>> keys;
  keys.reserve(dist.size());
  for (const auto& row : dist.rows()) keys.push_back(project(row, both));
  std::sort(keys.begin(), keys.end());

  const std::size_t g = given.size();
  auto same_group = [g](const std::vector<int>& a, const std::vector<int>& b) {
    return std::equal(a.begin(), a.begin() + g, b.begin());
  };
  long double total = 0;
  std::size_t i = 0;
  while (i < keys.size()) {
    std::size_t j = i + 1;
    while (j < keys.size() && same_group(keys[i], keys[j])) ++j;
    const auto n = static_cast<long double>(j - i);
    total += n * std::log(n) - runs_c_log_c(keys, i, j);
    i = j;
  }
  return static_cast<double>(total / static_cast<long double>(keys.size()));
}

EntropyReport verify_chain(const CopyDistribution& dist, const std::vector<int>& ordering) {
  EntropyReport r;
  const std::vector<int> all = range(0, dist.arity());
  const double full = projection_entropy(dist, all);
  r.add_identity("H(X) = log N", full, std::log(static_cast<double>(dist.size())));
  double sum = 0;
  std::vector<int> prefix;
  for (const int c : ordering) {
    const double cond = projection_entropy(dist, {c}, prefix);
    r.add_inequality("H(X" + std::to_string(c) + " | prefix) <= H(X" + std::to_string(c) + ")",
                     cond, projection_entropy(dist, {c}));
    sum += cond;
    prefix.push_back(c);
  }
  r.add_identity("chain rule", sum, projection_entropy(dist, prefix));
  return r;
}

EntropyReport verify_random_splits(const CopyDistribution& dist, int splits, std::uint64_t seed) {
  EntropyReport r;
  std::mt19937_64 rng(seed);
  const int k = dist.arity();
  for (int s = 0; s < splits; ++s) {
    std::vector<int> x;
    std::vector<int> y;
    for (int c = 0; c < k; ++c) {
      const auto side = rng() % 3;
      if (side == 0) x.push_back(c);
      if (side == 1) y.push_back(c);
    }
    const double joint = projection_entropy(dist, concat(x, y));
    const double chained = projection_entropy(dist, x) + projection_entropy(dist, y, x);
    r.add_identity("split " + std::to_string(s) + ": H(X,Y) = H(X) + H(Y|X)", joint, chained);
  }
  return r;
}

EntropyReport verify_shearer(const CopyDistribution& dist,
                             const std::vector<std::vector<int>>& cover, int r) {
  std::vector<int> hits(dist.arity(), 0);
  for (const auto& set : cover) {
    for (const int c : set) {
      if (c < 0 || c >= dist.arity()) throw InputError("cover coordinate out of range");
      ++hits[c];
    }
  }
  for (int c = 0; c < dist.arity(); ++c) {
    if (hits[c] < r) {
      throw InputError("coordinate " + std::to_string(c) + " lies in " + std::to_string(hits[c]) +
                       " cover sets, fewer than r = " + std::to_string(r));
    }
  }
  EntropyReport rep;
  double sum = 0;
  for (const auto& set : cover) sum += projection_entropy(dist, set);
  const double full = projection_entropy(dist, range(0, dist.arity()));
  rep.add_inequality("r H(X) <= sum_A H(X_A)", r * full, sum);
  return rep;
}

std::vector<std::vector<int>> leave_one_out_cover(int k) {
  std::vector<std::vector<int>> out;
  for (int skip = 0; skip < k; ++skip) {
    std::vector<int> set;
    for (int c = 0; c < k; ++c) {
      if (c != skip) set.push_back(c);
    }
    out.push_back(std::move(set));
  }
  return out;
}

EntropyReport verify_path_decomposition(const Graph& host, PathOrCycle path) {
  if (path.kind != PathOrCycle::Kind::kPath || path.k < 4) {
    throw InputError("path decomposition needs P_k with k >= 4");
  }
  const int k = path.k;
  const CopyDistribution vertices(host, path.graph());
  if (vertices.size() == 0) throw InputError("host has no induced P_" + std::to_string(k));
  const CopyDistribution edges = vertices.edge_view(false);
  const auto n_copies = static_cast<double>(edges.size());
  const auto m = static_cast<std::int64_t>(host.size());
  const double log_m = std::log(static_cast<double>(m));
  const bool odd = k % 2 == 1;
  const int l = odd ? (k - 1) / 2 : k / 2;
  // Odd-indexed edges e_1, e_3, ... are coordinates 0, 2, ...; the chain
  // conditions each on the previous ones.
  const int odd_steps = odd ? l - 2 : l - 1;

  EntropyReport r;
  const double h_full = projection_entropy(edges, range(0, k - 1));
  r.add_identity("H(P) = log(2 Upsilon)", h_full, std::log(n_copies));
  const double h_e1 = projection_entropy(edges, {0});
  r.add_inequality("H(e1) <= log m", h_e1, log_m);

  // Per-copy counts.
  std::map<std::vector<int>, std::uint64_t> alpha_memo;
  auto alpha_of = [&](const std::vector<int>& x, int len) -> std::uint64_t {
    std::vector<int> key(x.begin(), x.begin() + 2 * len);
    if (len == 1) std::sort(key.begin(), key.end());
    auto it = alpha_memo.find(key);
    if (it != alpha_memo.end()) return it->second;
    std::uint64_t value;
    if (len == 1) {
      value = alpha_both_ends(host, Edge(x[0], x[1]));
    } else {
      OrientedEdgeTuple t;
      for (int i = 0; i < len; ++i) t.push_back({x[2 * i], x[2 * i + 1]});
      value = alpha_extensions(host, t, ExtensionMode::path_extend());
    }
    alpha_memo.emplace(key, value);
    return value;
  };
  std::map<std::vector<int>, Completions> completion_memo;
  auto completions_of = [&](const std::vector<int>& x) -> const Completions& {
    // Prefix x_1..x_{2l-2}; a lone first edge is known only as a set.
    std::vector<int> key(x.begin(), x.begin() + 2 * l - 2);
    std::vector<std::vector<int>> variants{key};
    if (l == 2) {
      std::sort(key.begin(), key.end());
      variants = {key, {key[1], key[0]}};
    }
    auto it = completion_memo.find(key);
    if (it == completion_memo.end()) {
      it = completion_memo.emplace(key, completions(host, k, variants)).first;
    }
    return it->second;
  };

  std::vector<double> avg_log_alpha(odd_steps + 1, 0.0);
  double avg_gamma0 = 0, avg_gamma1 = 0, avg_gamma2 = 0, avg_amgm = 0;
  std::int64_t worst_budget = 0;
  std::int64_t over_budget = 0;
  for (const auto& x : vertices.rows()) {
    std::int64_t budget = 0;
    double log_sum = 0;
    for (int i = 1; i <= odd_steps; ++i) {
      const std::uint64_t a = alpha_of(x, i);
      avg_log_alpha[i] += log_u(a);
      log_sum += 2 * log_u(a);
      budget += static_cast<std::int64_t>(a);
    }
    if (odd) {
      const Completions& c = completions_of(x);
      const Edge last(x[k - 2], x[k - 1]);
      const std::uint64_t g0 = c.finals.size();
      const std::uint64_t g1 = c.penultimate.at(last).size();
      const std::uint64_t g2 = c.last_odd.at(last).size();
      avg_gamma0 += log_u(g0);
      avg_gamma1 += log_u(g1);
      avg_gamma2 += log_u(g2);
      log_sum += 2 * log_u(g0) + log_u(g1) + log_u(g2);
      budget += static_cast<std::int64_t>(g0 + g1 + g2);
    } else {
      // Sum log a_i <= (l - 1) log(sum a_i / (l - 1)).
      log_sum = 0;
      for (int i = 1; i <= odd_steps; ++i) log_sum += log_u(alpha_of(x, i));
    }
    avg_amgm += log_sum;
    worst_budget = std::max(worst_budget, budget);
    over_budget += budget > m;
  }
  for (auto& v : avg_log_alpha) v /= n_copies;
  avg_gamma0 /= n_copies;
  avg_gamma1 /= n_copies;
  avg_gamma2 /= n_copies;
  avg_amgm /= n_copies;
  r.integer_checks.push_back({"max per-copy edge budget <= m", worst_budget, m});
  r.integer_checks.push_back({"copies over budget", over_budget, 0});

  // Chain rule over e_1, e_3, ... then the remaining coordinates.
  double chain = h_e1;
  std::vector<int> prefix{0};
  for (int i = 1; i <= odd_steps; ++i) {
    const int c = 2 * i;
    const double term = projection_entropy(edges, {c}, prefix);
    const std::string name = "H(e" + std::to_string(c + 1) + " | odd prefix)";
    r.add_inequality(name + " <= avg log alpha", term, avg_log_alpha[i]);
    chain += term;
    prefix.push_back(c);
  }
  const double m_d = static_cast<double>(m);
  if (!odd) {
    const std::vector<int> evens = range(1, k - 1, 2);
    const double rest = projection_entropy(edges, evens, prefix);
    r.add_identity("H(even edges | odd edges) = 0", rest, 0.0);
    r.add_identity("chain rule", chain + rest, h_full);
    r.add_inequality("avg sum log alpha <= (l-1) log(m/(l-1))", avg_amgm,
                     (l - 1) * std::log(m_d / (l - 1)));
    r.add_inequality("log(2 Upsilon) <= log m + sum avg log alpha", h_full,
                     log_m + std::accumulate(avg_log_alpha.begin(), avg_log_alpha.end(), 0.0));
    r.add_inequality("Upsilon <= m^l / (2 (l-1)^(l-1))", std::log(n_copies / 2),
                     l * log_m - std::log(2.0) - (l - 1) * std::log(l - 1.0));
    return r;
  }

  const std::vector<int> mid = range(1, 2 * l - 4, 2);  // e_2 .. e_{2l-4}
  const int c_last = 2 * l - 1;                         // e_{2l}
  const int c_pen = 2 * l - 3;                          // e_{2l-2}
  const int c_odd = 2 * l - 2;                          // e_{2l-1}
  const double h_mid = mid.empty() ? 0.0 : projection_entropy(edges, mid, prefix);
  r.add_identity("H(e_2..e_{2l-4} | odd prefix) = 0", h_mid, 0.0);
  const std::vector<int> known = concat(prefix, mid);
  const double h_last = projection_entropy(edges, {c_last}, known);
  r.add_identity("H(e_2l | odd prefix, middle) = H(e_2l | odd prefix)", h_last,
                 projection_entropy(edges, {c_last}, prefix));
  const std::vector<int> known_last = concat(known, {c_last});
  const double h_pair = projection_entropy(edges, {c_pen, c_odd}, known_last);
  const double h_pen = projection_entropy(edges, {c_pen}, concat(prefix, {c_last}));
  const double h_odd = projection_entropy(edges, {c_odd}, concat(prefix, {c_last}));
  r.add_identity("H(e_2l-2, e_2l-1 | .) = H(e_2l-2 | .)", h_pair, h_pen);
  r.add_identity("H(e_2l-2, e_2l-1 | .) = H(e_2l-1 | .)", h_pair, h_odd);
  r.add_identity("chain rule", chain + h_mid + h_last + h_pair, h_full);
  r.add_inequality("H(P) <= decomposition", h_full, chain + h_last + 0.5 * (h_pen + h_odd));
  r.add_inequality("H(e_2l | odd prefix) <= avg log gamma0", h_last, avg_gamma0);
  r.add_inequality("H(e_2l-2 | odd prefix, e_2l) <= avg log gamma1", h_pen, avg_gamma1);
  r.add_inequality("H(e_2l-1 | odd prefix, e_2l) <= avg log gamma2", h_odd, avg_gamma2);
  const double amgm_rhs = std::log(0.25) + 2 * l * std::log(m_d / l);
  r.add_inequality("avg AM-GM product <= log((m/l)^(2l) / 4)", avg_amgm, amgm_rhs);
  const double bound_terms = log_m + std::accumulate(avg_log_alpha.begin(), avg_log_alpha.end(), 0.0) +
                             avg_gamma0 + 0.5 * (avg_gamma1 + avg_gamma2);
  r.add_inequality("log(2 Upsilon) <= log m + averaged count terms", h_full, bound_terms);
  r.add_inequality("Upsilon <= m^(l+1) / (4 l^l)", std::log(n_copies / 2),
                   (l + 1) * log_m - std::log(4.0) - l * std::log(static_cast<double>(l)));
  return r;
}

EntropyReport verify_odd_cycle_reduction(const Graph& host, int k) {
  if (k < 5 || k % 2 == 0) throw InputError("odd cycle reduction needs C_k with odd k >= 5");
  const int l = (k - 1) / 2;
  const CopyDistribution cycles(host, cycle_graph(k));
  if (cycles.size() == 0) throw InputError("host has no induced C_" + std::to_string(k));
  const std::uint64_t paths = count_ordered_copies(host, path_graph(2 * l));
  const double log_paths = log_u(paths);
  EntropyReport r;
  const double h = projection_entropy(cycles, range(0, k));
  r.add_identity("H(C) = log(2k Gamma)", h, log_u(cycles.size()));
  const auto cover = leave_one_out_cover(k);
  double sum = 0;
  for (std::size_t i = 0; i < cover.size(); ++i) {
    const double hi = projection_entropy(cycles, cover[i]);
    r.add_inequality("H(C - v" + std::to_string(i + 1) + ") <= log(2 Upsilon)", hi, log_paths);
    sum += hi;
  }
  r.add_inequality("Shearer: H(C) <= sum / 2l", h, sum / (2.0 * l));
  r.add_inequality("log(2(2l+1) Gamma) <= (2l+1)/(2l) log(2 Upsilon)", log_u(cycles.size()),
                   (2.0 * l + 1) / (2.0 * l) * log_paths);
  return r;
}

EntropyReport verify_c4_decomposition(const Graph& host) {
  const CopyDistribution vertices(host, cycle_graph(4));
  if (vertices.size() == 0) throw InputError("host has no induced C_4");
  const CopyDistribution edges = vertices.edge_view(true);
  const double log_m = std::log(static_cast<double>(host.size()));
  EntropyReport r;
  const double h = projection_entropy(edges, {0, 1, 2, 3});
  const double h1 = projection_entropy(edges, {0});
  const double h3 = projection_entropy(edges, {2});
  const double h24 = projection_entropy(edges, {1, 3}, {0, 2});
  r.add_identity("H(C) = log(8 Gamma)", h, log_u(vertices.size()));
  r.add_inequality("H(C) <= H(e1) + H(e3) + H(e2,e4 | e1,e3)", h, h1 + h3 + h24);
  r.add_inequality("H(e1) <= log m", h1, log_m);
  r.add_inequality("H(e3) <= log m", h3, log_m);
  r.add_inequality("H(e2,e4 | e1,e3) <= log 2", h24, std::log(2.0));
  r.add_inequality("log(8 Gamma) <= 2 log m + log 2", h, 2 * log_m + std::log(2.0));
  return r;
}

}  // namespace inducibility
