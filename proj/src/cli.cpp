#include "inducibility/cli.hpp"

#include <chrono>
#include <fstream>
#include <numeric>
#include <optional>

#include "CLI11.hpp"
#include "inducibility/bounds.hpp"
#include "inducibility/c6_hypergraph.hpp"
#include "inducibility/canonical.hpp"
#include "inducibility/claim_ledger.hpp"
#include "inducibility/constructions.hpp"
#include "inducibility/entropy.hpp"
#include "inducibility/errors.hpp"
#include "inducibility/exact_search.hpp"
#include "inducibility/family.hpp"
#include "inducibility/frac_independence.hpp"
#include "inducibility/graph6.hpp"
#include "inducibility/induced_count.hpp"
#include "inducibility/report_json.hpp"
#include "inducibility/result_cache.hpp"
#include "inducibility/version.hpp"

namespace inducibility {
namespace {

struct Options {
  std::string cache_dir;
  int shards = 1;
  bool table = false;
  bool json = false;
  std::size_t max_certificates = 1000;
  bool timing = false;
  bool no_cache = false;

  std::string graph;
  std::string host;
  std::string pattern;
  std::string family;
  std::int64_t m = -1;
  std::string verify;
  std::string csv;
};

struct Outcome {
  Json inputs;
  Json outputs;
  bool verified = true;
};

Json entropy_json(const EntropyReport& r) {
  Json terms = Json::array();
  for (const EntropyTerm& t : r.terms) {
    terms.push_back({{"name", t.name},
                     {"kind", t.kind == EntropyTerm::Kind::kIdentity ? "identity" : "inequality"},
                     {"lhs", float_json(t.lhs)},
                     {"rhs", float_json(t.rhs)},
                     {"slack", float_json(t.slack())},
                     {"holds", t.holds()}});
  }
  Json checks = Json::array();
  for (const IntegerCheck& c : r.integer_checks) {
    checks.push_back({{"name", c.name}, {"lhs", c.lhs}, {"rhs", c.rhs}, {"holds", c.holds()}});
  }
  return {{"terms", terms}, {"integer_checks", checks}, {"pass", r.pass()}};
}

Json ledger_json(const ClaimLedger& l) {
  Json s_plus = Json::array();
  Json s_minus = Json::array();
  for (const auto& s : l.s_plus) s_plus.push_back(s.to_string());
  for (const auto& s : l.s_minus) s_minus.push_back(s.to_string());
  return {{"cycle", l.cycle},
          {"l", l.l},
          {"m", l.m},
          {"s_plus", s_plus},
          {"s_minus", s_minus},
          {"total_plus", l.total_plus.to_string()},
          {"total_minus", l.total_minus.to_string()},
          {"budget_ml", l.budget().to_string()},
          {"within_ml", l.within_ml()},
          {"within_l_plus_1_m", l.within_fallback()},
          {"exceeds_3m", l.exceeds_3m()},
          {"rows_reconstruct", l.rows_reconstruct},
          {"cap_violations", l.cap_violations},
          {"row_total_violations", l.row_total_violations}};
}

Json c6_json(const C6HypergraphReport& r) {
  Json triples = Json::array();
  for (const auto& t : r.capable_triples) {
    Json tj = Json::array();
    for (const Edge& e : t) tj.push_back({e.u, e.v});
    triples.push_back(tj);
  }
  return {{"m", r.m},
          {"gamma", r.gamma},
          {"hyperedges", r.hyperedges()},
          {"capable_triples", triples},
          {"codegree_sum", r.codegree_sum},
          {"hyperedge_codegree_sum", r.hyperedge_codegree_sum},
          {"codegree_square_sum", r.codegree_square_sum},
          {"two_section_edges", r.two_section_edges},
          {"hyperedges_equal_two_gamma", r.hyperedges_equal_two_gamma()},
          {"codegree_sum_within_m_gamma", r.codegree_sum_within_m_gamma()},
          {"cauchy_schwarz", r.cauchy_schwarz()},
          {"two_section_within_half_m_squared", r.two_section_within_half_m_squared()},
          {"gamma_within_bound", r.gamma_within_bound()},
          {"pass", r.pass()}};
}

Graph pattern_graph(const std::string& text) { return PatternFamily::parse(text).graph(); }

int checked_m(std::int64_t m) {
  if (m < 0 || m > 1'000'000'000) throw InputError("-m must be in [0, 1e9]");
  return static_cast<int>(m);
}

SearchOptions search_options(const Options& o) {
  SearchOptions s;
  s.shards = o.shards;
  s.max_certificates = o.max_certificates;
  return s;
}

// Loads from or fills the cache; trims certificates to the requested cap.
SearchResult cached_rho(const Graph& h, int m, const Options& o) {
  const std::string label = canonical_label(h);
  std::optional<ResultCache> cache;
  if (!o.no_cache) cache.emplace(o.cache_dir.empty() ? ResultCache::default_dir() : std::filesystem::path(o.cache_dir));
  if (cache) {
    if (auto hit = cache->load(label, m)) {
      const bool enough = !hit->truncated || hit->extremal.size() >= o.max_certificates;
      if (enough) {
        if (hit->extremal.size() > o.max_certificates) {
          hit->extremal.resize(o.max_certificates);
          hit->truncated = true;
        }
        return *hit;
      }
    }
  }
  SearchResult r = rho_exact(h, m, search_options(o));
  if (cache) cache->store(r);
  return r;
}

Outcome run_alphaf(const Options& o) {
  const Graph h = parse_graph6(o.graph);
  const OptimalWeighting w = optimal_weighting(h);
  return {{{"graph", write_graph6(h)}},
          {{"alpha_f", alpha_f(h).to_string()}, {"weighting", to_json(w, h.order())}}};
}

Outcome run_count(const Options& o) {
  const Graph g = parse_graph6(o.host);
  const Graph h = pattern_graph(o.pattern);
  const CountSummary s = count_induced(g, h);
  return {{{"host", write_graph6(g)}, {"pattern", canonical_label(h)}},
          {{"ordered", s.ordered}, {"unordered", s.unordered}, {"aut", s.aut}}};
}

Outcome run_rho(const Options& o) {
  const Graph h = pattern_graph(o.pattern);
  const int m = checked_m(o.m);
  const SearchResult r = cached_rho(h, m, o);
  return {{{"pattern", r.pattern}, {"m", m}, {"max_certificates", o.max_certificates}},
          {{"rho", r.rho},
           {"extremal", r.extremal},
           {"truncated", r.truncated},
           {"classes", r.classes_scanned}}};
}

Outcome run_bound(const Options& o) {
  const PatternFamily f = PatternFamily::parse(o.family);
  const BoundReport b = bound_eval(f, o.m);
  Json rows = Json::array();
  for (const BoundValue& v : b.values) rows.push_back(to_json(v));
  return {{{"family", f.name()}, {"m", o.m}},
          {{"bounds", rows},
           {"effective_upper", to_json(effective_upper(b.values))},
           {"construction", to_json(b.construction)}}};
}

Outcome run_construct(const Options& o) {
  const PatternFamily f = PatternFamily::parse(o.family);
  const Construction c = optimize_part_sizes(f, o.m);
  Json outputs{{"construction", to_json(c)}};
  if (f.kind() == PatternFamily::Kind::kGraph) {
    const Theorem1Construction t = theorem1_lower_construction(f.graph(), o.m);
    Json tj = to_json(t.spec);
    if (t.warning) tj["warning"] = *t.warning;
    tj["edges"] = t.spec.realized_edges();
    tj["count"] = BlowupCounter(f.graph(), t.spec.base).count(t.spec.sizes);
    outputs["weighted_construction"] = tj;
  }
  return {{{"family", f.name()}, {"m", o.m}}, outputs};
}

std::vector<std::vector<int>> unordered_cycles(const Graph& g, int k) {
  std::vector<std::vector<int>> out;
  for (const auto& c : ordered_copies(g, cycle_graph(k))) {
    if (c[0] == *std::min_element(c.begin(), c.end()) && c[1] < c[k - 1]) out.push_back(c);
  }
  return out;
}

Outcome run_entropy(const Options& o) {
  const Graph g = parse_graph6(o.host);
  const Graph h = pattern_graph(o.pattern);
  const PatternFamily f = PatternFamily::parse(o.pattern);
  Outcome out;
  out.inputs = {{"host", write_graph6(g)},
                {"pattern", canonical_label(h)},
                {"verify", o.verify.empty() ? "identity" : o.verify}};
  auto from_report = [&](const EntropyReport& r) {
    out.outputs = entropy_json(r);
    out.verified = r.pass();
  };
  const bool is_path = f.kind() == PatternFamily::Kind::kPath;
  const bool is_cycle = f.kind() == PatternFamily::Kind::kCycle;

  if (o.verify.empty() || o.verify == "chain") {
    const CopyDistribution dist(g, h);
    if (dist.size() == 0) throw InputError("host has no induced copy of the pattern");
    EntropyReport r;
    const double full = projection_entropy(dist, [&] {
      std::vector<int> all(h.order());
      std::iota(all.begin(), all.end(), 0);
      return all;
    }());
    const CountSummary s = count_induced(g, h);
    r.add_identity("H(X) = log(|Aut(H)| c(G,H))", full,
                   std::log(static_cast<double>(s.aut) * static_cast<double>(s.unordered)));
    if (o.verify == "chain") {
      std::vector<int> order(h.order());
      std::iota(order.begin(), order.end(), 0);
      r.append(verify_chain(dist, order));
      r.append(verify_random_splits(dist, 100, 1));
    }
    from_report(r);
  } else if (o.verify == "shearer") {
    const CopyDistribution dist(g, h);
    if (dist.size() == 0) throw InputError("host has no induced copy of the pattern");
    EntropyReport r = verify_shearer(dist, leave_one_out_cover(h.order()), h.order() - 1);
    if (is_cycle && f.k() % 2 == 1 && f.k() >= 5) r.append(verify_odd_cycle_reduction(g, f.k()));
    if (is_cycle && f.k() == 4) r.append(verify_c4_decomposition(g));
    from_report(r);
  } else if (o.verify == "path") {
    if (!is_path) throw InputError("--verify path needs a P_k pattern");
    from_report(verify_path_decomposition(g, PathOrCycle::path(f.k())));
  } else if (o.verify == "claim1") {
    if (!is_cycle || f.k() % 2 != 0 || f.k() < 6) {
      throw InputError("--verify claim1 needs an even cycle pattern C_k, k >= 6");
    }
    Json ledgers = Json::array();
    bool ok = true;
    std::ofstream csv;
    if (!o.csv.empty()) {
      csv.open(o.csv);
      if (!csv) throw InputError("cannot open " + o.csv);
    }
    for (const auto& c : unordered_cycles(g, f.k())) {
      const ClaimLedger l = claim1_check(g, c);
      ledgers.push_back(ledger_json(l));
      ok &= l.rows_reconstruct && l.within_fallback() && (l.l < 4 || l.within_ml());
      if (csv.is_open()) write_ledger_csv(l, csv);
    }
    out.outputs = {{"ledgers", ledgers}, {"pass", ok}};
    out.verified = ok;
  } else if (o.verify == "c6") {
    const C6HypergraphReport r = c6_hypergraph_check(g);
    out.outputs = c6_json(r);
    out.verified = r.pass();
  } else {
    throw InputError("unknown --verify mode " + o.verify);
  }
  return out;
}

Outcome run_sandwich(const Options& o) {
  const PatternFamily f = PatternFamily::parse(o.family);
  const int m = checked_m(o.m);
  const SearchResult search = cached_rho(f.graph(), m, o);
  const SandwichReport r = verify_sandwich(f, search);
  return {{{"family", f.name()}, {"m", m}}, to_json(r), r.pass()};
}

void print_table(const Json& report, std::ostream& out) {
  out << "command  " << report["command"].get<std::string>() << '\n';
  for (const auto& [k, v] : report["inputs"].items()) out << "input    " << k << " = " << v.dump() << '\n';
  for (const auto& [k, v] : report["outputs"].items()) {
    if (v.is_array() && !v.empty() && v.front().is_object()) {
      out << "output   " << k << ":\n";
      for (const auto& row : v) out << "           " << row.dump() << '\n';
    } else {
      out << "output   " << k << " = " << v.dump() << '\n';
    }
  }
  out << "version  " << report["version"].get<std::string>() << '\n';
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Induced-copy counting, exact inducibility search and entropy checks",
               "inducibility"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand
  app.add_option("--cache-dir", o.cache_dir, "result cache directory (default $INDUCIBILITY_CACHE_DIR)");
  app.add_option("--shards", o.shards, "parallel shards for exact search")->check(CLI::Range(1, 256));
  auto* json_flag = app.add_flag("--json", o.json, "JSON report (default)");
  app.add_flag("--table", o.table, "human-readable table")->excludes(json_flag);
  app.add_option("--max-certificates", o.max_certificates, "certificate cap per search");
  app.add_flag("--timing", o.timing, "print wall time to stderr");
  app.add_flag("--no-cache", o.no_cache, "neither read nor write the result cache");

  auto* alphaf = app.add_subcommand("alphaf", "fractional independence number and witness");
  alphaf->add_option("graph", o.graph, "graph6")->required();
  auto* count = app.add_subcommand("count", "induced copies of a pattern in a host");
  count->add_option("--host", o.host, "graph6")->required();
  count->add_option("--pattern", o.pattern, "graph6, Pk or Ck")->required();
  auto* rho = app.add_subcommand("rho", "exact rho(H, m)");
  rho->add_option("--pattern", o.pattern, "graph6, Pk or Ck")->required();
  rho->add_option("-m", o.m, "edge count")->required();
  auto* bound = app.add_subcommand("bound", "closed-form bounds");
  bound->add_option("--family", o.family, "Pk, Ck or graph6")->required();
  bound->add_option("-m", o.m, "edge budget")->required();
  auto* construct = app.add_subcommand("construct", "best blow-up construction");
  construct->add_option("--family", o.family, "Pk, Ck or graph6")->required();
  construct->add_option("-m", o.m, "edge budget")->required();
  auto* entropy = app.add_subcommand("entropy", "entropy identities and inequality chains");
  entropy->add_option("--host", o.host, "graph6")->required();
  entropy->add_option("--pattern", o.pattern, "graph6, Pk or Ck")->required();
  entropy->add_option("--verify", o.verify, "chain|shearer|path|claim1|c6")
      ->check(CLI::IsMember({"chain", "shearer", "path", "claim1", "c6"}));
  entropy->add_option("--csv", o.csv, "write claim ledgers as CSV");
  auto* sandwich = app.add_subcommand("sandwich", "construction <= rho <= upper bound");
  sandwich->add_option("--family", o.family, "Pk, Ck or graph6")->required();
  sandwich->add_option("-m", o.m, "edge count")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  const auto start = std::chrono::steady_clock::now();
  const std::string command = app.get_subcommands().front()->get_name();
  Outcome outcome;
  try {
    if (command == "alphaf") outcome = run_alphaf(o);
    if (command == "count") outcome = run_count(o);
    if (command == "rho") outcome = run_rho(o);
    if (command == "bound") outcome = run_bound(o);
    if (command == "construct") outcome = run_construct(o);
    if (command == "entropy") outcome = run_entropy(o);
    if (command == "sandwich") outcome = run_sandwich(o);
  } catch (const ResourceCeiling& e) {
    err << "resource ceiling: " << e.what() << '\n';
    return kExitResourceCeiling;
  } catch (const VerificationFailure& e) {
    err << "verification failure: " << e.what() << '\n';
    return kExitVerificationFailure;
  } catch (const InvariantViolation& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitVerificationFailure;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  const Json report{{"command", command},
                    {"inputs", outcome.inputs},
                    {"outputs", outcome.outputs},
                    {"version", kVersion}};
  if (o.table) {
    print_table(report, out);
  } else {
    out << report.dump(2) << '\n';
  }
  if (o.timing) {
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    err << Json{{"wall_seconds", float_json(seconds)}}.dump() << '\n';
  }
  if (!outcome.verified) {
    err << "verification failure: at least one checked inequality does not hold\n";
    return kExitVerificationFailure;
  }
  return kExitOk;
}

}  // namespace inducibility
