#include "inducibility/family.hpp"

#include <charconv>

#include "inducibility/canonical.hpp"
#include "inducibility/errors.hpp"
#include "inducibility/graph6.hpp"

namespace inducibility {

PatternFamily PatternFamily::path(int k) {
  if (k < 1 || k > Graph::kMaxVertices) throw RangeError("path length outside [1, 64]");
  PatternFamily f;
  f.kind_ = Kind::kPath;
  f.k_ = k;
  f.graph_ = path_graph(k);
  return f;
}

PatternFamily PatternFamily::cycle(int k) {
  if (k < 3 || k > Graph::kMaxVertices) throw RangeError("cycle length outside [3, 64]");
  PatternFamily f;
  f.kind_ = Kind::kCycle;
  f.k_ = k;
  f.graph_ = cycle_graph(k);
  return f;
}

PatternFamily PatternFamily::of(const Graph& h) {
  PatternFamily f;
  f.kind_ = Kind::kGraph;
  f.k_ = h.order();
  f.graph_ = h;
  return f;
}

PatternFamily PatternFamily::parse(std::string_view text) {
  if (text.size() >= 2 && (text[0] == 'P' || text[0] == 'C')) {
    bool digits = true;
    for (std::size_t i = 1; i < text.size(); ++i) digits &= text[i] >= '0' && text[i] <= '9';
    if (digits) {
      int k = 0;
      const auto [ptr, ec] = std::from_chars(text.data() + 1, text.data() + text.size(), k);
      if (ec != std::errc() || ptr != text.data() + text.size()) {
        throw RangeError("family size out of range: " + std::string(text));
      }
      return text[0] == 'P' ? path(k) : cycle(k);
    }
  }
  return of(parse_graph6(text));
}

Graph PatternFamily::graph() const { return graph_; }

std::string PatternFamily::name() const {
  switch (kind_) {
    case Kind::kPath:
      return "P" + std::to_string(k_);
    case Kind::kCycle:
      return "C" + std::to_string(k_);
    case Kind::kGraph:
      break;
  }
  return canonical_label(graph_);
}

}  // namespace inducibility
