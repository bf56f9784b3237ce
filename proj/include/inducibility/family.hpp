#pragma once

#include <string>
#include <string_view>

#include "inducibility/graph.hpp"

namespace inducibility {

// Pattern descriptor: P_k (k vertices), C_k, or an explicit graph.
class PatternFamily {
 public:
  enum class Kind { kPath, kCycle, kGraph };

  static PatternFamily path(int k);
  static PatternFamily cycle(int k);
  static PatternFamily of(const Graph& h);
  // "P5", "C6", otherwise graph6 text. Throws ParseError / RangeError.
  static PatternFamily parse(std::string_view text);

  Kind kind() const { return kind_; }
  int k() const { return k_; }
  Graph graph() const;
  // "P5", "C6", or the canonical graph6 label.
  std::string name() const;

 private:
  Kind kind_ = Kind::kGraph;
  int k_ = 0;
  Graph graph_;
};

}  // namespace inducibility
