#include "inducibility/graph6.hpp"

#include <istream>

#include "inducibility/errors.hpp"

namespace inducibility {
namespace {

constexpr std::string_view kHeader = ">>graph6<<";
constexpr int kBias = 63;

int decode_char(std::string_view text, std::size_t pos) {
  if (pos >= text.size()) throw ParseError("unexpected end of graph6 text", pos);
  const int c = static_cast<unsigned char>(text[pos]);
  if (c < kBias || c > kBias + 63) {
    throw ParseError("character outside graph6 range 63..126", pos);
  }
  return c - kBias;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);

  std::size_t pos = 0;
  if (text.substr(0, kHeader.size()) == kHeader) pos = kHeader.size();
  if (pos >= text.size()) throw ParseError("empty graph6 text", pos);

  int n = 0;
  if (text[pos] == '~') {
    if (pos + 1 < text.size() && text[pos + 1] == '~') {
      throw ParseError("graph6 orders beyond 258047 are unsupported", pos);
    }
    for (int i = 1; i <= 3; ++i) n = (n << 6) | decode_char(text, pos + i);
    if (n < 63) throw ParseError("malformed graph6 size header", pos);
    if (n > Graph::kMaxVertices) {
      throw ParseError("graph6 order " + std::to_string(n) + " exceeds 64 vertices", pos);
    }
    pos += 4;
  } else {
    n = decode_char(text, pos);
    if (n == 63) throw ParseError("malformed graph6 size header", pos);
    pos += 1;
  }

  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t body = (bits + 5) / 6;
  if (text.size() < pos + body) throw ParseError("graph6 text truncated", text.size());
  if (text.size() > pos + body) throw ParseError("trailing bytes after graph6 body", pos + body);

  Graph g(n);
  std::size_t k = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++k) {
      const int chunk = decode_char(text, pos + k / 6);
      if ((chunk >> (5 - k % 6)) & 1) g.add_edge(u, v);
    }
  }
  if (bits % 6 != 0) {
    const int last = decode_char(text, pos + body - 1);
    if (last & ((1 << (6 - bits % 6)) - 1)) {
      throw ParseError("nonzero padding bits in graph6 body", pos + body - 1);
    }
  }
  return g;
}

std::string write_graph6(const Graph& g) {
  const int n = g.order();
  if (n > Graph::kMaxVertices) throw RangeError("graph6 writer supports at most 64 vertices");

  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
    }
  }

  int chunk = 0;
  int filled = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      chunk = (chunk << 1) | (g.adjacent(u, v) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(chunk + kBias));
        chunk = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((chunk << (6 - filled)) + kBias));
  return out;
}

std::vector<Graph> read_graph6_lines(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line == "\r") continue;
    out.push_back(parse_graph6(line));
  }
  return out;
}

}  // namespace inducibility
