#include "cdc/graph.hpp"

namespace cdc {

namespace {

constexpr int kBias = 63;
constexpr int kMaxChar = 126;

int char_value(std::string_view text, std::size_t pos) {
  if (pos >= text.size()) throw ParseError("unexpected end of graph6 data", pos);
  const int c = static_cast<unsigned char>(text[pos]);
  if (c < kBias || c > kMaxChar) throw ParseError("character out of graph6 range", pos);
  return c - kBias;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  if (text.empty()) throw ParseError("empty graph6 string", 0);

  std::size_t pos = 0;
  long long n = 0;
  if (text[0] == '~') {
    if (text.size() > 1 && text[1] == '~') {
      pos = 2;
      for (int k = 0; k < 6; ++k) n = (n << 6) | char_value(text, pos++);
    } else {
      pos = 1;
      for (int k = 0; k < 3; ++k) n = (n << 6) | char_value(text, pos++);
    }
  } else {
    n = char_value(text, pos++);
  }
  if (n > 100000) throw ParseError("graph6 vertex count too large for this tool", 0);

  const long long bits = n * (n - 1) / 2;
  const std::size_t body = static_cast<std::size_t>((bits + 5) / 6);
  if (text.size() < pos + body) throw ParseError("truncated graph6 adjacency data", text.size());

  std::vector<Edge> edges;
  long long k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      const std::size_t at = pos + static_cast<std::size_t>(k / 6);
      const int value = char_value(text, at);
      if (value & (1 << (5 - k % 6))) edges.emplace_back(i, j);
    }
  }
  if (bits % 6 != 0) {
    const std::size_t at = pos + body - 1;
    const int pad_mask = (1 << (6 - bits % 6)) - 1;
    if (char_value(text, at) & pad_mask) throw ParseError("nonzero graph6 padding bits", at);
  }
  if (text.size() > pos + body) throw ParseError("trailing garbage after graph6 data", pos + body);
  return Graph(static_cast<int>(n), std::move(edges));
}

std::string to_graph6(const Graph& g) {
  const long long n = g.vertex_count();
  if (n > 68719476735LL) throw PreconditionError("vertex count exceeds graph6 range");
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else if (n <= 258047) {
    out.push_back('~');
    for (int s = 12; s >= 0; s -= 6) out.push_back(static_cast<char>(((n >> s) & 63) + kBias));
  } else {
    out += "~~";
    for (int s = 30; s >= 0; s -= 6) out.push_back(static_cast<char>(((n >> s) & 63) + kBias));
  }
  int acc = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  return out;
}

}  // namespace cdc
