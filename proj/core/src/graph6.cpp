#include "eternal/graph6.hpp"

#include "eternal/error.hpp"

namespace eternal {

namespace {

constexpr int kBias = 63;
constexpr std::string_view kHeader = ">>graph6<<";

int value_at(std::string_view text, std::size_t pos) {
  if (pos >= text.size()) throw ParseError("graph6 string is truncated", pos);
  const int c = static_cast<unsigned char>(text[pos]);
  if (c < 63 || c > 126) throw ParseError("graph6 byte outside 63..126", pos);
  return c - kBias;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  std::size_t pos = 0;
  if (text.starts_with(kHeader)) pos = kHeader.size();
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);

  long n = 0;
  if (pos < text.size() && text[pos] == 126) {
    if (pos + 1 < text.size() && text[pos + 1] == 126) {
      throw ParseError("graph6 orders above 258047 are not supported", pos);
    }
    for (int i = 1; i <= 3; ++i) n = (n << 6) | value_at(text, pos + i);
    pos += 4;
  } else {
    n = value_at(text, pos);
    pos += 1;
  }
  if (n > kMaxVertices) throw ParseError("graph has " + std::to_string(n) + " vertices; at most 63 supported", pos);

  const std::size_t pairs = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t expected = pos + (pairs + 5) / 6;
  if (text.size() != expected) {
    throw ParseError("graph6 length " + std::to_string(text.size()) + " does not match order " +
                         std::to_string(n) + " (expected " + std::to_string(expected) + ")",
                     std::min(text.size(), expected));
  }

  std::vector<VertexSet> adj(static_cast<std::size_t>(n));
  std::size_t bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      const int chunk = value_at(text, pos + bit / 6);
      if ((chunk >> (5 - bit % 6)) & 1) {
        adj[i].insert(j);
        adj[j].insert(i);
      }
    }
  }
  // Padding bits must be zero.
  if (bit % 6 != 0) {
    const int chunk = value_at(text, pos + bit / 6);
    if (chunk & ((1 << (6 - bit % 6)) - 1)) throw ParseError("nonzero graph6 padding bits", pos + bit / 6);
  }
  return Graph::from_adjacency(std::move(adj));
}

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
  }
  int chunk = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      chunk = (chunk << 1) | (g.adjacent(i, j) ? 1 : 0);
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

}  // namespace eternal
