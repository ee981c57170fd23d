#include "ocdc/graph6.hpp"

#include <vector>

#include "ocdc/error.hpp"

namespace ocdc {
namespace {

constexpr int kBias = 63;
constexpr std::string_view kHeader = ">>graph6<<";

int sextet(std::string_view text, std::size_t pos) {
  if (pos >= text.size()) throw ParseError("truncated graph6 payload", pos);
  const int c = static_cast<unsigned char>(text[pos]);
  if (c < kBias || c > 126) throw ParseError("byte outside graph6 range", pos);
  return c - kBias;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  std::size_t pos = 0;
  if (text.starts_with(kHeader)) pos = kHeader.size();
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (pos >= text.size()) throw ParseError("empty graph6 string", pos);

  long n = 0;
  if (text[pos] != '~') {
    n = sextet(text, pos++);
  } else {
    ++pos;
    if (pos < text.size() && text[pos] == '~') throw ParseError("8-byte graph6 size form is not supported", pos);
    for (int i = 0; i < 3; ++i) n = (n << 6) | sextet(text, pos++);
    if (n < 63) throw ParseError("non-canonical long size header", pos - 3);
  }

  const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (text.size() - pos < bytes) throw ParseError("truncated graph6 payload", text.size());
  if (text.size() - pos > bytes) throw ParseError("trailing bytes after graph6 payload", pos + bytes);

  std::vector<Edge> edges;
  std::size_t k = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++k) {
      const int byte = sextet(text, pos + k / 6);
      if ((byte >> (5 - static_cast<int>(k % 6))) & 1) edges.emplace_back(u, v);
    }
  }
  if (bytes > 0 && bits % 6 != 0) {
    const int last = sextet(text, pos + bytes - 1);
    const int pad = static_cast<int>(6 - bits % 6);
    if (last & ((1 << pad) - 1)) throw ParseError("non-zero padding bits", pos + bytes - 1);
  }
  return Graph(static_cast<int>(n), edges);
}

std::string emit_graph6(const Graph& g) {
  const long n = g.order();
  std::string out;
  if (n < 63) {
    out.push_back(static_cast<char>(n + kBias));
  } else if (n < 258048) {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
  } else {
    throw DomainError("graph6 emitter supports fewer than 258048 vertices");
  }
  int acc = 0;
  int filled = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      acc = (acc << 1) | (g.has_edge(u, v) ? 1 : 0);
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

}  // namespace ocdc
