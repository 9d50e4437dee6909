#pragma once

#include <cctype>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "widthlab/errors.hpp"
#include "widthlab/graph.hpp"

namespace widthlab {

enum class GraphFormat { edge_list, graph6 };

inline GraphFormat parse_format(const std::string& name) {
  if (name == "edge-list" || name == "edgelist") return GraphFormat::edge_list;
  if (name == "graph6" || name == "g6") return GraphFormat::graph6;
  throw std::invalid_argument("unknown graph format: " + name);
}

// Edge-list format: first line "n m", then m lines "u v" (0-indexed).
inline Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  auto fail = [&](const std::string& msg, int col) -> IoError {
    return IoError(msg, line_no, col);
  };

  long n = -1, m = -1;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    if (!(ls >> n >> m)) {
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      throw fail("expected header 'n m'", 1);
    }
    break;
  }
  if (n < 0 || m < 0) throw fail("missing or negative 'n m' header", 1);

  Graph g(static_cast<int>(n));
  long seen = 0;
  while (seen < m) {
    if (!std::getline(in, line))
      throw fail("expected " + std::to_string(m) + " edges, got " +
                     std::to_string(seen),
                 1);
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream ls(line);
    long u, v;
    if (!(ls >> u >> v)) throw fail("expected edge 'u v'", 1);
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw fail("edge endpoint out of range", 1);
    if (u == v) throw fail("self-loop not allowed", 1);
    g.add_edge(static_cast<int>(u), static_cast<int>(v));
    ++seen;
  }
  return g;
}

inline std::string write_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

// Standard dense graph6 encoding, short form only (n <= 62): one byte n+63,
// then the upper triangle in column order (0,1),(0,2),(1,2),(0,3),... packed
// big-endian into 6-bit chunks, each chunk + 63.
inline std::string write_graph6(const Graph& g) {
  int n = g.vertex_count();
  if (n > 62)
    throw std::invalid_argument(
        "graph6 output supports n <= 62; use the edge-list format");
  std::string out;
  out.push_back(static_cast<char>(n + 63));
  int bitpos = 0;
  int chunk = 0;
  for (int col = 1; col < n; ++col)
    for (int row = 0; row < col; ++row) {
      chunk = (chunk << 1) | (g.has_edge(row, col) ? 1 : 0);
      if (++bitpos == 6) {
        out.push_back(static_cast<char>(chunk + 63));
        bitpos = 0;
        chunk = 0;
      }
    }
  if (bitpos > 0) out.push_back(static_cast<char>((chunk << (6 - bitpos)) + 63));
  return out;
}

inline Graph parse_graph6(std::string_view text) {
  // Trim trailing newline/space.
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' ||
                           text.back() == ' '))
    text.remove_suffix(1);
  if (text.empty()) throw IoError("empty graph6 input", 1, 1);
  if (text.front() == '~')
    throw IoError("graph6 long form (n > 62) not supported", 1, 1);
  int n = static_cast<int>(text.front()) - 63;
  if (n < 0 || n > 62) throw IoError("invalid graph6 vertex count byte", 1, 1);
  Graph g(n);
  size_t needed = (static_cast<size_t>(n) * (n - 1) / 2 + 5) / 6;
  if (text.size() - 1 != needed)
    throw IoError("graph6 payload has wrong length", 1, 2);
  int byte_idx = 1;
  int bitpos = 0;
  int chunk = 0;
  for (int col = 1; col < n; ++col)
    for (int row = 0; row < col; ++row) {
      if (bitpos == 0) {
        char c = text[byte_idx];
        if (c < 63 || c > 126)
          throw IoError("invalid graph6 byte", 1, byte_idx + 1);
        chunk = c - 63;
        ++byte_idx;
        bitpos = 6;
      }
      --bitpos;
      if ((chunk >> bitpos) & 1) g.add_edge(row, col);
    }
  return g;
}

inline Graph parse_graph(std::string_view text, GraphFormat fmt) {
  return fmt == GraphFormat::edge_list ? parse_edge_list(text)
                                       : parse_graph6(text);
}

inline std::string write_graph(const Graph& g, GraphFormat fmt) {
  return fmt == GraphFormat::edge_list ? write_edge_list(g)
                                       : write_graph6(g) + "\n";
}

}  // namespace widthlab
