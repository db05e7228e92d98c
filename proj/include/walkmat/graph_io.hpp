#ifndef WALKMAT_GRAPH_IO_HPP
#define WALKMAT_GRAPH_IO_HPP

#include <cstddef>
#include <cstdint>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "walkmat/error.hpp"
#include "walkmat/graph.hpp"

namespace walkmat {

// graph6: size header N(n) followed by the upper triangle x(0,1), x(0,2), x(1,2), x(0,3), ...
// packed big-endian into 6-bit groups, each offset by 63.

inline std::string emit_graph6(const Graph& g) {
  const std::size_t n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
  unsigned chunk = 0;
  int filled = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      chunk = (chunk << 1) | (g.has_edge(i, j) ? 1U : 0U);
      if (++filled == 6) {
        out.push_back(static_cast<char>(chunk + 63));
        chunk = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((chunk << (6 - filled)) + 63));
  return out;
}

inline Graph parse_graph6(std::string_view text) {
  constexpr std::string_view kHeader = ">>graph6<<";
  if (text.substr(0, kHeader.size()) == kHeader) text.remove_prefix(kHeader.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw Error(Errc::MalformedHeader, "empty graph6 string");

  auto value = [&](std::size_t pos, Errc code) -> unsigned {
    if (pos >= text.size()) throw Error(code, "graph6 string ends early");
    const auto c = static_cast<unsigned char>(text[pos]);
    if (c < 63 || c > 126) {
      throw Error(code == Errc::MalformedHeader ? code : Errc::MalformedInput,
                  "byte " + std::to_string(c) + " outside 63..126");
    }
    return c - 63U;
  };

  std::size_t n = 0;
  std::size_t pos = 0;
  if (value(0, Errc::MalformedHeader) < 63) {
    n = value(0, Errc::MalformedHeader);
    pos = 1;
  } else if (value(1, Errc::MalformedHeader) < 63) {
    for (std::size_t k = 1; k <= 3; ++k) n = (n << 6) | value(k, Errc::MalformedHeader);
    pos = 4;
  } else {
    for (std::size_t k = 2; k <= 7; ++k) n = (n << 6) | value(k, Errc::MalformedHeader);
    pos = 8;
  }

  const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (text.size() < pos + bytes) throw Error(Errc::TruncatedBody, "expected " + std::to_string(bytes) + " body bytes");
  if (text.size() > pos + bytes) throw Error(Errc::TrailingGarbage, "extra bytes after body");

  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::size_t k = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i, ++k) {
      const unsigned chunk = value(pos + k / 6, Errc::TruncatedBody);
      if ((chunk >> (5 - k % 6)) & 1U) edges.emplace_back(i + 1, j + 1);
    }
  }
  if (k % 6 != 0) {
    const unsigned last = value(pos + bytes - 1, Errc::TruncatedBody);
    if ((last & ((1U << (6 - k % 6)) - 1U)) != 0) throw Error(Errc::TrailingGarbage, "nonzero padding bits");
  }
  return Graph::from_edge_list(n, edges);
}

/// Plain edge list: header "n m", then m lines "i j" with one-based endpoints. '#' starts a comment.
inline Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::vector<long long> tokens;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) {
      try {
        std::size_t used = 0;
        const long long v = std::stoll(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        tokens.push_back(v);
      } catch (const std::exception&) {
        throw Error(Errc::MalformedInput, "edge list token '" + tok + "'");
      }
    }
  }
  if (tokens.size() < 2) throw Error(Errc::MalformedHeader, "edge list needs an 'n m' header");
  if (tokens[0] < 0 || tokens[1] < 0) throw Error(Errc::MalformedHeader, "negative n or m");
  const auto n = static_cast<std::size_t>(tokens[0]);
  const auto m = static_cast<std::size_t>(tokens[1]);
  if (tokens.size() < 2 + 2 * m) throw Error(Errc::TruncatedBody, "fewer than m edges");
  if (tokens.size() > 2 + 2 * m) throw Error(Errc::TrailingGarbage, "more than m edges");
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t k = 0; k < m; ++k) {
    const long long u = tokens[2 + 2 * k];
    const long long v = tokens[3 + 2 * k];
    if (u < 1 || v < 1) throw Error(Errc::IndexOutOfRange, "edge endpoint below 1");
    edges.emplace_back(static_cast<std::size_t>(u), static_cast<std::size_t>(v));
  }
  return Graph::from_edge_list(n, edges);
}

inline std::string emit_edge_list(const Graph& g) {
  std::ostringstream os;
  const auto edges = g.edges();
  os << g.order() << ' ' << edges.size() << '\n';
  for (const auto& [u, v] : edges) os << u << ' ' << v << '\n';
  return os.str();
}

/// n lines of n whitespace-separated 0/1 tokens.
inline Graph parse_adjacency_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::vector<std::vector<long>> rows;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<long> row;
    std::string tok;
    while (ls >> tok) {
      if (tok != "0" && tok != "1") throw Error(Errc::MalformedInput, "adjacency token '" + tok + "'");
      row.push_back(tok == "1" ? 1 : 0);
    }
    if (!row.empty()) rows.push_back(std::move(row));
  }
  for (const auto& r : rows)
    if (r.size() != rows.size()) throw Error(Errc::MalformedInput, "adjacency matrix is not square");
  return Graph::from_adjacency(ExactMatrix::from_rows(rows));
}

inline std::string emit_adjacency_text(const Graph& g) {
  std::ostringstream os;
  for (std::size_t i = 0; i < g.order(); ++i) {
    for (std::size_t j = 0; j < g.order(); ++j) os << (j ? " " : "") << (g.has_edge(i, j) ? 1 : 0);
    os << '\n';
  }
  return os.str();
}

enum class GraphFormat { Auto, Graph6, EdgeList, Matrix };

/// Guesses the format from content: a single token is graph6, a square 0/1 grid is a matrix,
/// anything else is an edge list.
inline GraphFormat detect_graph_format(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::vector<std::vector<std::string>> rows;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> row;
    std::string tok;
    while (ls >> tok) row.push_back(tok);
    if (!row.empty()) rows.push_back(std::move(row));
  }
  if (rows.size() == 1 && rows[0].size() == 1) {
    const std::string& t = rows[0][0];
    const bool digits = t.find_first_not_of("0123456789") == std::string::npos;
    if (!digits || t.size() > 1) return GraphFormat::Graph6;
  }
  bool square01 = !rows.empty();
  for (const auto& r : rows) {
    if (r.size() != rows.size()) square01 = false;
    for (const auto& t : r)
      if (t != "0" && t != "1") square01 = false;
  }
  return square01 ? GraphFormat::Matrix : GraphFormat::EdgeList;
}

inline Graph parse_graph(std::string_view text, GraphFormat fmt = GraphFormat::Auto) {
  if (fmt == GraphFormat::Auto) fmt = detect_graph_format(text);
  switch (fmt) {
    case GraphFormat::Graph6: {
      std::string_view t = text;
      while (!t.empty() && (t.front() == ' ' || t.front() == '\n' || t.front() == '\r' || t.front() == '\t'))
        t.remove_prefix(1);
      while (!t.empty() && (t.back() == ' ' || t.back() == '\n' || t.back() == '\r' || t.back() == '\t'))
        t.remove_suffix(1);
      return parse_graph6(t);
    }
    case GraphFormat::EdgeList: return parse_edge_list(text);
    case GraphFormat::Matrix: return parse_adjacency_text(text);
    case GraphFormat::Auto: break;
  }
  throw Error(Errc::MalformedInput, "unknown graph format");
}

}  // namespace walkmat

#endif  // WALKMAT_GRAPH_IO_HPP
