#ifndef SOMBOR_EDGE_LIST_HPP
#define SOMBOR_EDGE_LIST_HPP

// Edge-list text format:
//
//   n
//   u v        (n-1 lines, 0 <= u < v < n)
//
// LF-terminated. Streams of several trees separate records by one blank line.

#include <charconv>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "sombor/errors.hpp"
#include "sombor/tree.hpp"

namespace sombor {

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r'; };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

// Whitespace-separated unsigned integers; anything else is a ParseError.
inline std::vector<std::uint64_t> parse_integers(std::string_view line, std::size_t line_no) {
  std::vector<std::uint64_t> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
      ++i;
      continue;
    }
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), value);
    const std::size_t consumed = static_cast<std::size_t>(ptr - (line.data() + i));
    if (ec != std::errc{} || consumed == 0) {
      throw ParseError(line_no, "expected a non-negative integer, got '" + std::string(line) + "'");
    }
    i += consumed;
    if (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') {
      throw ParseError(line_no, "expected a non-negative integer, got '" + std::string(line) + "'");
    }
    out.push_back(value);
  }
  return out;
}

// Parses one record given as (line number, text) pairs with no blank lines.
inline Tree parse_record(const std::vector<std::pair<std::size_t, std::string>>& lines) {
  const auto header = parse_integers(lines.front().second, lines.front().first);
  if (header.size() != 1) throw ParseError(lines.front().first, "expected the vertex count n");
  const std::uint64_t n = header.front();
  if (n == 0) throw ParseError(lines.front().first, "vertex count must be positive");
  if (n > (std::uint64_t{1} << 24)) throw ParseError(lines.front().first, "vertex count too large");

  std::vector<Edge> edges;
  std::set<std::pair<std::uint64_t, std::uint64_t>> seen;
  DisjointSets components(n);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& [line_no, text] = lines[i];
    if (edges.size() == n - 1) throw ParseError(line_no, "more than n-1 edges");
    const auto fields = parse_integers(text, line_no);
    if (fields.size() != 2) throw ParseError(line_no, "expected two vertex ids 'u v'");
    const std::uint64_t u = fields[0];
    const std::uint64_t v = fields[1];
    if (u == v) throw ParseError(line_no, "self-loop at vertex " + std::to_string(u));
    if (u >= n || v >= n) {
      throw ParseError(line_no, "vertex id out of range [0, " + std::to_string(n) + ")");
    }
    if (u > v) throw ParseError(line_no, "edge endpoints must satisfy u < v");
    if (!seen.emplace(u, v).second) throw ParseError(line_no, "duplicate edge");
    if (!components.unite(u, v)) throw ParseError(line_no, "edge closes a cycle");
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
  }
  if (edges.size() != n - 1) {
    throw ParseError(lines.back().first + 1, "expected " + std::to_string(n - 1) +
                                                 " edges, found " + std::to_string(edges.size()) +
                                                 " (graph is disconnected)");
  }
  return Tree::from_edges(n, edges);
}

}  // namespace detail

/// Reads every blank-line-separated record from the stream.
inline std::vector<Tree> read_edge_lists(std::istream& in) {
  std::vector<Tree> trees;
  std::vector<std::pair<std::size_t, std::string>> record;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (detail::trim(line).empty()) {
      if (!record.empty()) trees.push_back(detail::parse_record(record));
      record.clear();
      continue;
    }
    record.emplace_back(line_no, line);
  }
  if (!record.empty()) trees.push_back(detail::parse_record(record));
  return trees;
}

/// Reads exactly one tree.
inline Tree read_edge_list(std::istream& in) {
  auto trees = read_edge_lists(in);
  if (trees.empty()) throw ParseError(1, "empty input");
  if (trees.size() > 1) throw ParseError(1, "expected a single tree, found several records");
  return std::move(trees.front());
}

inline Tree parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_edge_list(in);
}

inline void write_edge_list(std::ostream& out, const Tree& t) {
  out << t.order() << '\n';
  for (const Edge& e : t.edges()) out << e.u << ' ' << e.v << '\n';
}

inline std::string to_edge_list(const Tree& t) {
  std::ostringstream out;
  write_edge_list(out, t);
  return out.str();
}

}  // namespace sombor

#endif  // SOMBOR_EDGE_LIST_HPP
