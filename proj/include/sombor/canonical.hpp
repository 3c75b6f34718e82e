#ifndef SOMBOR_CANONICAL_HPP
#define SOMBOR_CANONICAL_HPP

#include <algorithm>
#include <compare>
#include <string>
#include <vector>

#include "sombor/tree.hpp"

namespace sombor {

/// Isomorphism key for free trees: a balanced-parenthesis string of the tree
/// rooted at its center, children in canonical order. Equal codes iff the
/// trees are isomorphic; ordering is plain lexicographic.
struct CanonicalCode {
  std::string code;

  friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;
};

/// One or two central vertices (minimisers of eccentricity), ascending.
inline std::vector<Vertex> tree_centers(const Tree& t) {
  const std::size_t n = t.order();
  if (n <= 2) {
    std::vector<Vertex> all(n);
    for (Vertex v = 0; v < n; ++v) all[v] = v;
    return all;
  }
  std::vector<std::size_t> remaining(n);
  std::vector<Vertex> layer;
  for (Vertex v = 0; v < n; ++v) {
    remaining[v] = t.degree(v);
    if (remaining[v] == 1) layer.push_back(v);
  }
  std::size_t left = n;
  while (left > 2) {
    left -= layer.size();
    std::vector<Vertex> next;
    for (Vertex leaf : layer) {
      for (Vertex w : t.neighbors(leaf)) {
        if (--remaining[w] == 1) next.push_back(w);
      }
    }
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

/// AHU encoding of t rooted at root. Vertices are ranked level by level from
/// the bottom so sibling order only depends on subtree shape.
inline std::string rooted_code(const Tree& t, Vertex root) {
  const BfsLayout layout = bfs(t, root);
  const std::size_t n = t.order();
  const std::size_t height = layout.depth[layout.order.back()];

  std::vector<std::vector<Vertex>> by_depth(height + 1);
  for (Vertex v : layout.order) by_depth[layout.depth[v]].push_back(v);

  std::vector<std::size_t> rank(n, 0);
  std::vector<std::vector<Vertex>> children(n);
  std::vector<std::vector<std::size_t>> key(n);
  for (std::size_t d = height + 1; d-- > 0;) {
    auto& level = by_depth[d];
    for (Vertex v : level) {
      auto& kids = children[v];
      for (Vertex w : t.neighbors(v)) {
        if (w != layout.parent[v]) kids.push_back(w);
      }
      std::sort(kids.begin(), kids.end(),
                [&](Vertex a, Vertex b) { return rank[a] < rank[b]; });
      key[v].reserve(kids.size());
      for (Vertex w : kids) key[v].push_back(rank[w]);
    }
    std::sort(level.begin(), level.end(), [&](Vertex a, Vertex b) { return key[a] < key[b]; });
    std::size_t r = 0;
    for (std::size_t i = 0; i < level.size(); ++i) {
      if (i > 0 && key[level[i]] != key[level[i - 1]]) ++r;
      rank[level[i]] = r;
    }
  }

  std::string out;
  out.reserve(2 * n);
  // explicit stack of (vertex, next child index)
  std::vector<std::pair<Vertex, std::size_t>> stack{{root, 0}};
  out.push_back('(');
  while (!stack.empty()) {
    auto& [v, next] = stack.back();
    if (next < children[v].size()) {
      const Vertex w = children[v][next++];
      out.push_back('(');
      stack.emplace_back(w, 0);
    } else {
      out.push_back(')');
      stack.pop_back();
    }
  }
  return out;
}

inline CanonicalCode canonical_code(const Tree& t) {
  const auto centers = tree_centers(t);
  std::string best = rooted_code(t, centers.front());
  if (centers.size() == 2) best = std::min(best, rooted_code(t, centers.back()));
  return CanonicalCode{std::move(best)};
}

inline bool isomorphic(const Tree& a, const Tree& b) {
  return a.order() == b.order() && canonical_code(a) == canonical_code(b);
}

}  // namespace sombor

#endif  // SOMBOR_CANONICAL_HPP
