#ifndef SOMBOR_TREE_HPP
#define SOMBOR_TREE_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sombor/errors.hpp"

namespace sombor {

using Vertex = std::uint32_t;

struct Edge {
  Vertex u;
  Vertex v;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

namespace detail {

// Union-find used to reject cycles while edges arrive one at a time.
class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  // false when a and b were already connected
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace detail

/// Immutable simple tree on vertices 0..order()-1.
///
/// Every constructor path validates: exactly order-1 edges, no self-loops,
/// no duplicates, no cycles (hence connected). Neighbor lists are sorted.
class Tree {
 public:
  /// Single-vertex tree.
  Tree() : adjacency_(1) {}

  static Tree from_edges(std::size_t order, std::span<const Edge> edges) {
    if (order == 0) throw StructuralError("a tree needs at least one vertex");
    if (edges.size() != order - 1) {
      throw StructuralError("a tree on " + std::to_string(order) + " vertices needs " +
                            std::to_string(order - 1) + " edges, got " +
                            std::to_string(edges.size()));
    }
    Tree t(order);
    detail::DisjointSets components(order);
    for (const Edge& e : edges) {
      if (e.u >= order || e.v >= order) {
        throw InputError("edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                         ") references a vertex outside [0, " + std::to_string(order) + ")");
      }
      if (e.u == e.v) throw StructuralError("self-loop at vertex " + std::to_string(e.u));
      if (!components.unite(e.u, e.v)) {
        throw StructuralError("edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                              ") closes a cycle");
      }
      t.adjacency_[e.u].push_back(e.v);
      t.adjacency_[e.v].push_back(e.u);
    }
    for (auto& list : t.adjacency_) std::sort(list.begin(), list.end());
    return t;
  }

  static Tree from_edges(std::size_t order, std::initializer_list<Edge> edges) {
    return from_edges(order, std::span<const Edge>(edges.begin(), edges.size()));
  }

  /// Tree with parent[i] as the parent of vertex i; parent[root] must equal root.
  static Tree from_parents(std::span<const Vertex> parent) {
    std::vector<Edge> edges;
    edges.reserve(parent.size());
    for (std::size_t i = 0; i < parent.size(); ++i) {
      if (parent[i] != i) edges.push_back({parent[i], static_cast<Vertex>(i)});
    }
    return from_edges(parent.size(), edges);
  }

  std::size_t order() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept { return adjacency_.size() - 1; }

  std::span<const Vertex> neighbors(Vertex v) const {
    check_vertex(v);
    return adjacency_[v];
  }

  std::size_t degree(Vertex v) const {
    check_vertex(v);
    return adjacency_[v].size();
  }

  bool adjacent(Vertex u, Vertex v) const {
    check_vertex(u);
    check_vertex(v);
    return std::binary_search(adjacency_[u].begin(), adjacency_[u].end(), v);
  }

  /// Edges with u < v, sorted lexicographically.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count());
    for (Vertex u = 0; u < order(); ++u) {
      for (Vertex v : adjacency_[u]) {
        if (u < v) out.push_back({u, v});
      }
    }
    return out;
  }

  void check_vertex(Vertex v) const {
    if (v >= adjacency_.size()) {
      throw InputError("vertex " + std::to_string(v) + " out of range [0, " +
                       std::to_string(adjacency_.size()) + ")");
    }
  }

  friend bool operator==(const Tree&, const Tree&) = default;

 private:
  explicit Tree(std::size_t order) : adjacency_(order) {}

  std::vector<std::vector<Vertex>> adjacency_;
};

inline std::size_t degree(const Tree& t, Vertex v) { return t.degree(v); }

/// Vertices of degree 1, ascending. Empty for the single-vertex tree.
inline std::vector<Vertex> pendant_vertices(const Tree& t) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < t.order(); ++v) {
    if (t.degree(v) == 1) out.push_back(v);
  }
  return out;
}

inline bool is_pendant(const Tree& t, Vertex v) { return t.degree(v) == 1; }

inline Vertex support_vertex(const Tree& t, Vertex pendant) {
  if (t.degree(pendant) != 1) {
    throw InputError("vertex " + std::to_string(pendant) + " is not a pendant vertex");
  }
  return t.neighbors(pendant).front();
}

/// Breadth-first layout from a root: visit order, parent (root is its own
/// parent) and depth of every vertex.
struct BfsLayout {
  std::vector<Vertex> order;
  std::vector<Vertex> parent;
  std::vector<std::size_t> depth;
};

inline BfsLayout bfs(const Tree& t, Vertex root) {
  t.check_vertex(root);
  BfsLayout out;
  out.order.reserve(t.order());
  out.parent.assign(t.order(), root);
  out.depth.assign(t.order(), 0);
  std::vector<bool> seen(t.order(), false);
  out.order.push_back(root);
  seen[root] = true;
  for (std::size_t head = 0; head < out.order.size(); ++head) {
    const Vertex v = out.order[head];
    for (Vertex w : t.neighbors(v)) {
      if (seen[w]) continue;
      seen[w] = true;
      out.parent[w] = v;
      out.depth[w] = out.depth[v] + 1;
      out.order.push_back(w);
    }
  }
  return out;
}

inline std::size_t distance(const Tree& t, Vertex u, Vertex v) {
  t.check_vertex(v);
  return bfs(t, u).depth[v];
}

/// Vertices of the unique u-v path, u first.
inline std::vector<Vertex> path_between(const Tree& t, Vertex u, Vertex v) {
  t.check_vertex(u);
  const BfsLayout layout = bfs(t, v);
  std::vector<Vertex> path{u};
  while (path.back() != v) path.push_back(layout.parent[path.back()]);
  return path;
}

/// Induced subtree on a vertex subset, renumbered in ascending original id.
struct InducedSubtree {
  Tree tree;
  std::vector<Vertex> original;  // new id -> id in the source tree
};

/// The tree left after deleting every pendant vertex with its edge.
inline InducedSubtree strip_pendants(const Tree& t) {
  if (t.order() <= 2) {
    throw DomainError("stripping pendants of a tree on " + std::to_string(t.order()) +
                      " vertices leaves nothing");
  }
  constexpr Vertex kDropped = ~Vertex{0};
  std::vector<Vertex> renumber(t.order(), kDropped);
  InducedSubtree out;
  for (Vertex v = 0; v < t.order(); ++v) {
    if (t.degree(v) != 1) {
      renumber[v] = static_cast<Vertex>(out.original.size());
      out.original.push_back(v);
    }
  }
  std::vector<Edge> edges;
  for (const Edge& e : t.edges()) {
    if (renumber[e.u] != kDropped && renumber[e.v] != kDropped) {
      edges.push_back({renumber[e.u], renumber[e.v]});
    }
  }
  out.tree = Tree::from_edges(out.original.size(), edges);
  return out;
}

/// Sorted degree sequence, descending.
inline std::vector<std::size_t> degree_sequence(const Tree& t) {
  std::vector<std::size_t> out(t.order());
  for (Vertex v = 0; v < t.order(); ++v) out[v] = t.degree(v);
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

/// Same tree with vertex v renamed to permutation[v].
inline Tree relabel(const Tree& t, std::span<const Vertex> permutation) {
  if (permutation.size() != t.order()) throw InputError("permutation size mismatch");
  std::vector<Edge> edges;
  for (const Edge& e : t.edges()) edges.push_back({permutation[e.u], permutation[e.v]});
  return Tree::from_edges(t.order(), edges);
}

/// Path 0-1-...-(n-1).
inline Tree path_tree(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < n; ++i) {
    edges.push_back({static_cast<Vertex>(i - 1), static_cast<Vertex>(i)});
  }
  return Tree::from_edges(n, edges);
}

/// Star with center 0.
inline Tree star_tree(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < n; ++i) edges.push_back({0, static_cast<Vertex>(i)});
  return Tree::from_edges(n, edges);
}

}  // namespace sombor

#endif  // SOMBOR_TREE_HPP
