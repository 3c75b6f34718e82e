#ifndef SOMBOR_TRANSFORMS_HPP
#define SOMBOR_TRANSFORMS_HPP

// Checked edge rewirings from the extremal argument. Each returns a new tree;
// preconditions are verified locally and reported as exceptions, global
// optimality is never consulted.

#include <algorithm>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sombor/errors.hpp"
#include "sombor/extremal.hpp"
#include "sombor/tree.hpp"

namespace sombor {

/// Re-home the edges donor~w (w in moved) as receiver~w.
struct ShiftSpec {
  Vertex donor = 0;
  Vertex receiver = 0;
  std::vector<Vertex> moved;
};

inline Tree shift_neighbors(const Tree& t, const ShiftSpec& s) {
  t.check_vertex(s.donor);
  t.check_vertex(s.receiver);
  for (Vertex w : s.moved) t.check_vertex(w);
  if (s.donor == s.receiver) throw StructuralError("donor and receiver coincide");

  std::vector<Vertex> moved = s.moved;
  std::sort(moved.begin(), moved.end());
  if (std::adjacent_find(moved.begin(), moved.end()) != moved.end()) {
    throw StructuralError("a moved vertex is listed twice");
  }
  if (std::binary_search(moved.begin(), moved.end(), s.receiver)) {
    throw StructuralError("receiver " + std::to_string(s.receiver) + " is in the moved set");
  }
  for (Vertex w : moved) {
    if (!t.adjacent(s.donor, w)) {
      throw StructuralError("vertex " + std::to_string(w) + " is not adjacent to donor " +
                            std::to_string(s.donor));
    }
  }
  // The donor's neighbor toward the receiver must stay, or the receiver's
  // side would be cut off and w~receiver would close a cycle.
  const Vertex toward = bfs(t, s.receiver).parent[s.donor];
  if (std::binary_search(moved.begin(), moved.end(), toward)) {
    throw StructuralError("moving " + std::to_string(toward) +
                          " would disconnect the donor from the receiver");
  }

  std::vector<Edge> edges;
  for (const Edge& e : t.edges()) {
    const bool from_donor = e.u == s.donor || e.v == s.donor;
    const Vertex other = e.u == s.donor ? e.v : e.u;
    if (from_donor && std::binary_search(moved.begin(), moved.end(), other)) {
      edges.push_back({std::min(s.receiver, other), std::max(s.receiver, other)});
    } else {
      edges.push_back(e);
    }
  }
  return Tree::from_edges(t.order(), edges);
}

/// Replace u~x and v~y by u~y and v~x. Degrees are unchanged.
inline Tree swap_endpoints(const Tree& t, Vertex u, Vertex x, Vertex v, Vertex y) {
  for (Vertex w : {u, x, v, y}) t.check_vertex(w);
  const std::vector<Vertex> ids{u, x, v, y};
  for (std::size_t i = 0; i < ids.size(); ++i) {
    for (std::size_t j = i + 1; j < ids.size(); ++j) {
      if (ids[i] == ids[j]) throw StructuralError("swap endpoints must be four distinct vertices");
    }
  }
  if (!t.adjacent(u, x)) throw StructuralError("u~x is not an edge");
  if (!t.adjacent(v, y)) throw StructuralError("v~y is not an edge");

  const auto is = [](const Edge& e, Vertex a, Vertex b) {
    return (e.u == a && e.v == b) || (e.u == b && e.v == a);
  };
  std::vector<Edge> edges;
  for (const Edge& e : t.edges()) {
    if (is(e, u, x) || is(e, v, y)) continue;
    edges.push_back(e);
  }
  edges.push_back({std::min(u, y), std::max(u, y)});
  edges.push_back({std::min(v, x), std::max(v, x)});
  try {
    return Tree::from_edges(t.order(), edges);
  } catch (const StructuralError&) {
    throw StructuralError("swapping u~x, v~y for u~y, v~x does not yield a tree");
  }
}

/// Two support vertices of the pendant-stripped tree at maximum distance in
/// it, smallest (u, v) among ties, u < v. Ids refer to t.
inline std::pair<Vertex, Vertex> select_support_pair(const Tree& t) {
  if (t.order() < 3) throw DomainError("tree too small to have a stripped core");
  const InducedSubtree core = strip_pendants(t);
  const Tree& r = core.tree;
  std::vector<Vertex> supports;
  for (Vertex v = 0; v < r.order(); ++v) {
    for (Vertex w : r.neighbors(v)) {
      if (r.degree(w) == 1) {
        supports.push_back(v);
        break;
      }
    }
  }
  if (supports.size() < 2) {
    throw DomainError("the stripped tree has " + std::to_string(supports.size()) +
                      " support vertices; need at least 2");
  }
  std::size_t best = 0;
  std::pair<Vertex, Vertex> pick{supports[0], supports[1]};
  for (std::size_t i = 0; i < supports.size(); ++i) {
    const BfsLayout layout = bfs(r, supports[i]);
    for (std::size_t j = i + 1; j < supports.size(); ++j) {
      const std::size_t d = layout.depth[supports[j]];
      if (d > best) {
        best = d;
        pick = {supports[i], supports[j]};
      }
    }
  }
  return {core.original[pick.first], core.original[pick.second]};
}

enum class Lemma1Case { Case1_1, Case1_2, Case2, Case3 };

inline std::string_view to_string(Lemma1Case c) {
  switch (c) {
    case Lemma1Case::Case1_1: return "1.1";
    case Lemma1Case::Case1_2: return "1.2";
    case Lemma1Case::Case2: return "2";
    case Lemma1Case::Case3: return "3";
  }
  return "?";
}

/// The two extreme support vertices u, v of a tree outside T1 and T2, their
/// neighbors toward each other (x for u, y for v) and the split of their
/// remaining neighbors into non-pendant (inner) and pendant ones. Roles are
/// already oriented: in case 1 d(u) >= d(v); in case 2 u has no pendants.
/// When u~v, x = v and y = u.
struct Lemma1Configuration {
  Lemma1Case which = Lemma1Case::Case3;
  Vertex u = 0, v = 0, x = 0, y = 0;
  std::vector<Vertex> u_inner, u_pendants;
  std::vector<Vertex> v_inner, v_pendants;
};

inline Lemma1Configuration lemma1_configuration(const Tree& t) {
  const TreeClass cls = classify(t);
  if (cls != TreeClass::Other) {
    throw PreconditionError("tree is of class " + std::string(to_string(cls)) +
                            "; the rewiring needs a tree outside T1 and T2");
  }
  const auto [first, second] = select_support_pair(t);
  const std::vector<Vertex> path = path_between(t, first, second);

  Lemma1Configuration c;
  c.u = first;
  c.v = second;
  c.x = path[1];
  c.y = path[path.size() - 2];
  const auto split = [&](Vertex center, Vertex toward, std::vector<Vertex>& inner,
                         std::vector<Vertex>& pendants) {
    for (Vertex w : t.neighbors(center)) {
      if (w == toward) continue;
      (t.degree(w) == 1 ? pendants : inner).push_back(w);
    }
  };
  split(c.u, c.x, c.u_inner, c.u_pendants);
  split(c.v, c.y, c.v_inner, c.v_pendants);
  if (c.u_inner.empty() || c.v_inner.empty()) {
    throw PreconditionError("an extreme support vertex has no non-pendant neighbor off the path");
  }
  const auto flip = [&c] {
    std::swap(c.u, c.v);
    std::swap(c.x, c.y);
    std::swap(c.u_inner, c.v_inner);
    std::swap(c.u_pendants, c.v_pendants);
  };

  const bool a = !c.u_pendants.empty();
  const bool b = !c.v_pendants.empty();
  if (a && b) {
    if (t.degree(c.u) < t.degree(c.v)) flip();
    const bool adjacent = c.x == c.v;
    // with u~v the endpoint swap degenerates, so only the plain shift applies
    c.which = (adjacent || t.degree(c.x) >= t.degree(c.y)) ? Lemma1Case::Case1_1
                                                            : Lemma1Case::Case1_2;
  } else if (a || b) {
    if (a) flip();
    c.which = Lemma1Case::Case2;
  } else {
    c.which = Lemma1Case::Case3;
  }
  return c;
}

/// Applies the rewiring for the case the tree realizes; throws if that is
/// not `expected`.
inline Tree apply_lemma1_case(const Tree& t, Lemma1Case expected) {
  const Lemma1Configuration c = lemma1_configuration(t);
  if (c.which != expected) {
    throw PreconditionError("tree realizes case " + std::string(to_string(c.which)) +
                            ", not case " + std::string(to_string(expected)));
  }
  switch (c.which) {
    case Lemma1Case::Case1_1:
    case Lemma1Case::Case1_2: {
      const Tree base = c.which == Lemma1Case::Case1_2 ? swap_endpoints(t, c.u, c.x, c.v, c.y) : t;
      // v keeps one pendant (the smallest id) and its path neighbor
      ShiftSpec s{c.v, c.u, c.v_inner};
      s.moved.insert(s.moved.end(), c.v_pendants.begin() + 1, c.v_pendants.end());
      return shift_neighbors(base, s);
    }
    case Lemma1Case::Case2:
    case Lemma1Case::Case3:
      return shift_neighbors(t, ShiftSpec{c.u, c.v, c.u_inner});
  }
  return t;
}

inline Tree apply_lemma1(const Tree& t) {
  return apply_lemma1_case(t, lemma1_configuration(t).which);
}

/// For a T2 tree: move every pendant of the smallest residue leaf onto the
/// pendant-free center. The result lies in T1.
inline Tree apply_lemma2_step(const Tree& t) {
  const TreeClass cls = classify(t);
  if (cls != TreeClass::T2) {
    throw PreconditionError("tree is of class " + std::string(to_string(cls)) + ", not T2");
  }
  const StarBase base = *star_base(t);
  const Vertex leaf = base.leaves.front();
  ShiftSpec s{leaf, base.center, {}};
  for (Vertex w : t.neighbors(leaf)) {
    if (w != base.center) s.moved.push_back(w);
  }
  return shift_neighbors(t, s);
}

/// For a T1 tree other than the extremal one: the smallest residue leaf v
/// with k >= 2 pendants keeps its smallest pendant, the other k-1 move to
/// the center. nullopt when t is already extremal (TStar or Star).
inline std::optional<Tree> apply_theorem_step(const Tree& t) {
  const TreeClass cls = classify(t);
  if (cls == TreeClass::TStar || cls == TreeClass::Star) return std::nullopt;
  if (cls != TreeClass::T1) {
    throw PreconditionError("tree is of class " + std::string(to_string(cls)) + ", not T1");
  }
  const StarBase base = *star_base(t);
  for (std::size_t i = 0; i < base.leaves.size(); ++i) {
    if (base.leaf_pendants[i] < 2) continue;
    const Vertex v = base.leaves[i];
    std::vector<Vertex> pendants;
    for (Vertex w : t.neighbors(v)) {
      if (w != base.center) pendants.push_back(w);
    }
    return shift_neighbors(t, ShiftSpec{v, base.center, {pendants.begin() + 1, pendants.end()}});
  }
  throw PreconditionError("no residue leaf carries two pendants");
}

struct TheoremWalk {
  Tree final_tree;
  std::size_t steps = 0;
};

/// Applies T1 steps until the extremal tree is reached. Each step lowers
/// the total excess pendant count on residue leaves, so at most n steps run.
inline TheoremWalk walk_to_t_star(const Tree& t) {
  TheoremWalk walk{t, 0};
  while (auto next = apply_theorem_step(walk.final_tree)) {
    walk.final_tree = std::move(*next);
    if (++walk.steps > t.order()) throw PreconditionError("T1 steps did not terminate");
  }
  return walk;
}

}  // namespace sombor

#endif  // SOMBOR_TRANSFORMS_HPP
