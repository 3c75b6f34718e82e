#ifndef SOMBOR_ENUMERATION_HPP
#define SOMBOR_ENUMERATION_HPP

// Free-tree enumeration by level sequences (Wright, Richmond, Odlyzko and
// McKay). Each free tree is produced once, as the level sequence of its
// canonical center-rooted form; rooted successors come from the
// Beyer-Hedetniemi step, and non-canonical candidates are skipped in one jump.

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sombor/errors.hpp"
#include "sombor/invariants.hpp"
#include "sombor/tree.hpp"

namespace sombor {

/// Default upper bound on n for enumeration (823065 trees at n = 20).
inline constexpr std::size_t kDefaultEnumerationCap = 20;

/// Depth of each vertex in preorder; vertex 0 is the root at depth 0.
using LevelSequence = std::vector<int>;

/// Tree whose vertex i has depth levels[i]; the parent of i is the closest
/// earlier vertex one level up.
inline Tree tree_from_levels(const LevelSequence& levels) {
  std::vector<Vertex> parent(levels.size(), 0);
  std::vector<Vertex> last_at_depth(levels.size() + 1, 0);
  for (std::size_t i = 0; i < levels.size(); ++i) {
    const auto depth = static_cast<std::size_t>(levels[i]);
    parent[i] = depth == 0 ? static_cast<Vertex>(i) : last_at_depth[depth - 1];
    last_at_depth[depth] = static_cast<Vertex>(i);
  }
  return Tree::from_parents(parent);
}

namespace detail {

// Beyer-Hedetniemi successor. p is the position to increment from; when
// absent it is the last vertex not at depth 1.
inline std::optional<LevelSequence> next_rooted(const LevelSequence& current,
                                                std::optional<std::size_t> from = {}) {
  std::size_t p = 0;
  if (from) {
    p = *from;
  } else {
    p = current.size() - 1;
    while (current[p] == 1) --p;
  }
  if (p == 0) return std::nullopt;
  std::size_t q = p - 1;
  while (current[q] != current[p] - 1) --q;
  LevelSequence next = current;
  for (std::size_t i = p; i < next.size(); ++i) next[i] = next[i - p + q];
  return next;
}

// Splits off the first subtree of the root: (that subtree with levels
// shifted up by one, the rest of the tree including the root).
inline std::pair<LevelSequence, LevelSequence> split_first_subtree(const LevelSequence& levels) {
  std::size_t m = levels.size();
  bool seen_one = false;
  for (std::size_t i = 0; i < levels.size(); ++i) {
    if (levels[i] == 1) {
      if (seen_one) {
        m = i;
        break;
      }
      seen_one = true;
    }
  }
  LevelSequence left;
  for (std::size_t i = 1; i < m; ++i) left.push_back(levels[i] - 1);
  LevelSequence rest{0};
  for (std::size_t i = m; i < levels.size(); ++i) rest.push_back(levels[i]);
  return {std::move(left), std::move(rest)};
}

// Returns the candidate if it is a canonical free tree, else jumps ahead to
// the next candidate worth checking.
inline LevelSequence next_free_candidate(const LevelSequence& candidate) {
  const auto [left, rest] = split_first_subtree(candidate);
  const int left_height = *std::max_element(left.begin(), left.end());
  const int rest_height = *std::max_element(rest.begin(), rest.end());
  bool valid = rest_height >= left_height;
  if (valid && rest_height == left_height) {
    if (left.size() > rest.size()) {
      valid = false;
    } else if (left.size() == rest.size() && left > rest) {
      valid = false;
    }
  }
  if (valid) return candidate;

  const std::size_t p = left.size();
  LevelSequence next = *next_rooted(candidate, p);
  if (candidate[p] > 2) {
    const auto split = split_first_subtree(next);
    const int new_left_height = *std::max_element(split.first.begin(), split.first.end());
    const auto suffix_len = static_cast<std::size_t>(new_left_height + 1);
    for (std::size_t i = 0; i < suffix_len; ++i) {
      next[next.size() - suffix_len + i] = static_cast<int>(i) + 1;
    }
  }
  return next;
}

}  // namespace detail

/// Stream of all free trees on n vertices, one per isomorphism class, in a
/// fixed deterministic order (reverse lexicographic on level sequences,
/// starting from the path).
class FreeTreeGenerator {
 public:
  explicit FreeTreeGenerator(std::size_t n, std::size_t cap = kDefaultEnumerationCap) : n_(n) {
    if (n == 0) throw InputError("tree order must be positive");
    if (n > cap) {
      throw SizeError("enumeration limited to n <= " + std::to_string(cap) + ", got " +
                      std::to_string(n));
    }
    if (n == 1) {
      pending_ = LevelSequence{0};
      return;
    }
    LevelSequence path;
    for (std::size_t i = 0; i <= n / 2; ++i) path.push_back(static_cast<int>(i));
    for (std::size_t i = 1; i < (n + 1) / 2; ++i) path.push_back(static_cast<int>(i));
    pending_ = std::move(path);
  }

  /// Advances to the next tree; false once the stream is exhausted.
  bool next() {
    if (!pending_) return false;
    if (n_ <= 2) {
      current_ = std::move(*pending_);
      pending_.reset();
      return true;
    }
    current_ = detail::next_free_candidate(*pending_);
    pending_ = detail::next_rooted(current_);
    return true;
  }

  /// Level sequence of the current tree (valid after next() returned true).
  const LevelSequence& levels() const noexcept { return current_; }
  Tree tree() const { return tree_from_levels(current_); }

 private:
  std::size_t n_;
  std::optional<LevelSequence> pending_;
  LevelSequence current_;
};

/// Calls visit(tree) for every free tree on n vertices.
template <class Visitor>
void for_each_free_tree(std::size_t n, Visitor&& visit,
                        std::size_t cap = kDefaultEnumerationCap) {
  FreeTreeGenerator gen(n, cap);
  while (gen.next()) visit(gen.tree());
}

inline std::vector<Tree> enumerate_free_trees(std::size_t n,
                                              std::size_t cap = kDefaultEnumerationCap) {
  std::vector<Tree> out;
  for_each_free_tree(n, [&](Tree t) { out.push_back(std::move(t)); }, cap);
  return out;
}

inline std::size_t count_free_trees(std::size_t n, std::size_t cap = kDefaultEnumerationCap) {
  FreeTreeGenerator gen(n, cap);
  std::size_t count = 0;
  while (gen.next()) ++count;
  return count;
}

/// Trees of a given order, optionally restricted to one independence number.
struct TreeFamilyQuery {
  std::size_t order = 1;
  std::optional<std::size_t> alpha;
};

/// True when some tree of order n has independence number alpha:
/// ceil(n/2) <= alpha <= n-1 for n >= 2, alpha = 1 for n = 1.
inline bool alpha_feasible(std::size_t n, std::size_t alpha) {
  if (n == 1) return alpha == 1;
  return alpha >= (n + 1) / 2 && alpha <= n - 1;
}

/// Calls visit(tree) for every member of the family; nothing for infeasible alpha.
template <class Visitor>
void for_each_in_family(const TreeFamilyQuery& q, Visitor&& visit,
                        std::size_t cap = kDefaultEnumerationCap) {
  if (q.alpha && !alpha_feasible(q.order, *q.alpha)) {
    if (q.order > cap) {
      throw SizeError("enumeration limited to n <= " + std::to_string(cap));
    }
    return;
  }
  for_each_free_tree(
      q.order,
      [&](Tree t) {
        if (!q.alpha || independence_number(t) == *q.alpha) visit(std::move(t));
      },
      cap);
}

inline std::vector<Tree> enumerate_family(const TreeFamilyQuery& q,
                                          std::size_t cap = kDefaultEnumerationCap) {
  std::vector<Tree> out;
  for_each_in_family(q, [&](Tree t) { out.push_back(std::move(t)); }, cap);
  return out;
}

}  // namespace sombor

#endif  // SOMBOR_ENUMERATION_HPP
