#ifndef SOMBOR_EXTREMAL_HPP
#define SOMBOR_EXTREMAL_HPP

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sombor/errors.hpp"
#include "sombor/invariants.hpp"
#include "sombor/tree.hpp"

namespace sombor {

/// Order n and independence number alpha of a tree class, with
/// ceil(n/2) <= alpha <= n-1.
class ExtremalParams {
 public:
  ExtremalParams(std::size_t order, std::size_t alpha) : order_(order), alpha_(alpha) {
    if (order < 2 || alpha < (order + 1) / 2 || alpha > order - 1) {
      throw DomainError("no tree of order " + std::to_string(order) +
                        " has independence number " + std::to_string(alpha) +
                        (order >= 2 ? "; alpha must be in [" + std::to_string((order + 1) / 2) +
                                          ", " + std::to_string(order - 1) + "]"
                                    : std::string{}));
    }
  }

  std::size_t order() const noexcept { return order_; }
  std::size_t alpha() const noexcept { return alpha_; }

  /// 2*alpha - (n-1): pendants hanging directly off the center.
  std::size_t center_pendants() const noexcept { return 2 * alpha_ - (order_ - 1); }
  /// n - (alpha+1): arms of length two.
  std::size_t arms() const noexcept { return order_ - alpha_ - 1; }

 private:
  std::size_t order_;
  std::size_t alpha_;
};

/// The extremal tree: a star on n-alpha vertices, one pendant on each star
/// leaf, the remaining pendants on the center. Numbering: center 0, star
/// leaves 1..arms, their pendants next (in the same order), center pendants
/// last. With alpha = n-1 this is the star S_n.
inline Tree construct_t_star(const ExtremalParams& p) {
  const auto arms = static_cast<Vertex>(p.arms());
  const auto center_pendants = static_cast<Vertex>(p.center_pendants());
  std::vector<Edge> edges;
  for (Vertex i = 1; i <= arms; ++i) edges.push_back({0, i});
  for (Vertex i = 1; i <= arms; ++i) edges.push_back({i, arms + i});
  for (Vertex j = 0; j < center_pendants; ++j) edges.push_back({0, 2 * arms + 1 + j});
  return Tree::from_edges(p.order(), edges);
}

/// SO of the extremal tree in closed form:
/// (2a-(n-1)) sqrt(a^2+1) + (n-(a+1)) (sqrt(a^2+4) + sqrt(5)).
inline double closed_form_max(const ExtremalParams& p) {
  const auto a = static_cast<double>(p.alpha());
  return static_cast<double>(p.center_pendants()) * std::sqrt(a * a + 1.0) +
         static_cast<double>(p.arms()) * (std::sqrt(a * a + 4.0) + std::sqrt(5.0));
}

enum class TreeClass { Star, TStar, T1, T2, Other };

inline std::string_view to_string(TreeClass c) {
  switch (c) {
    case TreeClass::Star: return "Star";
    case TreeClass::TStar: return "TStar";
    case TreeClass::T1: return "T1";
    case TreeClass::T2: return "T2";
    case TreeClass::Other: return "Other";
  }
  return "?";
}

/// A tree whose pendant-stripped residue is a star on at least two vertices.
/// Vertex ids refer to the original tree. For a two-vertex residue the center
/// is the end with more pendants (smaller id on ties).
struct StarBase {
  Vertex center = 0;
  std::vector<Vertex> leaves;               // residue leaves, ascending
  std::vector<std::size_t> leaf_pendants;   // pendants on each residue leaf
  std::size_t center_pendants = 0;
};

inline std::size_t pendant_neighbor_count(const Tree& t, Vertex v) {
  std::size_t count = 0;
  for (Vertex w : t.neighbors(v)) count += t.degree(w) == 1 ? 1 : 0;
  return count;
}

/// Star decomposition of t, or nullopt when the residue is a single vertex,
/// is not a star, or t has fewer than three vertices.
inline std::optional<StarBase> star_base(const Tree& t) {
  if (t.order() < 3) return std::nullopt;
  const InducedSubtree residue = strip_pendants(t);
  const Tree& r = residue.tree;
  const std::size_t s = r.order();
  if (s < 2) return std::nullopt;

  Vertex center = 0;
  if (s == 2) {
    const Vertex a = residue.original[0];
    const Vertex b = residue.original[1];
    center = pendant_neighbor_count(t, b) > pendant_neighbor_count(t, a) ? b : a;
  } else {
    Vertex hub = 0;
    for (Vertex v = 1; v < s; ++v) {
      if (r.degree(v) > r.degree(hub)) hub = v;
    }
    if (r.degree(hub) != s - 1) return std::nullopt;
    center = residue.original[hub];
  }

  StarBase base;
  base.center = center;
  base.center_pendants = pendant_neighbor_count(t, center);
  for (Vertex v : residue.original) {
    if (v == center) continue;
    base.leaves.push_back(v);
    base.leaf_pendants.push_back(pendant_neighbor_count(t, v));
  }
  return base;
}

/// Structural membership test for the star-based families:
///   Star  - residue is a single vertex (or n <= 2);
///   T1    - residue is a star and every residue vertex carries a pendant;
///   TStar - T1 with exactly one pendant on each residue leaf;
///   T2    - residue is a star whose center carries no pendant, alpha != n/2;
///   Other - anything else.
inline TreeClass classify(const Tree& t) {
  if (t.order() <= 2) return TreeClass::Star;
  if (strip_pendants(t).tree.order() == 1) return TreeClass::Star;
  const auto base = star_base(t);
  if (!base) return TreeClass::Other;
  // Residue leaves always carry a pendant: they had degree >= 2 in t.
  if (base->center_pendants == 0) {
    // alpha = pendants + the isolated center
    const std::size_t alpha = t.order() - (base->leaves.size() + 1) + 1;
    return 2 * alpha == t.order() ? TreeClass::Other : TreeClass::T2;
  }
  for (std::size_t count : base->leaf_pendants) {
    if (count != 1) return TreeClass::T1;
  }
  return TreeClass::TStar;
}

inline bool in_t1(TreeClass c) { return c == TreeClass::T1 || c == TreeClass::TStar; }

/// f(x) = sqrt((x+c)^2 + d^2) - sqrt(x^2 + d^2); increasing in x >= 1.
inline double lemma1_f(double x, std::int64_t c, std::int64_t d) {
  if (!(x >= 1.0)) throw InputError("f requires x >= 1");
  if (c <= 0 || d <= 0) throw InputError("f requires positive integers c, d");
  const auto cd = static_cast<double>(c);
  const auto dd = static_cast<double>(d);
  return cd * (2.0 * x + cd) / (std::hypot(x + cd, dd) + std::hypot(x, dd));
}

/// g(x) = sqrt(c^2 + x^2) - sqrt(d^2 + x^2) with c > d; decreasing in x >= 1.
inline double lemma2_g(double x, std::int64_t c, std::int64_t d) {
  if (!(x >= 1.0)) throw InputError("g requires x >= 1");
  if (c <= 0 || d <= 0) throw InputError("g requires positive integers c, d");
  if (c <= d) throw InputError("g requires c > d");
  const auto cd = static_cast<double>(c);
  const auto dd = static_cast<double>(d);
  // (c^2 - d^2) / (sqrt(c^2+x^2) + sqrt(d^2+x^2)) avoids cancellation for large x
  return (cd * cd - dd * dd) / (std::hypot(cd, x) + std::hypot(dd, x));
}

/// (n-alpha+k)^2 + 1 >= (n-alpha)^2 + (k+1)^2, in exact integers.
inline bool star_shift_inequality(std::int64_t n_minus_alpha, std::int64_t k) {
  const std::int64_t lhs = (n_minus_alpha + k) * (n_minus_alpha + k) + 1;
  const std::int64_t rhs = n_minus_alpha * n_minus_alpha + (k + 1) * (k + 1);
  return lhs >= rhs;
}

/// (l+k)^2 + 4 >= (l+1)^2 + (k+1)^2, in exact integers.
inline bool theorem_shift_inequality(std::int64_t l, std::int64_t k) {
  const std::int64_t lhs = (l + k) * (l + k) + 4;
  const std::int64_t rhs = (l + 1) * (l + 1) + (k + 1) * (k + 1);
  return lhs >= rhs;
}

}  // namespace sombor

#endif  // SOMBOR_EXTREMAL_HPP
