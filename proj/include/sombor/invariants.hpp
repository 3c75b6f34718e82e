#ifndef SOMBOR_INVARIANTS_HPP
#define SOMBOR_INVARIANTS_HPP

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "sombor/errors.hpp"
#include "sombor/tree.hpp"

namespace sombor {

/// Absolute tolerance for comparing Sombor index values.
inline constexpr double kSomborTolerance = 1e-9;

/// Largest order accepted by the exhaustive-subset independence oracle.
inline constexpr std::size_t kOracleMaxOrder = 24;

/// Sum over edges uv of sqrt(deg(u)^2 + deg(v)^2).
inline double sombor_index(const Tree& t) {
  double total = 0.0;
  for (const Edge& e : t.edges()) {
    const auto du = static_cast<double>(t.degree(e.u));
    const auto dv = static_cast<double>(t.degree(e.v));
    total += std::sqrt(du * du + dv * dv);
  }
  return total;
}

/// Independence number by the two-state tree DP (vertex taken / not taken),
/// rooted at vertex 0.
inline std::size_t independence_number(const Tree& t) {
  const BfsLayout layout = bfs(t, 0);
  std::vector<std::size_t> with(t.order(), 1);
  std::vector<std::size_t> without(t.order(), 0);
  for (auto it = layout.order.rbegin(); it != layout.order.rend(); ++it) {
    const Vertex v = *it;
    if (v == layout.order.front()) continue;
    const Vertex p = layout.parent[v];
    with[p] += without[v];
    without[p] += std::max(with[v], without[v]);
  }
  return std::max(with[0], without[0]);
}

/// Independence number by checking every vertex subset. Exponential; refuses
/// trees above kOracleMaxOrder.
inline std::size_t independence_number_oracle(const Tree& t) {
  const std::size_t n = t.order();
  if (n > kOracleMaxOrder) {
    throw SizeError("subset oracle limited to " + std::to_string(kOracleMaxOrder) +
                    " vertices, got " + std::to_string(n));
  }
  std::vector<std::uint32_t> neighborhood(n, 0);
  for (const Edge& e : t.edges()) {
    neighborhood[e.u] |= std::uint32_t{1} << e.v;
    neighborhood[e.v] |= std::uint32_t{1} << e.u;
  }
  const std::uint32_t subsets = std::uint32_t{1} << n;
  int best = 0;
  for (std::uint32_t s = 0; s < subsets; ++s) {
    const int size = std::popcount(s);
    if (size <= best) continue;
    bool independent = true;
    for (std::uint32_t rest = s; rest != 0 && independent; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      independent = (neighborhood[v] & s) == 0;
    }
    if (independent) best = size;
  }
  return static_cast<std::size_t>(best);
}

/// Set of pairwise non-adjacent vertices of a host tree. Membership is
/// validated against the host on construction.
class IndependentSet {
 public:
  IndependentSet(const Tree& host, std::vector<Vertex> members)
      : members_(std::move(members)), host_order_(host.order()) {
    std::sort(members_.begin(), members_.end());
    if (std::adjacent_find(members_.begin(), members_.end()) != members_.end()) {
      throw InputError("independent set lists a vertex twice");
    }
    for (Vertex v : members_) {
      for (Vertex w : host.neighbors(v)) {
        if (std::binary_search(members_.begin(), members_.end(), w)) {
          throw StructuralError("vertices " + std::to_string(v) + " and " + std::to_string(w) +
                                " are adjacent");
        }
      }
    }
  }

  const std::vector<Vertex>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  std::size_t host_order() const noexcept { return host_order_; }
  bool contains(Vertex v) const {
    return std::binary_search(members_.begin(), members_.end(), v);
  }

 private:
  std::vector<Vertex> members_;
  std::size_t host_order_;
};

/// Maximum independent set containing every pendant vertex, built by
/// repeatedly taking the current pendants and deleting them together with
/// their supports. Vertices isolated by a deletion count as pendants of the
/// next round. Within a round pendants are taken in ascending id order, so
/// of two adjacent pendants (a two-vertex component) only the smaller is kept.
inline IndependentSet pendant_inclusive_mis(const Tree& t) {
  const std::size_t n = t.order();
  std::vector<bool> alive(n, true);
  std::vector<std::size_t> live_degree(n);
  for (Vertex v = 0; v < n; ++v) live_degree[v] = t.degree(v);

  const auto remove = [&](Vertex v) {
    alive[v] = false;
    for (Vertex w : t.neighbors(v)) {
      if (alive[w]) --live_degree[w];
    }
  };

  std::vector<Vertex> chosen;
  std::size_t remaining = n;
  while (remaining > 0) {
    std::vector<Vertex> round;
    for (Vertex v = 0; v < n; ++v) {
      if (alive[v] && live_degree[v] <= 1) round.push_back(v);
    }
    for (Vertex v : round) {
      if (!alive[v]) continue;
      chosen.push_back(v);
      remove(v);
      --remaining;
      for (Vertex w : t.neighbors(v)) {
        if (alive[w]) {
          remove(w);
          --remaining;
        }
      }
    }
  }
  return IndependentSet(t, std::move(chosen));
}

}  // namespace sombor

#endif  // SOMBOR_INVARIANTS_HPP
