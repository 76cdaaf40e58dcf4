#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "fsg/graph.hpp"
#include "fsg/perm.hpp"

namespace fsg {

/// Unordered pair of Y-vertices exchanged by a swap.
struct EdgeLabel {
  int lo = 0, hi = 0;

  EdgeLabel() = default;
  EdgeLabel(int y1, int y2);

  bool contains(int v) const { return lo == v || hi == v; }
  int other(int v) const { return v == lo ? hi : lo; }
  bool disjoint(const EdgeLabel& o) const { return !contains(o.lo) && !contains(o.hi); }
  /// The symmetric difference when the two labels share exactly one vertex.
  EdgeLabel symmetric_difference(const EdgeLabel& o) const;
  int shared_count(const EdgeLabel& o) const;

  auto operator<=>(const EdgeLabel&) const = default;
};

std::string to_string(const EdgeLabel& label);

struct ComponentCensus {
  uint64_t count = 0;
  std::vector<uint64_t> sizes;    // ascending
  std::vector<Permutation> reps;  // minimum-rank member per component, by rank
};

struct FsBudget {
  uint64_t max_vertices = 3'628'800;  // 10!
};

/// Neighbors of sigma in FS(x, y): one entry per x-edge {a,b} with
/// {sigma(a), sigma(b)} an edge of y, in sorted x-edge order.
std::vector<std::pair<Permutation, EdgeLabel>> fs_neighbors(const Graph& x, const Graph& y,
                                                            const Permutation& sigma);

/// Exact component census over all n! bijections (union-find over Lehmer
/// ranks). Throws capability_error when n! exceeds the budget.
ComponentCensus fs_components(const Graph& x, const Graph& y, const FsBudget& budget = {});

/// Breadth-first closure of the identity's rank with early exit; equivalent
/// to fs_components(...).count == 1.
bool fs_is_connected(const Graph& x, const Graph& y, const FsBudget& budget = {});

enum class StarPredictionKind { Connected, TwoHalves, ThetaSix, CyclicOrders, NotBiconnected };

struct StarPrediction {
  StarPredictionKind kind = StarPredictionKind::Connected;
  uint64_t count = 0;  // number of components (0 when NotBiconnected: no claim made)
  uint64_t size = 0;   // common component size
  bool predicts_connected() const { return count == 1; }
};

/// Component structure of FS(Star_n, y) by case analysis: not biconnected,
/// the exceptional 7-vertex theta graph, a cycle, bipartite, or none of
/// those (connected).
StarPrediction star_components_predicted(const Graph& y);

/// Parity invariant for bipartite x and y: |sigma(A_X) ∩ A_Y| plus 1 when
/// sigma is even, mod 2. Constant on connected components.
int bipartite_parity(const Graph& x, const Graph& y, const std::vector<int>& a_x,
                     const std::vector<int>& a_y, const Permutation& sigma);

struct ComponentEdge {
  uint32_t u = 0, v = 0;  // indices into vertices, u < v
  EdgeLabel label;
};

/// One connected component of FS(x, y), fully materialized. Vertices are
/// sorted by rank; edges are sorted by (u, v) and indexed by position.
struct ExplicitComponent {
  Graph x, y;
  std::vector<Permutation> vertices;
  std::vector<uint64_t> ranks;
  std::vector<ComponentEdge> edges;
  std::vector<uint32_t> adj_offsets;                // CSR over vertices
  std::vector<std::pair<uint32_t, uint32_t>> adj;   // (neighbor vertex, edge index)

  size_t index_of_rank(uint64_t rank) const;  // throws if absent
};

ExplicitComponent fs_component_of(const Graph& x, const Graph& y, const Permutation& sigma,
                                  const FsBudget& budget = {});

}  // namespace fsg
