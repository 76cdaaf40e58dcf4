#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace fsg {

/// Simple undirected graph on vertex set {1..n}, n <= 62.
/// Adjacency is one bitmask per vertex; bit v of neighbors_mask(u) is set
/// iff {u,v} is an edge. Values are immutable in practice: build once, share.
class Graph {
 public:
  explicit Graph(int n);
  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

  int n() const { return n_; }
  bool has_edge(int u, int v) const;
  void add_edge(int u, int v);
  int degree(int v) const;
  uint64_t neighbors_mask(int v) const;
  std::vector<int> neighbors(int v) const;
  /// Bits 1..n set.
  uint64_t vertex_mask() const;
  int edge_count() const;
  /// Edge list with u < v, lexicographically sorted.
  std::vector<std::pair<int, int>> edges() const;

  bool operator==(const Graph&) const = default;

 private:
  int n_ = 0;
  std::vector<uint64_t> adj_;  // adj_[0] unused
  void check_vertex(int v) const;
};

Graph complement(const Graph& g);

struct InducedSubgraph {
  Graph graph;                // relabeled 1..|s|
  std::vector<int> original;  // original[i-1] = source label of new vertex i
};

/// Induced subgraph on the given vertices, relabeled 1..|s| in increasing
/// order of original label.
InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& vertices);
Graph induced_subgraph_mask(const Graph& g, uint64_t mask);

bool is_connected(const Graph& g);
/// Connectivity of the subgraph induced by `mask` (nonempty).
bool mask_connected(const Graph& g, uint64_t mask);

std::vector<int> cut_vertices(const Graph& g);
/// Biconnected = connected with no cut vertex. Connected graphs on <= 2
/// vertices count as biconnected.
std::pair<bool, std::vector<int>> is_biconnected(const Graph& g);

/// A valid two-coloring (A, B) when one exists; vertex 1's side (and the
/// least vertex of every later component) goes to A.
std::optional<std::pair<std::vector<int>, std::vector<int>>> bipartition(const Graph& g);

int domination_number(const Graph& g);
bool domination_at_least(const Graph& g, int t);

bool has_triangle(const Graph& g);
int min_degree(const Graph& g);
int max_degree(const Graph& g);

/// True iff every k-subset of vertices induces a connected graph.
bool all_k_subsets_connected(const Graph& g, int k);

/// True iff g has a (not necessarily induced) subgraph isomorphic to the
/// spider with the given leg lengths. Center-first backtracking, longest
/// legs placed first.
bool contains_spider_subgraph(const Graph& g, std::vector<int> legs);

/// Calls f(mask) for every k-subset of {1..n}; stops early when f returns false.
template <typename F>
bool for_each_k_subset(int n, int k, F&& f) {
  if (k < 0 || k > n) return true;
  if (k == 0) return f(uint64_t{0});
  uint64_t sub = (uint64_t{1} << k) - 1;  // Gosper over bits 0..n-1
  const uint64_t limit = uint64_t{1} << n;
  while (sub < limit) {
    if (!f(sub << 1)) return false;  // vertex v lives at bit v
    uint64_t c = sub & -sub;
    uint64_t r = sub + c;
    sub = (((r ^ sub) >> 2) / c) | r;
  }
  return true;
}

}  // namespace fsg
