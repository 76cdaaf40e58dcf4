#pragma once

#include <cstdint>
#include <map>
#include <unordered_map>
#include <vector>

#include "fsg/fs_graph.hpp"
#include "fsg/rng.hpp"
#include "fsg/theorems.hpp"

namespace fsg {

/// Subset of a component's indexed edge set, viewed as a vector over GF(2).
struct CycleVector {
  std::vector<uint64_t> words;

  static CycleVector zero(size_t edge_count);
  void toggle(size_t e);
  bool test(size_t e) const;
  void xor_with(const CycleVector& other);
  bool is_zero() const;
  /// Lowest set index, or -1 when zero.
  long lowest_set() const;
  size_t weight() const;
  std::vector<uint32_t> edge_indices() const;

  bool operator==(const CycleVector&) const = default;
  bool operator<(const CycleVector& other) const { return words < other.words; }
};

/// Every vertex incident to an even number of selected edges?
bool is_even_degree_subgraph(const ExplicitComponent& c, const CycleVector& v);

/// |E| - |V| + 1; requires the component to be connected (always true for
/// components built by fs_component_of, but validated anyway).
int cycle_space_dimension(const ExplicitComponent& c);

/// One fundamental cycle per non-tree edge of a breadth-first spanning tree.
std::vector<CycleVector> fundamental_basis(const ExplicitComponent& c);

/// 4-cycles spanned by pairs of swaps on disjoint X-edges applicable at a
/// common vertex. Each square is emitted once.
std::vector<CycleVector> enumerate_squares(const ExplicitComponent& c);

/// 6-cycles arising from three people on consecutive cycle positions who are
/// pairwise adjacent in Y. Requires X to be the canonically labeled cycle.
std::vector<CycleVector> enumerate_hexagons(const ExplicitComponent& c);

struct CycleLimits {
  int max_length = 8;
  size_t max_edges = 50'000;
};

/// Independent oracle: all simple cycles of length <= max_length, each as its
/// vertex-index sequence starting at the least vertex, direction-normalized.
std::vector<std::vector<uint32_t>> enumerate_simple_cycles(const ExplicitComponent& c,
                                                           const CycleLimits& limits = {});

CycleVector cycle_vector_from_vertices(const ExplicitComponent& c,
                                       const std::vector<uint32_t>& cycle_vertices);

/// GF(2) rank by sparse elimination with pivot-by-lowest-index.
size_t gf2_rank(const std::vector<CycleVector>& rows);

/// rank(generators) == cycle space dimension; generators are validated
/// against the even-degree invariant first.
bool spans(const std::vector<CycleVector>& generators, const ExplicitComponent& c);

std::vector<uint32_t> bfs_distances(const ExplicitComponent& c, uint32_t source);

/// Memoizing provider of breadth-first distance arrays.
class DistanceOracle {
 public:
  explicit DistanceOracle(const ExplicitComponent& c) : c_(c) {}
  const std::vector<uint32_t>& from(uint32_t source);

 private:
  const ExplicitComponent& c_;
  std::unordered_map<uint32_t, std::vector<uint32_t>> cache_;
};

/// A walk (vertex-index sequence) is geodesic iff its edge count equals the
/// breadth-first distance between its endpoints.
bool is_geodesic(const ExplicitComponent& c, const std::vector<uint32_t>& walk_vertices);
bool check_label_distinctness(const std::vector<EdgeLabel>& labels);

/// The cyclic traversal of a simple cycle given as an edge set; validates
/// that the selection is connected with all degrees 2.
std::vector<uint32_t> cycle_vertex_order(const ExplicitComponent& c, const CycleVector& cycle);

std::map<EdgeLabel, int> cycle_label_multiplicity(const ExplicitComponent& c, const CycleVector& cycle);

/// For a simple cycle: do equal labels occur exactly at opposite edges?
bool opposite_label_check(const ExplicitComponent& c, const CycleVector& cycle);

bool is_isometric_cycle(const ExplicitComponent& c, const std::vector<uint32_t>& cycle_vertices,
                        DistanceOracle& distances);

/// Components of FS(Cycle_n, y) in rank order of their representatives.
std::vector<ExplicitComponent> cycle_fs_components(const Graph& y, const FsBudget& budget = {});

/// Spanning checks for squares/hexagons over every Y with domination number
/// at least 3 on n_min..n_max vertices, optionally plus the 8-vertex
/// dandelion run where squares alone must span.
SweepReport verify_isometric_spanning(int n_min = 5, int n_max = 7, bool include_dandelion_run = true);

/// Label propositions: repeated labels in every cycle, opposite labels in
/// isometric cycles (n <= cycles_n_max), distinct labels on breadth-first
/// geodesics (n <= geodesic_n_max).
SweepReport verify_cycle_propositions(int cycles_n_max = 6, int geodesic_n_max = 7,
                                      uint64_t seed = kDefaultSeed);

}  // namespace fsg
