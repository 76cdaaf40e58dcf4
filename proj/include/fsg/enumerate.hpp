#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "fsg/graph.hpp"
#include "fsg/rng.hpp"

namespace fsg {

/// Canonical form for n <= 8: the lexicographically minimal adjacency matrix
/// over all vertex relabelings, packed row-major into a uint64 (most
/// significant bit = entry (1,1)). Integer order equals matrix lex order.
uint64_t canonical_code(const Graph& g);
Graph graph_from_code(int n, uint64_t code);
Graph canonical_graph(const Graph& g);
bool is_isomorphic(const Graph& g, const Graph& h);

/// One representative per isomorphism class, canonically labeled, in
/// increasing canonical-code order. n <= 8; larger n raises a capability
/// error pointing at enumerate_min_degree_family.
std::vector<Graph> enumerate_small_graphs(int n, const std::function<bool(const Graph&)>& filter = {});

/// All n-vertex graphs with minimum degree >= n-3 up to isomorphism; these
/// are exactly the complements of disjoint unions of paths and cycles, so
/// they can be generated for any n without isomorphism machinery.
std::vector<Graph> enumerate_min_degree_family(int n);

Graph random_graph(int n, Rng& rng);
Graph random_connected_graph(int n, Rng& rng);

}  // namespace fsg
