#include <doctest.h>

#include <algorithm>
#include <functional>

#include "fsg/enumerate.hpp"
#include "fsg/errors.hpp"
#include "fsg/families.hpp"
#include "fsg/graph.hpp"
#include "fsg/rng.hpp"

using namespace fsg;

TEST_CASE("graph basics") {
  Graph g(4);
  g.add_edge(1, 2);
  g.add_edge(2, 4);
  CHECK(g.has_edge(2, 1));
  CHECK(g.has_edge(4, 2));
  CHECK(!g.has_edge(1, 4));
  CHECK(g.degree(2) == 2);
  CHECK(g.edge_count() == 2);
  CHECK(g.edges() == std::vector<std::pair<int, int>>{{1, 2}, {2, 4}});
  CHECK_THROWS_AS(g.add_edge(2, 2), parameter_error);
  CHECK_THROWS_AS(g.add_edge(0, 1), parameter_error);
  CHECK_THROWS_AS(g.has_edge(1, 5), parameter_error);
}

TEST_CASE("complement") {
  CHECK(complement(make_complete(4)).edge_count() == 0);

  Graph c6 = make_cycle(6);
  CHECK(complement(complement(c6)) == c6);

  // the 5-cycle is self-complementary up to relabeling
  CHECK(is_isomorphic(complement(make_cycle(5)), make_cycle(5)));
}

TEST_CASE("complement is an involution on all small graphs") {
  for (int n = 1; n <= 5; ++n) {
    for (const Graph& g : enumerate_small_graphs(n)) {
      CHECK(complement(complement(g)) == g);
    }
  }
}

TEST_CASE("induced subgraph") {
  auto sub = induced_subgraph(make_path(5), {1, 2, 3});
  CHECK(sub.graph == make_path(3));
  CHECK(sub.original == std::vector<int>{1, 2, 3});

  CHECK(induced_subgraph(make_cycle(6), {1, 3, 5}).graph.edge_count() == 0);

  // whole vertex set gives the graph back with the identity relabeling
  Graph theta = make_theta0();
  auto whole = induced_subgraph(theta, {1, 2, 3, 4, 5, 6, 7});
  CHECK(whole.graph == theta);

  // deleting a degree-3 hub breaks all three hub-to-hub paths: what is left
  // is a spider (a tree), not a graph with a cycle
  auto no_hub = induced_subgraph(theta, {2, 3, 4, 5, 6, 7});
  CHECK(is_connected(no_hub.graph));
  CHECK(no_hub.graph.edge_count() == no_hub.graph.n() - 1);
  CHECK(is_isomorphic(no_hub.graph, make_spider({2, 2, 1})));

  CHECK_THROWS_AS(induced_subgraph(theta, {}), parameter_error);
  CHECK_THROWS_AS(induced_subgraph(theta, {8}), parameter_error);
}

TEST_CASE("connectivity and biconnectivity") {
  auto [bic_p4, cuts_p4] = is_biconnected(make_path(4));
  CHECK(!bic_p4);
  CHECK(cuts_p4 == std::vector<int>{2, 3});

  CHECK(is_biconnected(make_cycle(5)).first);
  CHECK(is_biconnected(make_theta0()).first);

  CHECK(is_biconnected(make_complete(2)).first);  // convention for n <= 2
  Graph two(2);
  CHECK(!is_biconnected(two).first);

  CHECK(is_connected(make_path(1)));
  Graph disconnected(3);
  disconnected.add_edge(1, 2);
  CHECK(!is_connected(disconnected));
  CHECK(cut_vertices(disconnected).empty());
}

TEST_CASE("biconnected implies connected and min degree 2") {
  for (int n = 3; n <= 6; ++n) {
    for (const Graph& g : enumerate_small_graphs(n)) {
      if (is_biconnected(g).first) {
        CHECK(is_connected(g));
        CHECK(min_degree(g) >= 2);
      }
    }
  }
}

TEST_CASE("bipartition") {
  auto even_cycle = bipartition(make_cycle(6));
  REQUIRE(even_cycle.has_value());
  CHECK(even_cycle->first == std::vector<int>{1, 3, 5});
  CHECK(even_cycle->second == std::vector<int>{2, 4, 6});

  CHECK(!bipartition(make_cycle(5)).has_value());

  // theta0's hub-to-hub paths have lengths 2, 3, 3, so it has 5-cycles
  CHECK(!bipartition(make_theta0()).has_value());

  // disconnected graphs get a componentwise-consistent bipartition
  Graph two_edges(4);
  two_edges.add_edge(1, 2);
  two_edges.add_edge(3, 4);
  auto parts = bipartition(two_edges);
  REQUIRE(parts.has_value());
  CHECK(parts->first == std::vector<int>{1, 3});
}

TEST_CASE("domination") {
  CHECK(domination_number(make_star(8)) == 1);
  CHECK(domination_number(make_cycle(6)) == 2);
  CHECK(domination_number(make_dandelion(3, 8)) == 3);
  CHECK(domination_at_least(make_dandelion(3, 8), 3));
  CHECK(!domination_at_least(make_cycle(6), 3));
  Graph edgeless(4);
  CHECK(domination_number(edgeless) == 4);
}

TEST_CASE("domination number is 1 exactly for graphs with a universal vertex") {
  for (int n = 1; n <= 5; ++n) {
    for (const Graph& g : enumerate_small_graphs(n)) {
      bool universal = false;
      for (int v = 1; v <= n; ++v) universal = universal || g.degree(v) == n - 1;
      CHECK((domination_number(g) == 1) == universal);
    }
  }
}

TEST_CASE("triangles and degrees") {
  CHECK(has_triangle(make_complete(3)));
  CHECK(!has_triangle(make_dandelion(3, 8)));
  CHECK(!has_triangle(make_cycle(6)));
  for (int n : {5, 6, 8}) {
    CHECK(min_degree(complement(make_cycle(n))) == n - 3);
  }
  CHECK(max_degree(make_star(7)) == 6);
}

TEST_CASE("all k-subsets connected") {
  CHECK(all_k_subsets_connected(make_complete(5), 3));
  CHECK(!all_k_subsets_connected(make_path(5), 2));
  CHECK(all_k_subsets_connected(complement(make_cycle(7)), 4));
  CHECK_THROWS_AS(all_k_subsets_connected(make_path(3), 0), parameter_error);
}

TEST_CASE("all k-subsets connected forces min degree at least n-k+1") {
  for (int n = 4; n <= 6; ++n) {
    for (const Graph& g : enumerate_small_graphs(n)) {
      for (int k = 2; k < n; ++k) {
        if (all_k_subsets_connected(g, k)) CHECK(min_degree(g) >= n - k + 1);
      }
    }
  }
}

TEST_CASE("spider subgraph search") {
  CHECK(contains_spider_subgraph(make_star(9), {1, 1, 1, 1, 1, 1}));
  CHECK(!contains_spider_subgraph(make_cycle(8), {1, 1, 1}));
  CHECK(contains_spider_subgraph(make_theta0(), {2, 2, 1}));
  CHECK(contains_spider_subgraph(make_spider({3, 2, 2}), {3, 2, 2}));
  CHECK(contains_spider_subgraph(make_spider({3, 2, 2}), {2, 2, 2}));
  CHECK(!contains_spider_subgraph(make_spider({3, 2, 2}), {3, 3, 1}));
  CHECK(!contains_spider_subgraph(make_path(9), {2, 2, 2}));
  CHECK(contains_spider_subgraph(make_complete(7), {2, 2, 2}));
}

namespace {

// Independent oracle: try every injective map of the pattern's vertices
// into g and check that every pattern edge lands on a g edge.
bool embeds_by_brute_force(const Graph& g, const Graph& pattern) {
  std::vector<int> image(static_cast<size_t>(pattern.n()) + 1, 0);
  uint64_t used = 0;
  auto edges = pattern.edges();
  std::function<bool(int)> place = [&](int v) -> bool {
    if (v > pattern.n()) return true;
    for (int target = 1; target <= g.n(); ++target) {
      if ((used >> target) & 1) continue;
      image[v] = target;
      bool ok = true;
      for (auto [a, b] : edges) {
        if (b == v && !g.has_edge(image[a], target)) {  // a < b, so image[a] is set
          ok = false;
          break;
        }
      }
      if (ok) {
        used |= uint64_t{1} << target;
        if (place(v + 1)) return true;
        used &= ~(uint64_t{1} << target);
      }
    }
    return false;
  };
  return place(1);
}

}  // namespace

TEST_CASE("spider subgraph search agrees with brute-force embedding") {
  Rng rng(kDefaultSeed);
  for (int trial = 0; trial < 30; ++trial) {
    Graph g = random_graph(7, rng);
    for (const std::vector<int>& legs :
         {std::vector<int>{2, 1, 1}, {2, 2, 2}, {3, 2, 1}, {1, 1, 1, 1}}) {
      CHECK(contains_spider_subgraph(g, legs) == embeds_by_brute_force(g, make_spider(legs)));
    }
  }
}
