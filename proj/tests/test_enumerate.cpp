#include <doctest.h>

#include <set>

#include "fsg/enumerate.hpp"
#include "fsg/errors.hpp"
#include "fsg/families.hpp"

using namespace fsg;

TEST_CASE("canonical code identifies isomorphic graphs") {
  CHECK(canonical_code(make_cycle(5)) == canonical_code(complement(make_cycle(5))));
  CHECK(canonical_code(make_path(4)) != canonical_code(make_star(4)));
  // relabeled fruit graph
  Graph f(6);
  f.add_edge(3, 5);
  f.add_edge(5, 1);
  f.add_edge(1, 6);
  f.add_edge(6, 2);
  f.add_edge(2, 3);
  f.add_edge(3, 4);
  CHECK(is_isomorphic(f, make_fruit_cycle(6)));
  CHECK(!is_isomorphic(f, make_cycle(6)));
}

TEST_CASE("canonical graph is a fixed point") {
  for (const Graph& g : {make_theta0(), make_fruit_cycle(7), complement(make_cycle(7))}) {
    Graph c = canonical_graph(g);
    CHECK(is_isomorphic(c, g));
    CHECK(canonical_graph(c) == c);
  }
}

TEST_CASE("small graph counts up to isomorphism") {
  CHECK(enumerate_small_graphs(1).size() == 1);
  CHECK(enumerate_small_graphs(2).size() == 2);
  CHECK(enumerate_small_graphs(3).size() == 4);
  CHECK(enumerate_small_graphs(4).size() == 11);
  CHECK(enumerate_small_graphs(5).size() == 34);
  CHECK(enumerate_small_graphs(6).size() == 156);
  CHECK(enumerate_small_graphs(7).size() == 1044);
  CHECK_THROWS_AS(enumerate_small_graphs(9), capability_error);
}

TEST_CASE("enumerated graphs are canonical and pairwise distinct") {
  for (int n = 1; n <= 6; ++n) {
    std::set<uint64_t> codes;
    for (const Graph& g : enumerate_small_graphs(n)) {
      CHECK(canonical_graph(g) == g);
      CHECK(codes.insert(canonical_code(g)).second);
    }
  }
}

TEST_CASE("enumeration filters") {
  auto biconnected4 = enumerate_small_graphs(4, [](const Graph& g) { return is_biconnected(g).first; });
  REQUIRE(biconnected4.size() == 3);
  // cycle, diamond, complete
  std::multiset<int> edge_counts;
  for (const Graph& g : biconnected4) edge_counts.insert(g.edge_count());
  CHECK(edge_counts == std::multiset<int>{4, 5, 6});

  // complement degrees: co(cycle_7) is 4-regular; co(fruit_7)'s hub drops to 3
  CHECK(min_degree(complement(make_cycle(7))) == 4);
  CHECK(min_degree(complement(make_fruit_cycle(7))) == 3);
  auto dense7 = enumerate_small_graphs(7, [](const Graph& g) { return min_degree(g) >= 3; });
  uint64_t co_cycle = canonical_code(complement(make_cycle(7)));
  uint64_t co_fruit = canonical_code(complement(make_fruit_cycle(7)));
  bool saw_cycle = false, saw_fruit = false;
  for (const Graph& g : dense7) {
    uint64_t code = canonical_code(g);
    saw_cycle = saw_cycle || code == co_cycle;
    saw_fruit = saw_fruit || code == co_fruit;
  }
  CHECK(saw_cycle);
  CHECK(saw_fruit);
}

TEST_CASE("minimum-degree family generator") {
  // complements of disjoint unions of paths and cycles
  auto family4 = enumerate_min_degree_family(4);
  for (const Graph& g : family4) CHECK(min_degree(g) >= 1);
  // cross-check against the generic enumerator
  for (int n = 3; n <= 7; ++n) {
    auto dedicated = enumerate_min_degree_family(n);
    std::set<uint64_t> dedicated_codes;
    for (const Graph& g : dedicated) {
      CHECK(min_degree(g) >= n - 3);
      CHECK(dedicated_codes.insert(canonical_code(g)).second);  // pairwise non-isomorphic
    }
    auto generic = enumerate_small_graphs(n, [n](const Graph& g) { return min_degree(g) >= n - 3; });
    std::set<uint64_t> generic_codes;
    for (const Graph& g : generic) generic_codes.insert(canonical_code(g));
    CHECK(dedicated_codes == generic_codes);
  }
  // works beyond the generic enumerator's range
  auto family12 = enumerate_min_degree_family(12);
  CHECK(family12.size() > 20);
  for (const Graph& g : family12) CHECK(min_degree(g) >= 9);
}

TEST_CASE("random graphs are reproducible under a seed") {
  Rng a(7), b(7);
  CHECK(random_graph(6, a) == random_graph(6, b));
  Rng c(9);
  Graph g = random_connected_graph(6, c);
  CHECK(is_connected(g));
}
