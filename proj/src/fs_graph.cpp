#include "fsg/fs_graph.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>
#include <unordered_set>

#include "fsg/enumerate.hpp"
#include "fsg/errors.hpp"

namespace fsg {

EdgeLabel::EdgeLabel(int y1, int y2) : lo(std::min(y1, y2)), hi(std::max(y1, y2)) {
  if (y1 == y2) throw parameter_error("edge label needs two distinct vertices");
}

EdgeLabel EdgeLabel::symmetric_difference(const EdgeLabel& o) const {
  if (shared_count(o) != 1) throw parameter_error("symmetric difference of labels needs exactly one shared vertex");
  int common = o.contains(lo) ? lo : hi;
  return EdgeLabel(other(common), o.other(common));
}

int EdgeLabel::shared_count(const EdgeLabel& o) const {
  return static_cast<int>(o.contains(lo)) + static_cast<int>(o.contains(hi));
}

std::string to_string(const EdgeLabel& label) {
  return std::to_string(label.lo) + "-" + std::to_string(label.hi);
}

namespace {

void check_same_order(const Graph& x, const Graph& y) {
  if (x.n() != y.n()) {
    throw parameter_error("FS(X,Y) needs |V(X)| = |V(Y)|; got " + std::to_string(x.n()) + " and " +
                          std::to_string(y.n()));
  }
}

void check_budget(int n, const FsBudget& budget) {
  uint64_t total = factorial(n);
  if (total > budget.max_vertices) {
    throw capability_error("census over " + std::to_string(total) + " vertices exceeds the budget of " +
                           std::to_string(budget.max_vertices) + " (needs about " + std::to_string(8 * total) +
                           " bytes); raise the budget to proceed");
  }
}

}  // namespace

std::vector<std::pair<Permutation, EdgeLabel>> fs_neighbors(const Graph& x, const Graph& y,
                                                            const Permutation& sigma) {
  check_same_order(x, y);
  if (sigma.n() != x.n()) throw parameter_error("permutation order does not match the graphs");
  std::vector<std::pair<Permutation, EdgeLabel>> out;
  for (auto [a, b] : x.edges()) {
    int ya = sigma.of(a), yb = sigma.of(b);
    if (y.has_edge(ya, yb)) {
      out.emplace_back(sigma.swapped_positions(a, b), EdgeLabel(ya, yb));
    }
  }
  return out;
}

namespace {

struct UnionFind {
  std::vector<uint32_t> parent;

  explicit UnionFind(uint64_t n) : parent(n) {
    for (uint64_t i = 0; i < n; ++i) parent[i] = static_cast<uint32_t>(i);
  }

  uint32_t find(uint32_t v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];  // path halving
      v = parent[v];
    }
    return v;
  }

  // Smaller root wins, so every root is the minimum rank of its component.
  void unite(uint32_t a, uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a < b) {
      parent[b] = a;
    } else {
      parent[a] = b;
    }
  }
};

}  // namespace

ComponentCensus fs_components(const Graph& x, const Graph& y, const FsBudget& budget) {
  check_same_order(x, y);
  check_budget(x.n(), budget);
  const int n = x.n();
  const uint64_t total = factorial(n);
  const auto xedges = x.edges();

  UnionFind uf(total);
  std::vector<uint8_t> p(static_cast<size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) p[i] = static_cast<uint8_t>(i);
  uint64_t rank = 0;
  do {
    for (auto [a, b] : xedges) {
      int ya = p[a], yb = p[b];
      if (ya < yb && y.has_edge(ya, yb)) {  // each FS edge once, from its lower label side
        std::swap(p[a], p[b]);
        uint64_t other = rank_of_buffer(p.data(), n);
        std::swap(p[a], p[b]);
        uf.unite(static_cast<uint32_t>(rank), static_cast<uint32_t>(other));
      }
    }
    ++rank;
  } while (std::next_permutation(p.begin() + 1, p.end()));

  std::unordered_map<uint32_t, uint64_t> size_of_root;
  for (uint64_t r = 0; r < total; ++r) ++size_of_root[uf.find(static_cast<uint32_t>(r))];

  std::vector<uint32_t> roots;
  roots.reserve(size_of_root.size());
  for (auto& [root, _] : size_of_root) roots.push_back(root);
  std::sort(roots.begin(), roots.end());

  ComponentCensus census;
  census.count = roots.size();
  census.reps.reserve(roots.size());
  for (uint32_t root : roots) {
    census.sizes.push_back(size_of_root[root]);
    census.reps.push_back(perm_unrank(n, root));
  }
  std::sort(census.sizes.begin(), census.sizes.end());
  return census;
}

bool fs_is_connected(const Graph& x, const Graph& y, const FsBudget& budget) {
  check_same_order(x, y);
  check_budget(x.n(), budget);
  const int n = x.n();
  const uint64_t total = factorial(n);
  const auto xedges = x.edges();

  std::vector<uint64_t> visited((total + 63) / 64, 0);
  auto test_and_set = [&](uint64_t r) {
    uint64_t& word = visited[r >> 6];
    uint64_t bit = uint64_t{1} << (r & 63);
    if (word & bit) return true;
    word |= bit;
    return false;
  };

  std::vector<uint32_t> queue;
  queue.reserve(1024);
  test_and_set(0);
  queue.push_back(0);
  uint64_t seen = 1;
  std::vector<uint8_t> p;
  for (size_t head = 0; head < queue.size(); ++head) {
    p = perm_unrank(n, queue[head]).raw();
    for (auto [a, b] : xedges) {
      if (!y.has_edge(p[a], p[b])) continue;
      std::swap(p[a], p[b]);
      uint64_t other = rank_of_buffer(p.data(), n);
      std::swap(p[a], p[b]);
      if (!test_and_set(other)) {
        queue.push_back(static_cast<uint32_t>(other));
        ++seen;
      }
    }
  }
  return seen == total;
}

StarPrediction star_components_predicted(const Graph& y) {
  const int n = y.n();
  if (n < 3) throw parameter_error("star component prediction needs n >= 3");
  if (!is_biconnected(y).first) {
    return {StarPredictionKind::NotBiconnected, 0, 0};
  }
  if (n == 7 && is_isomorphic(y, [] {
        Graph t(7);
        for (int i = 1; i < 6; ++i) t.add_edge(i, i + 1);
        t.add_edge(6, 1);
        t.add_edge(1, 7);
        t.add_edge(7, 4);
        return t;
      }())) {
    return {StarPredictionKind::ThetaSix, 6, factorial(7) / 6};
  }
  bool two_regular = true;
  for (int v = 1; v <= n; ++v) two_regular = two_regular && y.degree(v) == 2;
  if (two_regular) {
    return {StarPredictionKind::CyclicOrders, factorial(n - 2), static_cast<uint64_t>(n) * (n - 1)};
  }
  if (bipartition(y)) {
    return {StarPredictionKind::TwoHalves, 2, factorial(n) / 2};
  }
  return {StarPredictionKind::Connected, 1, factorial(n)};
}

namespace {

uint64_t to_mask(const std::vector<int>& vertices, int n) {
  uint64_t mask = 0;
  for (int v : vertices) {
    if (v < 1 || v > n) throw parameter_error("bipartition side vertex out of range");
    mask |= uint64_t{1} << v;
  }
  return mask;
}

void check_bipartition_side(const Graph& g, uint64_t side) {
  for (auto [u, v] : g.edges()) {
    bool cu = (side >> u) & 1, cv = (side >> v) & 1;
    if (cu == cv) throw parameter_error("given vertex set is not one side of a bipartition");
  }
}

}  // namespace

int bipartite_parity(const Graph& x, const Graph& y, const std::vector<int>& a_x,
                     const std::vector<int>& a_y, const Permutation& sigma) {
  check_same_order(x, y);
  if (sigma.n() != x.n()) throw parameter_error("permutation order does not match the graphs");
  uint64_t mask_ax = to_mask(a_x, x.n());
  uint64_t mask_ay = to_mask(a_y, y.n());
  check_bipartition_side(x, mask_ax);
  check_bipartition_side(y, mask_ay);
  int crossings = 0;
  for (uint64_t m = mask_ax; m; m &= m - 1) {
    int v = std::countr_zero(m);
    if ((mask_ay >> sigma.of(v)) & 1) ++crossings;
  }
  int sign_term = perm_sign(sigma) == 1 ? 1 : 0;
  return (crossings + sign_term) & 1;
}

size_t ExplicitComponent::index_of_rank(uint64_t rank) const {
  auto it = std::lower_bound(ranks.begin(), ranks.end(), rank);
  if (it == ranks.end() || *it != rank) throw parameter_error("rank is not a vertex of this component");
  return static_cast<size_t>(it - ranks.begin());
}

ExplicitComponent fs_component_of(const Graph& x, const Graph& y, const Permutation& sigma,
                                  const FsBudget& budget) {
  check_same_order(x, y);
  check_budget(x.n(), budget);
  if (sigma.n() != x.n()) throw parameter_error("permutation order does not match the graphs");
  const int n = x.n();
  const auto xedges = x.edges();

  std::unordered_set<uint64_t> visited;
  std::vector<uint64_t> queue;
  uint64_t start = perm_rank(sigma);
  visited.insert(start);
  queue.push_back(start);
  for (size_t head = 0; head < queue.size(); ++head) {
    std::vector<uint8_t> p = perm_unrank(n, queue[head]).raw();
    for (auto [a, b] : xedges) {
      if (!y.has_edge(p[a], p[b])) continue;
      std::swap(p[a], p[b]);
      uint64_t other = rank_of_buffer(p.data(), n);
      std::swap(p[a], p[b]);
      if (visited.insert(other).second) queue.push_back(other);
    }
  }

  ExplicitComponent comp{x, y, {}, {}, {}, {}, {}};
  comp.ranks.assign(visited.begin(), visited.end());
  std::sort(comp.ranks.begin(), comp.ranks.end());
  comp.vertices.reserve(comp.ranks.size());
  for (uint64_t r : comp.ranks) comp.vertices.push_back(perm_unrank(n, r));

  for (size_t i = 0; i < comp.vertices.size(); ++i) {
    std::vector<uint8_t> p = comp.vertices[i].raw();
    for (auto [a, b] : xedges) {
      if (!y.has_edge(p[a], p[b])) continue;
      EdgeLabel label(p[a], p[b]);
      std::swap(p[a], p[b]);
      uint64_t other = rank_of_buffer(p.data(), n);
      std::swap(p[a], p[b]);
      size_t j = comp.index_of_rank(other);
      if (i < j) comp.edges.push_back({static_cast<uint32_t>(i), static_cast<uint32_t>(j), label});
    }
  }
  std::sort(comp.edges.begin(), comp.edges.end(),
            [](const ComponentEdge& a, const ComponentEdge& b) { return std::tie(a.u, a.v) < std::tie(b.u, b.v); });

  // CSR adjacency
  const size_t vcount = comp.vertices.size();
  std::vector<uint32_t> degree(vcount, 0);
  for (const auto& e : comp.edges) {
    ++degree[e.u];
    ++degree[e.v];
  }
  comp.adj_offsets.assign(vcount + 1, 0);
  for (size_t i = 0; i < vcount; ++i) comp.adj_offsets[i + 1] = comp.adj_offsets[i] + degree[i];
  comp.adj.resize(comp.adj_offsets.back());
  std::vector<uint32_t> cursor(comp.adj_offsets.begin(), comp.adj_offsets.end() - 1);
  for (uint32_t e = 0; e < comp.edges.size(); ++e) {
    const auto& edge = comp.edges[e];
    comp.adj[cursor[edge.u]++] = {edge.v, e};
    comp.adj[cursor[edge.v]++] = {edge.u, e};
  }
  return comp;
}

}  // namespace fsg
