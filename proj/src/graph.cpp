#include "fsg/graph.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "fsg/errors.hpp"

namespace fsg {

namespace {
constexpr uint64_t bit(int v) { return uint64_t{1} << v; }
}  // namespace

Graph::Graph(int n) : n_(n), adj_(static_cast<size_t>(n) + 1, 0) {
  if (n < 1 || n > 62) {
    throw parameter_error("graph order must be in 1..62, got " + std::to_string(n));
  }
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Graph::check_vertex(int v) const {
  if (v < 1 || v > n_) {
    throw parameter_error("vertex " + std::to_string(v) + " out of range 1.." + std::to_string(n_));
  }
}

bool Graph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return (adj_[u] >> v) & 1;
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw parameter_error("self-loop at vertex " + std::to_string(u));
  adj_[u] |= bit(v);
  adj_[v] |= bit(u);
}

int Graph::degree(int v) const {
  check_vertex(v);
  return std::popcount(adj_[v]);
}

uint64_t Graph::neighbors_mask(int v) const {
  check_vertex(v);
  return adj_[v];
}

std::vector<int> Graph::neighbors(int v) const {
  std::vector<int> out;
  for (uint64_t m = neighbors_mask(v); m; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

uint64_t Graph::vertex_mask() const { return ((uint64_t{1} << n_) - 1) << 1; }

int Graph::edge_count() const {
  int total = 0;
  for (int v = 1; v <= n_; ++v) total += std::popcount(adj_[v]);
  return total / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 1; u <= n_; ++u) {
    for (uint64_t m = adj_[u] >> u >> 1; m; m &= m - 1) {
      out.emplace_back(u, u + 1 + std::countr_zero(m));
    }
  }
  return out;
}

Graph complement(const Graph& g) {
  Graph out(g.n());
  for (int u = 1; u <= g.n(); ++u) {
    for (int v = u + 1; v <= g.n(); ++v) {
      if (!g.has_edge(u, v)) out.add_edge(u, v);
    }
  }
  return out;
}

InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
  if (vertices.empty()) throw parameter_error("induced subgraph needs a nonempty vertex set");
  std::vector<int> sorted = vertices;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (sorted.size() != vertices.size()) throw parameter_error("duplicate vertex in induced subgraph set");
  for (int v : sorted) {
    if (v < 1 || v > g.n()) {
      throw parameter_error("vertex " + std::to_string(v) + " out of range 1.." + std::to_string(g.n()));
    }
  }
  Graph sub(static_cast<int>(sorted.size()));
  for (size_t i = 0; i < sorted.size(); ++i) {
    for (size_t j = i + 1; j < sorted.size(); ++j) {
      if (g.has_edge(sorted[i], sorted[j])) sub.add_edge(static_cast<int>(i) + 1, static_cast<int>(j) + 1);
    }
  }
  return {std::move(sub), std::move(sorted)};
}

Graph induced_subgraph_mask(const Graph& g, uint64_t mask) {
  std::vector<int> vs;
  for (uint64_t m = mask; m; m &= m - 1) vs.push_back(std::countr_zero(m));
  return induced_subgraph(g, vs).graph;
}

bool mask_connected(const Graph& g, uint64_t mask) {
  if (mask == 0) throw parameter_error("connectivity of an empty vertex set is undefined");
  uint64_t reach = mask & -mask;
  for (;;) {
    uint64_t next = reach;
    for (uint64_t m = reach; m; m &= m - 1) next |= g.neighbors_mask(std::countr_zero(m)) & mask;
    if (next == reach) break;
    reach = next;
  }
  return reach == mask;
}

bool is_connected(const Graph& g) { return mask_connected(g, g.vertex_mask()); }

std::vector<int> cut_vertices(const Graph& g) {
  std::vector<int> cuts;
  if (g.n() <= 2 || !is_connected(g)) return cuts;
  for (int v = 1; v <= g.n(); ++v) {
    uint64_t rest = g.vertex_mask() & ~bit(v);
    if (!mask_connected(g, rest)) cuts.push_back(v);
  }
  return cuts;
}

std::pair<bool, std::vector<int>> is_biconnected(const Graph& g) {
  if (!is_connected(g)) return {false, {}};
  std::vector<int> cuts = cut_vertices(g);
  return {cuts.empty(), cuts};
}

std::optional<std::pair<std::vector<int>, std::vector<int>>> bipartition(const Graph& g) {
  std::vector<int> color(static_cast<size_t>(g.n()) + 1, -1);
  std::vector<int> stack;
  for (int s = 1; s <= g.n(); ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    stack.push_back(s);
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int v : g.neighbors(u)) {
        if (color[v] < 0) {
          color[v] = 1 - color[u];
          stack.push_back(v);
        } else if (color[v] == color[u]) {
          return std::nullopt;
        }
      }
    }
  }
  std::vector<int> a, b;
  for (int v = 1; v <= g.n(); ++v) (color[v] == 0 ? a : b).push_back(v);
  return std::make_pair(std::move(a), std::move(b));
}

namespace {

bool has_dominating_set_of_size(const Graph& g, int s) {
  const uint64_t full = g.vertex_mask();
  std::vector<uint64_t> closed(static_cast<size_t>(g.n()) + 1);
  for (int v = 1; v <= g.n(); ++v) closed[v] = g.neighbors_mask(v) | bit(v);
  return !for_each_k_subset(g.n(), s, [&](uint64_t sub) {
    uint64_t covered = 0;
    for (uint64_t m = sub; m; m &= m - 1) covered |= closed[std::countr_zero(m)];
    return covered != full;  // keep searching while not dominating
  });
}

}  // namespace

int domination_number(const Graph& g) {
  for (int s = 1; s <= g.n(); ++s) {
    if (has_dominating_set_of_size(g, s)) return s;
  }
  return g.n();
}

bool domination_at_least(const Graph& g, int t) {
  for (int s = 1; s < t; ++s) {
    if (has_dominating_set_of_size(g, s)) return false;
  }
  return true;
}

bool has_triangle(const Graph& g) {
  for (auto [u, v] : g.edges()) {
    if (g.neighbors_mask(u) & g.neighbors_mask(v)) return true;
  }
  return false;
}

int min_degree(const Graph& g) {
  int d = g.n();
  for (int v = 1; v <= g.n(); ++v) d = std::min(d, g.degree(v));
  return d;
}

int max_degree(const Graph& g) {
  int d = 0;
  for (int v = 1; v <= g.n(); ++v) d = std::max(d, g.degree(v));
  return d;
}

bool all_k_subsets_connected(const Graph& g, int k) {
  if (k < 1 || k > g.n()) throw parameter_error("subset size must be in 1..n");
  return for_each_k_subset(g.n(), k, [&](uint64_t sub) { return mask_connected(g, sub); });
}

namespace {

struct SpiderSearch {
  const Graph& g;
  const std::vector<int>& legs;
  int center = 0;
  uint64_t used = 0;

  // Extends the current leg by `remaining` more vertices, then places the rest.
  bool extend_leg(int from, int remaining, size_t leg_index, int leg_first) {
    if (remaining == 0) return place_leg(leg_index + 1, leg_first);
    for (uint64_t m = g.neighbors_mask(from) & ~used; m; m &= m - 1) {
      int v = std::countr_zero(m);
      used |= uint64_t{1} << v;
      if (extend_leg(v, remaining - 1, leg_index, leg_first)) return true;
      used &= ~(uint64_t{1} << v);
    }
    return false;
  }

  bool place_leg(size_t leg_index, int prev_first) {
    if (leg_index == legs.size()) return true;
    for (uint64_t m = g.neighbors_mask(center) & ~used; m; m &= m - 1) {
      int v = std::countr_zero(m);
      // equal-length legs are interchangeable: force increasing first vertices
      if (leg_index > 0 && legs[leg_index] == legs[leg_index - 1] && v < prev_first) continue;
      used |= uint64_t{1} << v;
      if (extend_leg(v, legs[leg_index] - 1, leg_index, v)) return true;
      used &= ~(uint64_t{1} << v);
    }
    return false;
  }
};

}  // namespace

bool contains_spider_subgraph(const Graph& g, std::vector<int> legs) {
  if (legs.empty()) throw parameter_error("spider needs at least one leg");
  for (int len : legs) {
    if (len < 1) throw parameter_error("spider leg lengths must be positive");
  }
  std::sort(legs.rbegin(), legs.rend());
  int total = 1;
  for (int len : legs) total += len;
  if (total > g.n()) return false;
  const int k = static_cast<int>(legs.size());
  for (int c = 1; c <= g.n(); ++c) {
    if (g.degree(c) < k) continue;
    SpiderSearch search{g, legs, c, uint64_t{1} << c};
    if (search.place_leg(0, 0)) return true;
  }
  return false;
}

}  // namespace fsg
