#include "fsg/cycle_space.hpp"

#include <algorithm>
#include <bit>
#include <limits>

#include "fsg/errors.hpp"
#include "fsg/families.hpp"

namespace fsg {

CycleVector CycleVector::zero(size_t edge_count) { return {std::vector<uint64_t>((edge_count + 63) / 64, 0)}; }

void CycleVector::toggle(size_t e) { words[e >> 6] ^= uint64_t{1} << (e & 63); }

bool CycleVector::test(size_t e) const { return (words[e >> 6] >> (e & 63)) & 1; }

void CycleVector::xor_with(const CycleVector& other) {
  for (size_t i = 0; i < words.size(); ++i) words[i] ^= other.words[i];
}

bool CycleVector::is_zero() const {
  for (uint64_t w : words) {
    if (w) return false;
  }
  return true;
}

long CycleVector::lowest_set() const {
  for (size_t i = 0; i < words.size(); ++i) {
    if (words[i]) return static_cast<long>(i * 64 + std::countr_zero(words[i]));
  }
  return -1;
}

size_t CycleVector::weight() const {
  size_t total = 0;
  for (uint64_t w : words) total += static_cast<size_t>(std::popcount(w));
  return total;
}

std::vector<uint32_t> CycleVector::edge_indices() const {
  std::vector<uint32_t> out;
  for (size_t i = 0; i < words.size(); ++i) {
    for (uint64_t w = words[i]; w; w &= w - 1) {
      out.push_back(static_cast<uint32_t>(i * 64 + std::countr_zero(w)));
    }
  }
  return out;
}

bool is_even_degree_subgraph(const ExplicitComponent& c, const CycleVector& v) {
  std::vector<uint32_t> incidence(c.vertices.size(), 0);
  for (uint32_t e : v.edge_indices()) {
    ++incidence[c.edges[e].u];
    ++incidence[c.edges[e].v];
  }
  for (uint32_t d : incidence) {
    if (d % 2) return false;
  }
  return true;
}

namespace {

void check_connected_component(const ExplicitComponent& c) {
  if (c.vertices.empty()) throw parameter_error("component has no vertices");
  std::vector<char> seen(c.vertices.size(), 0);
  std::vector<uint32_t> queue{0};
  seen[0] = 1;
  size_t count = 1;
  for (size_t head = 0; head < queue.size(); ++head) {
    uint32_t v = queue[head];
    for (uint32_t a = c.adj_offsets[v]; a < c.adj_offsets[v + 1]; ++a) {
      uint32_t w = c.adj[a].first;
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        queue.push_back(w);
      }
    }
  }
  if (count != c.vertices.size()) throw parameter_error("component is not connected");
}

struct EdgeIndexMap {
  std::unordered_map<uint64_t, uint32_t> map;

  explicit EdgeIndexMap(const ExplicitComponent& c) {
    map.reserve(c.edges.size() * 2);
    for (uint32_t e = 0; e < c.edges.size(); ++e) {
      map.emplace((uint64_t{c.edges[e].u} << 32) | c.edges[e].v, e);
    }
  }

  uint32_t at(uint32_t u, uint32_t v) const {
    if (u > v) std::swap(u, v);
    auto it = map.find((uint64_t{u} << 32) | v);
    if (it == map.end()) throw invariant_violation("missing component edge");
    return it->second;
  }
};

}  // namespace

int cycle_space_dimension(const ExplicitComponent& c) {
  check_connected_component(c);
  return static_cast<int>(c.edges.size()) - static_cast<int>(c.vertices.size()) + 1;
}

std::vector<CycleVector> fundamental_basis(const ExplicitComponent& c) {
  check_connected_component(c);
  const size_t vcount = c.vertices.size();
  constexpr uint32_t kNone = std::numeric_limits<uint32_t>::max();
  std::vector<uint32_t> parent_edge(vcount, kNone);
  std::vector<uint32_t> parent(vcount, kNone);
  std::vector<uint32_t> depth(vcount, 0);
  std::vector<char> visited(vcount, 0);
  std::vector<char> tree_edge(c.edges.size(), 0);
  std::vector<uint32_t> queue{0};
  visited[0] = 1;
  for (size_t head = 0; head < queue.size(); ++head) {
    uint32_t v = queue[head];
    for (uint32_t a = c.adj_offsets[v]; a < c.adj_offsets[v + 1]; ++a) {
      auto [w, e] = c.adj[a];
      if (!visited[w]) {
        visited[w] = 1;
        parent[w] = v;
        parent_edge[w] = e;
        depth[w] = depth[v] + 1;
        tree_edge[e] = 1;
        queue.push_back(w);
      }
    }
  }

  std::vector<CycleVector> basis;
  for (uint32_t e = 0; e < c.edges.size(); ++e) {
    if (tree_edge[e]) continue;
    CycleVector vec = CycleVector::zero(c.edges.size());
    vec.toggle(e);
    uint32_t u = c.edges[e].u, v = c.edges[e].v;
    while (depth[u] > depth[v]) {
      vec.toggle(parent_edge[u]);
      u = parent[u];
    }
    while (depth[v] > depth[u]) {
      vec.toggle(parent_edge[v]);
      v = parent[v];
    }
    while (u != v) {
      vec.toggle(parent_edge[u]);
      vec.toggle(parent_edge[v]);
      u = parent[u];
      v = parent[v];
    }
    basis.push_back(std::move(vec));
  }
  return basis;
}

namespace {

std::vector<CycleVector> dedupe(std::vector<CycleVector> vectors) {
  std::sort(vectors.begin(), vectors.end());
  vectors.erase(std::unique(vectors.begin(), vectors.end()), vectors.end());
  return vectors;
}

void require_canonical_cycle_x(const ExplicitComponent& c) {
  if (c.x != make_cycle(c.x.n())) {
    throw parameter_error("this enumeration needs X to be the canonically labeled cycle");
  }
}

}  // namespace

std::vector<CycleVector> enumerate_squares(const ExplicitComponent& c) {
  EdgeIndexMap edge_index(c);
  const auto xedges = c.x.edges();
  std::vector<CycleVector> squares;
  std::vector<std::pair<int, int>> valid;
  for (uint32_t i = 0; i < c.vertices.size(); ++i) {
    const Permutation& sigma = c.vertices[i];
    valid.clear();
    for (auto [a, b] : xedges) {
      if (c.y.has_edge(sigma.of(a), sigma.of(b))) valid.emplace_back(a, b);
    }
    for (size_t s = 0; s < valid.size(); ++s) {
      for (size_t t = s + 1; t < valid.size(); ++t) {
        auto [a, b] = valid[s];
        auto [cc, d] = valid[t];
        if (a == cc || a == d || b == cc || b == d) continue;  // swaps must be disjoint
        uint64_t r_e = perm_rank(sigma.swapped_positions(a, b));
        uint64_t r_f = perm_rank(sigma.swapped_positions(cc, d));
        uint64_t r_ef = perm_rank(sigma.swapped_positions(a, b).swapped_positions(cc, d));
        uint32_t ie = static_cast<uint32_t>(c.index_of_rank(r_e));
        uint32_t iff = static_cast<uint32_t>(c.index_of_rank(r_f));
        uint32_t ief = static_cast<uint32_t>(c.index_of_rank(r_ef));
        if (i > ie || i > iff || i > ief) continue;  // emit from the least corner only
        CycleVector vec = CycleVector::zero(c.edges.size());
        vec.toggle(edge_index.at(i, ie));
        vec.toggle(edge_index.at(i, iff));
        vec.toggle(edge_index.at(ie, ief));
        vec.toggle(edge_index.at(iff, ief));
        squares.push_back(std::move(vec));
      }
    }
  }
  return dedupe(std::move(squares));
}

std::vector<CycleVector> enumerate_hexagons(const ExplicitComponent& c) {
  require_canonical_cycle_x(c);
  EdgeIndexMap edge_index(c);
  const int n = c.x.n();
  std::vector<CycleVector> hexagons;
  for (uint32_t i = 0; i < c.vertices.size(); ++i) {
    const Permutation& sigma = c.vertices[i];
    for (int p = 1; p <= n; ++p) {
      int q = p % n + 1;
      int r = q % n + 1;
      int u = sigma.of(p), v = sigma.of(q), w = sigma.of(r);
      if (!c.y.has_edge(u, v) || !c.y.has_edge(v, w) || !c.y.has_edge(u, w)) continue;
      // braid walk: alternate swaps on (p,q) and (q,r); six steps return home
      CycleVector vec = CycleVector::zero(c.edges.size());
      Permutation cur = sigma;
      uint32_t cur_idx = i;
      bool least_corner = true;
      for (int step = 0; step < 6; ++step) {
        Permutation next = (step % 2 == 0) ? cur.swapped_positions(p, q) : cur.swapped_positions(q, r);
        uint32_t next_idx = static_cast<uint32_t>(c.index_of_rank(perm_rank(next)));
        least_corner = least_corner && i <= next_idx;
        vec.toggle(edge_index.at(cur_idx, next_idx));
        cur = std::move(next);
        cur_idx = next_idx;
      }
      if (cur_idx != i) throw invariant_violation("braid walk failed to close");
      if (least_corner) hexagons.push_back(std::move(vec));
    }
  }
  return dedupe(std::move(hexagons));
}

std::vector<std::vector<uint32_t>> enumerate_simple_cycles(const ExplicitComponent& c,
                                                           const CycleLimits& limits) {
  if (c.edges.size() > limits.max_edges) {
    throw capability_error("component has " + std::to_string(c.edges.size()) +
                           " edges, above the cycle-enumeration cap of " + std::to_string(limits.max_edges));
  }
  std::vector<std::vector<uint32_t>> cycles;
  std::vector<uint32_t> path;
  std::vector<char> on_path(c.vertices.size(), 0);

  auto dfs = [&](auto&& self, uint32_t start, uint32_t v) -> void {
    for (uint32_t a = c.adj_offsets[v]; a < c.adj_offsets[v + 1]; ++a) {
      uint32_t w = c.adj[a].first;
      if (w == start && path.size() >= 3) {
        if (path[1] < path.back()) cycles.push_back(path);  // one direction only
        continue;
      }
      if (w <= start || on_path[w]) continue;
      if (path.size() == static_cast<size_t>(limits.max_length)) continue;
      path.push_back(w);
      on_path[w] = 1;
      self(self, start, w);
      on_path[w] = 0;
      path.pop_back();
    }
  };

  for (uint32_t s = 0; s < c.vertices.size(); ++s) {
    path.assign(1, s);
    on_path[s] = 1;
    dfs(dfs, s, s);
    on_path[s] = 0;
  }
  return cycles;
}

CycleVector cycle_vector_from_vertices(const ExplicitComponent& c,
                                       const std::vector<uint32_t>& cycle_vertices) {
  EdgeIndexMap edge_index(c);
  CycleVector vec = CycleVector::zero(c.edges.size());
  for (size_t i = 0; i < cycle_vertices.size(); ++i) {
    vec.toggle(edge_index.at(cycle_vertices[i], cycle_vertices[(i + 1) % cycle_vertices.size()]));
  }
  return vec;
}

size_t gf2_rank(const std::vector<CycleVector>& rows) {
  std::vector<std::pair<long, CycleVector>> pivots;  // (pivot index, reduced row)
  for (const CycleVector& row : rows) {
    CycleVector reduced = row;
    for (const auto& [pos, pivot] : pivots) {
      if (reduced.test(static_cast<size_t>(pos))) reduced.xor_with(pivot);
    }
    long low = reduced.lowest_set();
    if (low >= 0) pivots.emplace_back(low, std::move(reduced));
  }
  return pivots.size();
}

bool spans(const std::vector<CycleVector>& generators, const ExplicitComponent& c) {
  for (const CycleVector& g : generators) {
    if (!is_even_degree_subgraph(c, g)) {
      throw validation_error("generator is not an even-degree edge subgraph");
    }
  }
  return gf2_rank(generators) == static_cast<size_t>(cycle_space_dimension(c));
}

std::vector<uint32_t> bfs_distances(const ExplicitComponent& c, uint32_t source) {
  constexpr uint32_t kInf = std::numeric_limits<uint32_t>::max();
  std::vector<uint32_t> dist(c.vertices.size(), kInf);
  std::vector<uint32_t> queue{source};
  dist[source] = 0;
  for (size_t head = 0; head < queue.size(); ++head) {
    uint32_t v = queue[head];
    for (uint32_t a = c.adj_offsets[v]; a < c.adj_offsets[v + 1]; ++a) {
      uint32_t w = c.adj[a].first;
      if (dist[w] == kInf) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

const std::vector<uint32_t>& DistanceOracle::from(uint32_t source) {
  auto it = cache_.find(source);
  if (it == cache_.end()) it = cache_.emplace(source, bfs_distances(c_, source)).first;
  return it->second;
}

bool is_geodesic(const ExplicitComponent& c, const std::vector<uint32_t>& walk_vertices) {
  if (walk_vertices.empty()) throw validation_error("walk has no vertices");
  return bfs_distances(c, walk_vertices.front())[walk_vertices.back()] == walk_vertices.size() - 1;
}

bool check_label_distinctness(const std::vector<EdgeLabel>& labels) {
  std::vector<EdgeLabel> sorted = labels;
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

std::vector<uint32_t> cycle_vertex_order(const ExplicitComponent& c, const CycleVector& cycle) {
  auto edges = cycle.edge_indices();
  if (edges.empty()) throw validation_error("empty edge set is not a cycle");
  std::unordered_map<uint32_t, std::vector<uint32_t>> incident;
  for (uint32_t e : edges) {
    incident[c.edges[e].u].push_back(e);
    incident[c.edges[e].v].push_back(e);
  }
  for (const auto& [v, inc] : incident) {
    if (inc.size() != 2) throw validation_error("cycle vertex of degree != 2");
  }
  std::vector<uint32_t> order;
  order.reserve(incident.size());
  uint32_t start = c.edges[edges[0]].u;
  uint32_t v = start;
  uint32_t prev_edge = std::numeric_limits<uint32_t>::max();
  do {
    order.push_back(v);
    const auto& inc = incident[v];
    uint32_t e = (inc[0] == prev_edge) ? inc[1] : inc[0];
    v = (c.edges[e].u == v) ? c.edges[e].v : c.edges[e].u;
    prev_edge = e;
  } while (v != start);
  if (order.size() != incident.size()) throw validation_error("edge set is not a single cycle");
  return order;
}

std::map<EdgeLabel, int> cycle_label_multiplicity(const ExplicitComponent& c, const CycleVector& cycle) {
  cycle_vertex_order(c, cycle);  // validates the simple-cycle shape
  std::map<EdgeLabel, int> counts;
  for (uint32_t e : cycle.edge_indices()) ++counts[c.edges[e].label];
  return counts;
}

bool opposite_label_check(const ExplicitComponent& c, const CycleVector& cycle) {
  std::vector<uint32_t> order = cycle_vertex_order(c, cycle);
  EdgeIndexMap edge_index(c);
  const size_t len = order.size();
  std::vector<EdgeLabel> labels;
  labels.reserve(len);
  for (size_t i = 0; i < len; ++i) {
    labels.push_back(c.edges[edge_index.at(order[i], order[(i + 1) % len])].label);
  }
  if (len % 2) return false;  // odd cycles have no opposite edges
  for (size_t i = 0; i < len; ++i) {
    for (size_t j = i + 1; j < len; ++j) {
      bool opposite = (j - i) == len / 2;
      if ((labels[i] == labels[j]) != opposite) return false;
    }
  }
  return true;
}

bool is_isometric_cycle(const ExplicitComponent& c, const std::vector<uint32_t>& cycle_vertices,
                        DistanceOracle& distances) {
  const size_t len = cycle_vertices.size();
  for (size_t i = 0; i < len; ++i) {
    const auto& dist = distances.from(cycle_vertices[i]);
    for (size_t j = i + 1; j < len; ++j) {
      size_t around = std::min(j - i, len - (j - i));
      if (dist[cycle_vertices[j]] != around) return false;
    }
  }
  return true;
}

std::vector<ExplicitComponent> cycle_fs_components(const Graph& y, const FsBudget& budget) {
  ComponentCensus census = fs_components(make_cycle(y.n()), y, budget);
  std::vector<ExplicitComponent> components;
  components.reserve(census.reps.size());
  for (const Permutation& rep : census.reps) {
    components.push_back(fs_component_of(make_cycle(y.n()), y, rep, budget));
  }
  return components;
}

SweepReport verify_isometric_spanning(int n_min, int n_max, bool include_dandelion_run) {
  SweepReport report;
  report.name = "isometric-spanning";
  for (int n = n_min; n <= n_max; ++n) {
    auto ys = enumerate_small_graphs(n, [](const Graph& g) { return domination_at_least(g, 3); });
    for (size_t yi = 0; yi < ys.size(); ++yi) {
      const Graph& y = ys[yi];
      const bool triangle_free = !has_triangle(y);
      auto components = cycle_fs_components(y);
      for (size_t ci = 0; ci < components.size(); ++ci) {
        const ExplicitComponent& comp = components[ci];
        auto squares = enumerate_squares(comp);
        auto hexagons = enumerate_hexagons(comp);
        std::vector<CycleVector> both = squares;
        both.insert(both.end(), hexagons.begin(), hexagons.end());
        std::string id = "n=" + std::to_string(n) + " y#" + std::to_string(yi) + " comp#" +
                         std::to_string(ci);
        report.record(id + " squares+hexagons", spans(both, comp));
        if (triangle_free) report.record(id + " squares-only", spans(squares, comp));
      }
    }
  }
  if (include_dandelion_run) {
    auto components = cycle_fs_components(make_dandelion(3, 8));
    for (size_t ci = 0; ci < components.size(); ++ci) {
      report.record("dand(3,8) comp#" + std::to_string(ci) + " squares-only",
                    spans(enumerate_squares(components[ci]), components[ci]));
    }
  }
  return report;
}

SweepReport verify_cycle_propositions(int cycles_n_max, int geodesic_n_max, uint64_t seed) {
  SweepReport report;
  report.name = "cycle-propositions";
  Rng rng(seed);
  for (int n = 4; n <= geodesic_n_max; ++n) {
    auto ys = enumerate_small_graphs(n, [](const Graph& g) { return domination_at_least(g, 3); });
    for (size_t yi = 0; yi < ys.size(); ++yi) {
      auto components = cycle_fs_components(ys[yi]);
      for (size_t ci = 0; ci < components.size(); ++ci) {
        const ExplicitComponent& comp = components[ci];
        const std::string id =
            "n=" + std::to_string(n) + " y#" + std::to_string(yi) + " comp#" + std::to_string(ci);

        // breadth-first tree geodesics have pairwise distinct labels
        EdgeIndexMap edge_index(comp);
        std::vector<uint32_t> roots{0};
        if (comp.vertices.size() > 1) {
          roots.push_back(static_cast<uint32_t>(rng.below(comp.vertices.size())));
        }
        for (uint32_t root : roots) {
          constexpr uint32_t kNone = std::numeric_limits<uint32_t>::max();
          std::vector<uint32_t> parent(comp.vertices.size(), kNone);
          std::vector<uint32_t> queue{root};
          parent[root] = root;
          for (size_t head = 0; head < queue.size(); ++head) {
            uint32_t v = queue[head];
            for (uint32_t a = comp.adj_offsets[v]; a < comp.adj_offsets[v + 1]; ++a) {
              uint32_t w = comp.adj[a].first;
              if (parent[w] == kNone) {
                parent[w] = v;
                queue.push_back(w);
              }
            }
          }
          bool all_distinct = true;
          for (uint32_t v = 0; v < comp.vertices.size(); ++v) {
            if (parent[v] == kNone) continue;
            std::vector<EdgeLabel> labels;
            for (uint32_t w = v; w != root; w = parent[w]) {
              labels.push_back(comp.edges[edge_index.at(w, parent[w])].label);
            }
            all_distinct = all_distinct && check_label_distinctness(labels);
          }
          report.record(id + " geodesic-labels root=" + std::to_string(root), all_distinct);
        }

        if (n > cycles_n_max) continue;
        auto cycles = enumerate_simple_cycles(comp);
        DistanceOracle distances(comp);
        bool all_even = true, labels_repeat = true, opposite_fine = true;
        for (const auto& cycle : cycles) {
          all_even = all_even && cycle.size() % 2 == 0;
          CycleVector vec = cycle_vector_from_vertices(comp, cycle);
          for (const auto& [label, count] : cycle_label_multiplicity(comp, vec)) {
            labels_repeat = labels_repeat && count >= 2;
          }
          if (is_isometric_cycle(comp, cycle, distances)) {
            opposite_fine = opposite_fine && opposite_label_check(comp, vec);
          }
        }
        if (!cycles.empty()) {
          report.record(id + " even-length", all_even);
          report.record(id + " repeated-labels", labels_repeat);
          report.record(id + " opposite-labels", opposite_fine);
        }
      }
    }
  }
  return report;
}

}  // namespace fsg
