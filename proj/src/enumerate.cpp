#include "fsg/enumerate.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

#include "fsg/errors.hpp"

namespace fsg {

namespace {

constexpr int kMaxCanonOrder = 8;

uint64_t pack_code(const Graph& g, const std::vector<int>& order) {
  const int n = g.n();
  uint64_t code = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j && g.has_edge(order[i], order[j])) {
        code |= uint64_t{1} << (63 - (i * n + j));
      }
    }
  }
  return code;
}

}  // namespace

uint64_t canonical_code(const Graph& g) {
  const int n = g.n();
  if (n > kMaxCanonOrder) {
    throw capability_error("canonical form supports n <= 8; use enumerate_min_degree_family for the large-n class");
  }
  // The minimal first matrix row is 0...01...1, so position 1 must hold a
  // vertex of minimum degree with its non-neighbors placed before its
  // neighbors. Brute-force the orderings inside those two blocks.
  const int delta = min_degree(g);
  uint64_t best = ~uint64_t{0};
  std::vector<int> order(static_cast<size_t>(n));
  for (int v1 = 1; v1 <= n; ++v1) {
    if (g.degree(v1) != delta) continue;
    std::vector<int> non_nbrs, nbrs;
    for (int v = 1; v <= n; ++v) {
      if (v == v1) continue;
      (g.has_edge(v1, v) ? nbrs : non_nbrs).push_back(v);
    }
    std::sort(non_nbrs.begin(), non_nbrs.end());
    do {
      std::sort(nbrs.begin(), nbrs.end());
      do {
        order[0] = v1;
        std::copy(non_nbrs.begin(), non_nbrs.end(), order.begin() + 1);
        std::copy(nbrs.begin(), nbrs.end(), order.begin() + 1 + static_cast<long>(non_nbrs.size()));
        best = std::min(best, pack_code(g, order));
      } while (std::next_permutation(nbrs.begin(), nbrs.end()));
    } while (std::next_permutation(non_nbrs.begin(), non_nbrs.end()));
  }
  return best;
}

Graph graph_from_code(int n, uint64_t code) {
  Graph g(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if ((code >> (63 - (i * n + j))) & 1) g.add_edge(i + 1, j + 1);
    }
  }
  return g;
}

Graph canonical_graph(const Graph& g) { return graph_from_code(g.n(), canonical_code(g)); }

bool is_isomorphic(const Graph& g, const Graph& h) {
  if (g.n() != h.n()) return false;
  if (g.edge_count() != h.edge_count()) return false;
  return canonical_code(g) == canonical_code(h);
}

namespace {

const std::vector<uint64_t>& canonical_codes_of_order(int n) {
  static std::map<int, std::vector<uint64_t>> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<uint64_t> codes;
  if (n == 1) {
    codes.push_back(0);
  } else {
    const std::vector<uint64_t>& parents = canonical_codes_of_order(n - 1);
    std::unordered_set<uint64_t> seen;
    for (uint64_t pcode : parents) {
      Graph parent = graph_from_code(n - 1, pcode);
      for (uint64_t attach = 0; attach < (uint64_t{1} << (n - 1)); ++attach) {
        Graph child(n);
        for (auto [u, v] : parent.edges()) child.add_edge(u, v);
        for (int v = 1; v < n; ++v) {
          if ((attach >> (v - 1)) & 1) child.add_edge(v, n);
        }
        seen.insert(canonical_code(child));
      }
    }
    codes.assign(seen.begin(), seen.end());
    std::sort(codes.begin(), codes.end());
  }
  return cache.emplace(n, std::move(codes)).first->second;
}

}  // namespace

std::vector<Graph> enumerate_small_graphs(int n, const std::function<bool(const Graph&)>& filter) {
  if (n < 1) throw parameter_error("graph order must be positive");
  if (n > kMaxCanonOrder) {
    throw capability_error("generic enumeration supports n <= 8; the minimum-degree class has its own generator");
  }
  std::vector<Graph> out;
  for (uint64_t code : canonical_codes_of_order(n)) {
    Graph g = graph_from_code(n, code);
    if (!filter || filter(g)) out.push_back(std::move(g));
  }
  return out;
}

namespace {

// Multisets of parts (size, is_cycle) in non-increasing (size, type) order.
void degree2_unions(int remaining, int max_size, int max_type_at_max_size,
                    std::vector<std::pair<int, bool>>& parts,
                    std::vector<Graph>& out, int n) {
  if (remaining == 0) {
    Graph h(n);
    int base = 0;
    for (auto [size, cyc] : parts) {
      for (int i = 1; i < size; ++i) h.add_edge(base + i, base + i + 1);
      if (cyc) h.add_edge(base + size, base + 1);
      base += size;
    }
    out.push_back(complement(h));
    return;
  }
  for (int size = std::min(remaining, max_size); size >= 1; --size) {
    for (int type = (size == max_size ? max_type_at_max_size : 1); type >= 0; --type) {
      if (type == 1 && size < 3) continue;  // cycles need >= 3 vertices
      parts.emplace_back(size, type == 1);
      degree2_unions(remaining - size, size, type, parts, out, n);
      parts.pop_back();
    }
  }
}

}  // namespace

std::vector<Graph> enumerate_min_degree_family(int n) {
  if (n < 1) throw parameter_error("graph order must be positive");
  std::vector<Graph> out;
  std::vector<std::pair<int, bool>> parts;
  degree2_unions(n, n, 1, parts, out, n);
  return out;
}

Graph random_graph(int n, Rng& rng) {
  Graph g(n);
  for (int u = 1; u <= n; ++u) {
    for (int v = u + 1; v <= n; ++v) {
      if (rng.coin()) g.add_edge(u, v);
    }
  }
  return g;
}

Graph random_connected_graph(int n, Rng& rng) {
  for (;;) {
    Graph g = random_graph(n, rng);
    if (is_connected(g)) return g;
  }
}

}  // namespace fsg
