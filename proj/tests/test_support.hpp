#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "kdiam/graph.hpp"

namespace kdiam::test {

inline std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) {
  return rng() % bound;
}

// Random connected colored multigraph: a random spanning tree plus extra
// edges, parallel edges allowed with distinct colors. Lengths are unit for
// most seeds and drawn from {1/2, 1, 3/2, 2, 3} otherwise.
inline colored_graph random_multigraph(std::uint64_t seed,
                                       std::size_t max_nodes = 10,
                                       std::size_t max_colors = 4) {
  std::mt19937_64 rng{seed * 0x9E3779B97F4A7C15ULL + 17};
  auto const n = 2 + draw(rng, max_nodes - 1);
  auto const colors = 1 + draw(rng, max_colors);
  auto const unit = draw(rng, 3) != 0;
  static length_t const choices[] = {length_t{1, 2}, length_t{1}, length_t{3, 2},
                                     length_t{2}, length_t{3}};
  auto const pick_length = [&] {
    return unit ? length_t{1} : choices[draw(rng, 5)];
  };
  auto const pick_color = [&] {
    return std::string(1, static_cast<char>('p' + draw(rng, colors)));
  };

  std::vector<edge_spec> edges;
  std::vector<std::tuple<node_id, node_id, std::string>> seen;
  auto const add = [&](node_id u, node_id v) {
    auto color = pick_color();
    auto key = std::tuple{std::min(u, v), std::max(u, v), color};
    if (u == v || std::find(begin(seen), end(seen), key) != end(seen)) {
      return;
    }
    seen.push_back(key);
    edges.push_back({u, v, pick_length(), color});
  };
  for (node_id v = 1; v < n; ++v) {
    auto const before = edges.size();
    while (edges.size() == before) {
      add(static_cast<node_id>(draw(rng, v)), v);
    }
  }
  auto const extra = draw(rng, n + 1);
  for (std::size_t i = 0; i < extra; ++i) {
    add(static_cast<node_id>(draw(rng, n)), static_cast<node_id>(draw(rng, n)));
  }
  return build_graph(n, edges);
}

// Color-blind all-pairs distances by Floyd-Warshall.
inline std::vector<std::vector<distance_t>> floyd_warshall(colored_graph const& g) {
  auto const n = g.node_count();
  std::vector<std::vector<distance_t>> d(n, std::vector<distance_t>(n));
  for (std::size_t i = 0; i < n; ++i) {
    d[i][i] = length_t{0};
  }
  for (auto const& e : g.edges()) {
    for (auto [a, b] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
      if (!d[a][b] || e.length < *d[a][b]) {
        d[a][b] = e.length;
      }
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (d[i][k] && d[k][j] && (!d[i][j] || *d[i][k] + *d[k][j] < *d[i][j])) {
          d[i][j] = *d[i][k] + *d[k][j];
        }
      }
    }
  }
  return d;
}

// Same graph with node i renamed to perm[i].
inline colored_graph relabel(colored_graph const& g,
                             std::vector<node_id> const& perm) {
  auto specs = g.edge_specs();
  for (auto& s : specs) {
    s.u = perm[s.u];
    s.v = perm[s.v];
  }
  return build_graph(g.node_count(), specs);
}

inline edge_spec unit_edge(node_id u, node_id v, std::string color) {
  return {u, v, length_t{1}, std::move(color)};
}

}  // namespace kdiam::test
