#include "kdiam/oracle.hpp"

#include <algorithm>
#include <functional>

#include "kdiam/error.hpp"

namespace kdiam::oracle {

namespace {

void check_budget(colored_graph const& g, enumeration_budget const& budget) {
  if (!budget.allow_large_graphs && g.node_count() > budget.max_nodes) {
    throw error{error_kind::budget_exceeded,
                "graph has " + std::to_string(g.node_count()) +
                    " nodes, oracle budget is " +
                    std::to_string(budget.max_nodes)};
  }
}

void check_node(colored_graph const& g, node_id n) {
  if (n >= g.node_count()) {
    throw error{error_kind::unknown_node, "unknown node " + std::to_string(n)};
  }
}

struct walk_state {
  node_id node;
  length_t length;
  std::size_t interchanges;
  std::size_t colors;
  std::vector<edge_id> const& edges;
};

// Depth-first enumeration of every simple path starting at s (the empty path
// included). `visit` sees each path once; returning false stops extending it.
// Both interchange and color counts only grow along an extension, so pruning
// on them keeps the search exhaustive for the constrained problems.
void enumerate(colored_graph const& g, node_id s,
               enumeration_budget const& budget,
               std::function<bool(walk_state const&)> const& visit,
               std::uint64_t* path_count = nullptr) {
  std::vector<bool> on_path(g.node_count(), false);
  std::vector<std::size_t> color_uses(g.color_count(), 0);
  std::vector<edge_id> edges;
  std::uint64_t count = 0;

  std::function<void(node_id, length_t const&, std::size_t, std::size_t)> dfs =
      [&](node_id at, length_t const& length, std::size_t interchanges,
          std::size_t colors) {
        if (++count > budget.max_paths) {
          throw error{error_kind::budget_exceeded,
                      "more than " + std::to_string(budget.max_paths) +
                          " paths enumerated"};
        }
        if (!visit({at, length, interchanges, colors, edges})) {
          return;
        }
        on_path[at] = true;
        for (auto const& [id, next] : g.neighbors(at)) {
          if (on_path[next]) {
            continue;
          }
          auto const& e = g.at(id);
          auto const alternation =
              !edges.empty() && g.at(edges.back()).color != e.color;
          auto const fresh = color_uses[e.color] == 0;
          ++color_uses[e.color];
          edges.push_back(id);
          dfs(next, length + e.length, interchanges + (alternation ? 1 : 0),
              colors + (fresh ? 1 : 0));
          edges.pop_back();
          --color_uses[e.color];
        }
        on_path[at] = false;
      };
  dfs(s, length_t{0}, 0, 0);
  if (path_count != nullptr) {
    *path_count = count;
  }
}

void keep_min(distance_t& slot, length_t const& candidate) {
  if (!slot || candidate < *slot) {
    slot = candidate;
  }
}

distance_t best_up_to(std::vector<distance_t> const& buckets, std::size_t limit) {
  distance_t best;
  for (std::size_t i = 0; i < buckets.size() && i <= limit; ++i) {
    if (buckets[i]) {
      keep_min(best, *buckets[i]);
    }
  }
  return best;
}

// Constrained brute search between s and t: minimum length, then fewest
// `secondary` (interchanges or colors), first found on ties.
template <typename Measure>
std::optional<path_result> brute_search(colored_graph const& g, node_id s,
                                        node_id t, std::size_t limit,
                                        enumeration_budget const& budget,
                                        Measure measure) {
  check_budget(g, budget);
  check_node(g, s);
  check_node(g, t);

  std::optional<std::pair<length_t, std::size_t>> best;
  std::vector<edge_id> witness;
  enumerate(g, s, budget, [&](walk_state const& w) {
    if (measure(w) > limit) {
      return false;
    }
    if (w.node == t) {
      auto const key = std::pair{w.length, measure(w)};
      if (!best || key < *best) {
        best = key;
        witness = w.edges;
      }
      return false;
    }
    return true;
  });
  if (!best) {
    return std::nullopt;
  }
  return make_path(g, s, witness);
}

}  // namespace

distance_t path_table::interchange_constrained(node_id t, std::size_t k) const {
  return k == 0 ? std::nullopt : best_up_to(by_interchanges.at(t), k - 1);
}

distance_t path_table::color_constrained(node_id t, std::size_t k) const {
  return best_up_to(by_colors.at(t), k);
}

path_table enumerate_simple_paths(colored_graph const& g, node_id s,
                                  enumeration_budget const& budget) {
  check_budget(g, budget);
  check_node(g, s);
  auto const n = g.node_count();
  path_table table;
  table.by_interchanges.assign(n, std::vector<distance_t>(std::max<std::size_t>(1, n - 1)));
  table.by_colors.assign(n, std::vector<distance_t>(g.color_count() + 1));
  enumerate(
      g, s, budget,
      [&](walk_state const& w) {
        keep_min(table.by_interchanges[w.node][w.interchanges], w.length);
        keep_min(table.by_colors[w.node][w.colors], w.length);
        return true;
      },
      &table.paths);
  return table;
}

std::optional<path_result> brute_interchange_constrained(
    colored_graph const& g, node_id s, node_id t, std::size_t k,
    enumeration_budget const& budget) {
  if (k < 1) {
    throw error{error_kind::invalid_k, "interchange budget k must be >= 1"};
  }
  return brute_search(g, s, t, k - 1, budget,
                      [](walk_state const& w) { return w.interchanges; });
}

std::optional<path_result> brute_color_constrained(
    colored_graph const& g, node_id s, node_id t, std::size_t k,
    enumeration_budget const& budget) {
  if (k < 1) {
    throw error{error_kind::invalid_k, "color budget k must be >= 1"};
  }
  return brute_search(g, s, t, k, budget,
                      [](walk_state const& w) { return w.colors; });
}

diameter_sequences brute_diameter_sequences(colored_graph const& g,
                                            enumeration_budget const& budget) {
  check_budget(g, budget);
  auto const n = g.node_count();
  auto const di_terms = n > 3 ? n - 2 : 1;
  auto const dc_terms = std::max<std::size_t>(1, line_count(g));

  diameter_sequences out;
  out.di.resize(di_terms);
  out.dc.resize(dc_terms);
  auto const raise = [](distance_t& slot, distance_t const& d) {
    if (d && (!slot || *d > *slot)) {
      slot = d;
    }
  };
  for (node_id s = 0; s < n; ++s) {
    auto const table = enumerate_simple_paths(g, s, budget);
    for (node_id t = 0; t < n; ++t) {
      for (std::size_t k = 1; k <= di_terms; ++k) {
        raise(out.di[k - 1], table.interchange_constrained(t, k));
      }
      for (std::size_t k = 1; k <= dc_terms; ++k) {
        raise(out.dc[k - 1], table.color_constrained(t, k));
      }
    }
  }
  return out;
}

std::optional<assignment> brute_sat(cnf_formula const& f) {
  auto const n = f.variable_count();
  if (n > kMaxSatVariables) {
    throw error{error_kind::budget_exceeded,
                std::to_string(n) + " variables exceed the brute-force limit of " +
                    std::to_string(kMaxSatVariables)};
  }
  assignment a(n + 1, false);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    for (std::size_t v = 1; v <= n; ++v) {
      a[v] = ((mask >> (v - 1)) & 1U) != 0;
    }
    if (f.satisfied_by(a)) {
      return a;
    }
  }
  return std::nullopt;
}

}  // namespace kdiam::oracle
