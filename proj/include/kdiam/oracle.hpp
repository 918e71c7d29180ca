#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "kdiam/cnf.hpp"
#include "kdiam/graph.hpp"
#include "kdiam/length.hpp"

// Exhaustive reference solvers. Everything here enumerates node-simple paths
// (over edges, so parallel edges count as distinct paths) and is exponential
// by nature; the budget makes accidental large runs fail with BudgetExceeded.
namespace kdiam::oracle {

struct enumeration_budget {
  std::size_t max_nodes{12};
  std::uint64_t max_paths{10'000'000};
  // Skips the node-count check; the path limit still applies.
  bool allow_large_graphs{false};
};

// Best lengths of all simple paths from one source, bucketed by exact
// interchange count and by exact number of distinct colors.
struct path_table {
  std::vector<std::vector<distance_t>> by_interchanges;  // [t][i]
  std::vector<std::vector<distance_t>> by_colors;        // [t][c]
  std::uint64_t paths{0};

  // Best length with at most k-1 interchanges / at most k colors.
  distance_t interchange_constrained(node_id t, std::size_t k) const;
  distance_t color_constrained(node_id t, std::size_t k) const;
};

path_table enumerate_simple_paths(colored_graph const& g, node_id s,
                                  enumeration_budget const& budget = {});

std::optional<path_result> brute_interchange_constrained(
    colored_graph const& g, node_id s, node_id t, std::size_t k,
    enumeration_budget const& budget = {});

std::optional<path_result> brute_color_constrained(
    colored_graph const& g, node_id s, node_id t, std::size_t k,
    enumeration_budget const& budget = {});

// di[k-1] for k = 1..max(1, n-2) and dc[k-1] for k = 1..max(1, |C|), each the
// largest finite constrained distance over ordered pairs.
struct diameter_sequences {
  std::vector<distance_t> di;
  std::vector<distance_t> dc;
};

diameter_sequences brute_diameter_sequences(
    colored_graph const& g, enumeration_budget const& budget = {});

inline constexpr std::size_t kMaxSatVariables = 20;

// First satisfying assignment in binary counting order (x_1 is the low bit),
// or nullopt. BudgetExceeded beyond kMaxSatVariables variables.
std::optional<assignment> brute_sat(cnf_formula const& f);

}  // namespace kdiam::oracle
