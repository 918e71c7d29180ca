#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "kdiam/graph.hpp"
#include "kdiam/length.hpp"

namespace kdiam {

// Sentinel "last color" of the empty path at the source.
inline constexpr color_id kNoColor = static_cast<color_id>(-1);

// A node-simple path has at most n-2 interchanges, so budgets above
// max(1, n-1) never change an answer.
std::size_t max_useful_budget(colored_graph const& g);

// Validates k (InvalidK when k < 1) and clamps it to max_useful_budget.
std::size_t effective_budget(colored_graph const& g, std::size_t k);

struct pareto_label {
  length_t length;
  std::size_t interchanges;

  friend bool operator==(pareto_label const&, pareto_label const&) = default;
};

struct budget_step {
  std::size_t k;
  distance_t distance;

  friend bool operator==(budget_step const&, budget_step const&) = default;
};

// d_k(s,t) as a function of k: the budgets at which the distance strictly
// improves. The first step is always at k = 1 (possibly infinite).
struct budget_staircase {
  std::vector<budget_step> steps;

  distance_t at(std::size_t k) const;

  // Smallest k from which d_k no longer changes.
  std::size_t stable_from() const { return steps.back().k; }

  friend bool operator==(budget_staircase const&,
                         budget_staircase const&) = default;
};

// Outcome of one label-setting sweep from a source over states
// (node, last color). Each state keeps the labels (length, interchanges)
// that no other label at the same state dominates.
class pareto_label_set {
public:
  node_id source() const { return source_; }
  std::size_t max_interchanges() const { return max_interchanges_; }

  // Sorted by length ascending (interchanges then strictly descending).
  std::vector<pareto_label> frontier(node_id n, color_id last_color) const;

  budget_staircase staircase(node_id t) const;
  distance_t distance(node_id t, std::size_t k) const;

  // Length and interchanges of the path best_path(t, k) would return.
  std::optional<pareto_label> best(node_id t, std::size_t k) const;

  // Shortest path to t with at most k-1 interchanges, ties going to fewer
  // interchanges. k beyond max_interchanges()+1 is treated as that bound.
  std::optional<path_result> best_path(node_id t, std::size_t k) const;

private:
  friend pareto_label_set pareto_sweep(colored_graph const&, node_id,
                                       std::optional<std::size_t>);
  friend class label_search;

  struct label {
    std::int64_t length;
    std::uint32_t interchanges;
    std::uint32_t parent;
    edge_id via;
    bool dead;
  };

  std::uint32_t best_label(node_id t, std::size_t max_interchanges) const;
  path_result reconstruct(std::uint32_t label) const;
  length_t to_length(std::int64_t scaled) const;
  std::size_t state(node_id n, color_id c) const;

  colored_graph const* graph_{nullptr};
  node_id source_{0};
  std::size_t max_interchanges_{0};
  std::int64_t scale_{1};
  std::vector<label> labels_;
  std::vector<std::vector<std::uint32_t>> frontier_;
};

// Full sweep from s. Labels with more than `max_interchanges` interchanges
// are pruned; by default the bound is max_useful_budget(g) - 1.
pareto_label_set pareto_sweep(
    colored_graph const& g, node_id s,
    std::optional<std::size_t> max_interchanges = std::nullopt);

// Minimum-length s-t path with at most k-1 color alternations, or nullopt.
// Throws InvalidK (k < 1) and UnknownNode.
std::optional<path_result> interchange_constrained_shortest_path(
    colored_graph const& g, node_id s, node_id t, std::size_t k);

// Per target t (indexed by node id) the staircase of d_k(s,t).
std::vector<budget_staircase> all_budget_distances(colored_graph const& g,
                                                   node_id s);

struct length_and_interchanges {
  length_t length;
  std::size_t interchanges;

  friend bool operator==(length_and_interchanges const&,
                         length_and_interchanges const&) = default;
};

// Among all shortest s-t paths, the fewest interchanges. nullopt when t is
// unreachable.
std::optional<length_and_interchanges> min_interchanges_among_shortest_paths(
    colored_graph const& g, node_id s, node_id t);

}  // namespace kdiam
