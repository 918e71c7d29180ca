#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "kdiam/graph.hpp"
#include "kdiam/length.hpp"
#include "kdiam/oracle.hpp"

namespace kdiam {

// A constrained-diameter sequence: values[k-1] is the largest finite
// constrained distance over ordered node pairs at budget k.
struct diameter_sequence {
  std::vector<distance_t> values;
  std::size_t reported_up_to{0};
  // Budget from which every pair already attains its unconstrained distance
  // (only meaningful for the interchange sequence).
  std::size_t stable_from{1};
  // Population variance over k = 1..max(1, line count).
  length_t variance{0};

  // Beyond reported_up_to the sequence is constant.
  distance_t at(std::size_t k) const;
};

// Color-blind single-source distances.
std::vector<distance_t> shortest_distances(colored_graph const& g, node_id s);

// All of these throw DisconnectedGraph on a disconnected input.
length_t diameter(colored_graph const& g);

// Total length over diameter. ZeroDiameter for a single-node graph.
length_t extension(colored_graph const& g);

struct directness_result {
  // Over all pairs at distance d, the largest "fewest interchanges among
  // shortest paths".
  std::size_t max_transfers{0};
  // line count / max_transfers; nullopt (undefined) when max_transfers is 0.
  std::optional<length_t> tau;
};

directness_result directness(colored_graph const& g);

diameter_sequence interchange_diameter_sequence(colored_graph const& g);

// Exact, via exhaustive enumeration; BudgetExceeded past the budget.
diameter_sequence color_diameter_sequence(
    colored_graph const& g, oracle::enumeration_budget const& budget = {});

length_t population_variance(std::span<length_t const> values);

struct indicator_report {
  std::size_t nodes{0};
  std::size_t edges{0};
  std::size_t lines{0};
  length_t total_length{0};
  length_t diameter{0};
  std::optional<length_t> extension;
  directness_result directness;
  diameter_sequence di;
  std::optional<diameter_sequence> dc;
  // Why dc is missing, when it is.
  std::string dc_note;
};

indicator_report full_report(colored_graph const& g,
                             oracle::enumeration_budget const& budget = {});

}  // namespace kdiam
