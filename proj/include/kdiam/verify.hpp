#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

#include "kdiam/graph.hpp"
#include "kdiam/oracle.hpp"

namespace kdiam {

struct equivalence_result {
  std::size_t checks{0};
  std::size_t mismatches{0};
  std::string first_mismatch;

  bool ok() const { return mismatches == 0; }
};

// Compares interchange_constrained_shortest_path with exhaustive enumeration
// on every ordered pair and every budget k = 1..max_useful_budget(g), in
// feasibility and length. Returned paths must also respect the budget.
equivalence_result check_against_oracle(
    colored_graph const& g, oracle::enumeration_budget const& budget = {});

// Small random line network (at most 10 nodes, 1 to 4 lines) derived from
// the seed.
colored_graph verification_instance(std::uint64_t seed);

}  // namespace kdiam
