#include "kdiam/verify.hpp"

#include "kdiam/netgen.hpp"
#include "kdiam/pathfind.hpp"

namespace kdiam {

equivalence_result check_against_oracle(
    colored_graph const& g, oracle::enumeration_budget const& budget) {
  equivalence_result result;
  auto const n = static_cast<node_id>(g.node_count());
  auto const top = max_useful_budget(g);
  for (node_id s = 0; s < n; ++s) {
    auto const table = oracle::enumerate_simple_paths(g, s, budget);
    for (node_id t = 0; t < n; ++t) {
      for (std::size_t k = 1; k <= top; ++k) {
        ++result.checks;
        auto const fast = interchange_constrained_shortest_path(g, s, t, k);
        auto const brute = table.interchange_constrained(t, k);
        auto const same =
            fast.has_value() == brute.has_value() &&
            (!fast || (fast->total_length == *brute &&
                       fast->interchanges + 1 <= k && fast->source() == s &&
                       fast->target() == t));
        if (!same) {
          if (result.mismatches++ == 0) {
            result.first_mismatch =
                "s=" + std::to_string(s) + " t=" + std::to_string(t) +
                " k=" + std::to_string(k) + ": search " +
                format_distance(fast ? distance_t{fast->total_length}
                                     : std::nullopt,
                                true) +
                ", oracle " + format_distance(brute, true);
          }
        }
      }
    }
  }
  return result;
}

colored_graph verification_instance(std::uint64_t seed) {
  auto const lines = 1 + seed % 4;
  auto per_line = 2 + (seed / 4) % 3;
  while (true) {
    auto g = random_line_network(lines, per_line, seed);
    if (g.node_count() <= 10 || per_line == 2) {
      return g;
    }
    --per_line;
  }
}

}  // namespace kdiam
