#pragma once

#include <optional>
#include <vector>

#include "kdiam/cnf.hpp"
#include "kdiam/graph.hpp"
#include "kdiam/oracle.hpp"

namespace kdiam {

// Colored graph encoding a CNF formula F over x_1..x_n with clauses
// C_1..C_m. Node 0 is the source s, node i is x_i, node n+j is C_j. Each
// chain step x_{i-1} -> x_i has two parallel edges colored x_i and ¬x_i;
// each clause step into C_j has one edge per literal of C_j, reusing the
// literal's color. F is satisfiable iff some s -> C_m path uses at most n
// colors.
struct reduction_instance {
  cnf_formula formula;
  colored_graph graph;
  node_id source;
  node_id target;
  std::size_t budget_k;
  std::vector<literal> literal_of_color;  // indexed by color id
};

// All edges have length 1. For a formula without clauses the target is x_n.
reduction_instance cnf_to_graph(cnf_formula const& f);

// Layered gadgets have more nodes than the default oracle node budget but a
// bounded number of paths, so the node check is waived here.
inline constexpr oracle::enumeration_budget kGadgetBudget{12, 10'000'000, true};

// Shortest s -> target path using at most budget_k colors, if any.
std::optional<path_result> find_gadget_witness(
    reduction_instance const& inst,
    oracle::enumeration_budget const& budget = kGadgetBudget);

bool decide_via_gadget(reduction_instance const& inst,
                       oracle::enumeration_budget const& budget = kGadgetBudget);

// Reads the literal of each chain edge as the value of its variable. Throws
// InfeasiblePathWitness if the result fails a clause, std::invalid_argument
// if `p` is not an s -> target path within the color budget.
assignment extract_assignment(reduction_instance const& inst,
                              path_result const& p);

}  // namespace kdiam
