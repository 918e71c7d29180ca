#include "kdiam/error.hpp"

namespace kdiam {

char const* to_string(error_kind kind) {
  switch (kind) {
    case error_kind::self_loop: return "SelfLoop";
    case error_kind::duplicate_colored_edge: return "DuplicateColoredEdge";
    case error_kind::non_positive_length: return "NonPositiveLength";
    case error_kind::node_out_of_range: return "NodeOutOfRange";
    case error_kind::invalid_k: return "InvalidK";
    case error_kind::unknown_node: return "UnknownNode";
    case error_kind::budget_exceeded: return "BudgetExceeded";
    case error_kind::empty_clause: return "EmptyClause";
    case error_kind::invalid_formula: return "InvalidFormula";
    case error_kind::infeasible_path_witness: return "InfeasiblePathWitness";
    case error_kind::disconnected_graph: return "DisconnectedGraph";
    case error_kind::zero_diameter: return "ZeroDiameter";
    case error_kind::arithmetic_overflow: return "ArithmeticOverflow";
    case error_kind::parse_error: return "ParseError";
  }
  return "Unknown";
}

}  // namespace kdiam
