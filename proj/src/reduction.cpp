#include "kdiam/reduction.hpp"

#include <cstdlib>
#include <stdexcept>

#include "kdiam/error.hpp"

namespace kdiam {

reduction_instance cnf_to_graph(cnf_formula const& f) {
  auto const n = f.variable_count();
  auto const m = f.clauses().size();

  std::vector<edge_spec> edges;
  for (std::size_t i = 1; i <= n; ++i) {
    auto const from = static_cast<node_id>(i - 1);
    auto const to = static_cast<node_id>(i);
    auto const var = static_cast<literal>(i);
    edges.push_back({from, to, length_t{1}, literal_name(var)});
    edges.push_back({from, to, length_t{1}, literal_name(-var)});
  }
  for (std::size_t j = 1; j <= m; ++j) {
    auto const from = static_cast<node_id>(n + j - 1);
    auto const to = static_cast<node_id>(n + j);
    for (auto const l : f.clauses()[j - 1]) {
      edges.push_back({from, to, length_t{1}, literal_name(l)});
    }
  }

  auto graph = build_graph(n + m + 1, edges);
  std::vector<literal> literal_of_color(graph.color_count(), 0);
  for (std::size_t i = 1; i <= n; ++i) {
    auto const var = static_cast<literal>(i);
    literal_of_color[*graph.find_color(literal_name(var))] = var;
    literal_of_color[*graph.find_color(literal_name(-var))] = -var;
  }

  return reduction_instance{f,
                            std::move(graph),
                            0,
                            static_cast<node_id>(n + m),
                            n,
                            std::move(literal_of_color)};
}

std::optional<path_result> find_gadget_witness(
    reduction_instance const& inst, oracle::enumeration_budget const& budget) {
  return oracle::brute_color_constrained(inst.graph, inst.source, inst.target,
                                         inst.budget_k, budget);
}

bool decide_via_gadget(reduction_instance const& inst,
                       oracle::enumeration_budget const& budget) {
  return find_gadget_witness(inst, budget).has_value();
}

assignment extract_assignment(reduction_instance const& inst,
                              path_result const& p) {
  auto const n = inst.formula.variable_count();
  if (p.nodes.empty() || p.source() != inst.source ||
      p.target() != inst.target) {
    throw std::invalid_argument{"witness is not a source -> target path"};
  }
  if (p.distinct_colors > inst.budget_k) {
    throw std::invalid_argument{"witness uses more than " +
                                std::to_string(inst.budget_k) + " colors"};
  }

  assignment a(n + 1, false);
  for (std::size_t i = 0; i < n; ++i) {
    auto const l = inst.literal_of_color.at(inst.graph.at(p.edges.at(i)).color);
    a[static_cast<std::size_t>(std::abs(l))] = l > 0;
  }
  if (!inst.formula.satisfied_by(a)) {
    throw error{error_kind::infeasible_path_witness,
                "assignment read from the witness path violates a clause"};
  }
  return a;
}

}  // namespace kdiam
