#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "kdiam/error.hpp"
#include "kdiam/netgen.hpp"
#include "kdiam/oracle.hpp"
#include "kdiam/pathfind.hpp"
#include "kdiam/reduction.hpp"

#include "test_support.hpp"

using namespace kdiam;
using kdiam::test::unit_edge;

namespace {

colored_graph alternating_chain() {
  return build_graph(5, {unit_edge(0, 1, "red"), unit_edge(1, 2, "black"),
                         unit_edge(2, 3, "red"), unit_edge(3, 4, "black")});
}

std::vector<distance_t> lengths(std::initializer_list<int> values) {
  std::vector<distance_t> out;
  for (int v : values) {
    out.push_back(length_t{v});
  }
  return out;
}

}  // namespace

TEST(oracle, two_lines_of_network_2) {
  auto const g = paper_network(2);
  auto const p = oracle::brute_interchange_constrained(g, 0, 4, 2);
  ASSERT_TRUE(p);
  EXPECT_EQ(p->total_length, length_t{4});
  EXPECT_EQ(p->interchanges, 1U);
  EXPECT_FALSE(oracle::brute_interchange_constrained(g, 0, 5, 2));
  EXPECT_EQ(oracle::brute_diameter_sequences(g).di[1], length_t{4});
}

TEST(oracle, source_equals_target) {
  auto const g = paper_network(4);
  for (auto solve : {&oracle::brute_interchange_constrained,
                     &oracle::brute_color_constrained}) {
    auto const p = solve(g, 2, 2, 1, {});
    ASSERT_TRUE(p);
    EXPECT_TRUE(p->edges.empty());
    EXPECT_EQ(p->total_length, length_t{0});
  }
}

TEST(oracle, alternating_chain_separates_the_two_problems) {
  auto const g = alternating_chain();
  auto const pc = oracle::brute_color_constrained(g, 0, 4, 2);
  ASSERT_TRUE(pc);
  EXPECT_EQ(pc->edges.size(), 4U);
  EXPECT_EQ(pc->distinct_colors, 2U);
  EXPECT_EQ(pc->interchanges, 3U);
  EXPECT_FALSE(oracle::brute_interchange_constrained(g, 0, 4, 2));
  EXPECT_TRUE(oracle::brute_interchange_constrained(g, 0, 4, 4));
}

TEST(oracle, monochromatic_graph_is_plain_shortest_path) {
  auto const g = build_graph(4, {unit_edge(0, 1, "m"), unit_edge(1, 2, "m"),
                                 unit_edge(2, 3, "m"), {0, 3, length_t{5, 2}, "m"}});
  auto const plain = test::floyd_warshall(g);
  for (node_id s = 0; s < 4; ++s) {
    for (node_id t = 0; t < 4; ++t) {
      auto const p = oracle::brute_color_constrained(g, s, t, 1);
      ASSERT_TRUE(p);
      EXPECT_EQ(p->total_length, *plain[s][t]);
    }
  }
}

TEST(oracle, gadget_witness_uses_negated_x1_and_x2) {
  auto const inst = cnf_to_graph(cnf_formula{2, {{1, 2}, {-1}}});
  auto const p = oracle::brute_color_constrained(inst.graph, inst.source, inst.target, 2,
                                                 kGadgetBudget);
  ASSERT_TRUE(p);
  std::set<std::string> labels;
  for (auto e : p->edges) {
    labels.insert(inst.graph.color_name(inst.graph.at(e).color));
  }
  EXPECT_EQ(labels, (std::set<std::string>{"¬x1", "x2"}));
  EXPECT_EQ(p->total_length, length_t{4});
}

TEST(oracle, diameter_sequences) {
  auto const three = oracle::brute_diameter_sequences(paper_network(3));
  EXPECT_EQ(std::vector(three.di.begin(), three.di.begin() + 3), lengths({4, 5, 5}));

  auto const edge = oracle::brute_diameter_sequences(build_graph(2, {unit_edge(0, 1, "a")}));
  EXPECT_EQ(edge.di, lengths({1}));
  EXPECT_EQ(edge.dc, lengths({1}));

  auto const one = oracle::brute_diameter_sequences(paper_network(1));
  ASSERT_EQ(one.dc.size(), 3U);
  EXPECT_EQ(one.dc[0], length_t{4});
  EXPECT_EQ(one.dc[2], length_t{11});
  EXPECT_EQ(one.di.size(), 10U);

  auto const alt = oracle::brute_diameter_sequences(alternating_chain());
  EXPECT_EQ(alt.dc, lengths({1, 4}));
  EXPECT_EQ(alt.di[1], length_t{2});
}

TEST(oracle, sat) {
  EXPECT_FALSE(oracle::brute_sat(cnf_formula{1, {{1}, {-1}}}));
  EXPECT_EQ(oracle::brute_sat(cnf_formula{2, {{1, 2}, {-1}}}),
            (assignment{false, false, true}));
  EXPECT_EQ(oracle::brute_sat(cnf_formula{3, {}}), (assignment{false, false, false, false}));
  EXPECT_THROW(oracle::brute_sat(cnf_formula{21, {{21}}}), error);
  EXPECT_TRUE(oracle::brute_sat(cnf_formula{20, {{20}, {-1}}}));
}

TEST(oracle, budget_is_enforced) {
  auto const big = chain_network({13});
  try {
    oracle::enumerate_simple_paths(big, 0);
    ADD_FAILURE() << "expected BudgetExceeded";
  } catch (error const& e) {
    EXPECT_EQ(e.kind(), error_kind::budget_exceeded);
  }
  EXPECT_NO_THROW(oracle::enumerate_simple_paths(big, 0, {12, 100, true}));

  EXPECT_THROW(oracle::enumerate_simple_paths(paper_network(3), 0, {12, 5, false}), error);
}

TEST(oracle, parallel_edges_are_distinct_paths) {
  auto const g = build_graph(3, {unit_edge(0, 1, "a"), unit_edge(0, 1, "b"),
                                 unit_edge(1, 2, "a"), unit_edge(1, 2, "b")});
  auto const table = oracle::enumerate_simple_paths(g, 0);
  // empty path, two one-edge paths, four two-edge paths
  EXPECT_EQ(table.paths, 7U);
  EXPECT_EQ(table.interchange_constrained(2, 1), length_t{2});
  EXPECT_EQ(table.by_interchanges[2][1], length_t{2});
}

TEST(oracle, inclusion_and_monotonicity) {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    auto const g = test::random_multigraph(seed);
    auto const n = static_cast<node_id>(g.node_count());
    for (node_id s = 0; s < n; ++s) {
      auto const table = oracle::enumerate_simple_paths(g, s);
      for (node_id t = 0; t < n; ++t) {
        for (std::size_t k = 1; k <= n; ++k) {
          auto const pi = table.interchange_constrained(t, k);
          auto const pc = table.color_constrained(t, k);
          if (pi) {
            ASSERT_TRUE(pc) << "seed " << seed;
            EXPECT_LE(*pc, *pi);
          }
          if (k > 1) {
            for (auto [now, before] :
                 {std::pair{pi, table.interchange_constrained(t, k - 1)},
                  std::pair{pc, table.color_constrained(t, k - 1)}}) {
              if (before) {
                ASSERT_TRUE(now);
                EXPECT_LE(*now, *before);
              }
            }
          }
        }
      }
    }
  }
}

TEST(oracle, witnesses_match_tables) {
  for (std::uint64_t seed = 500; seed < 560; ++seed) {
    auto const g = test::random_multigraph(seed, 7);
    auto const table = oracle::enumerate_simple_paths(g, 0);
    for (node_id t = 0; t < g.node_count(); ++t) {
      for (std::size_t k = 1; k <= 3; ++k) {
        auto const pi = oracle::brute_interchange_constrained(g, 0, t, k);
        auto const pc = oracle::brute_color_constrained(g, 0, t, k);
        EXPECT_EQ(pi ? distance_t{pi->total_length} : std::nullopt,
                  table.interchange_constrained(t, k));
        EXPECT_EQ(pc ? distance_t{pc->total_length} : std::nullopt,
                  table.color_constrained(t, k));
        if (pi) {
          EXPECT_LT(pi->interchanges, k);
        }
        if (pc) {
          EXPECT_LE(pc->distinct_colors, k);
        }
      }
    }
  }
}

TEST(oracle, agrees_with_pathfind_on_200_graphs) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    auto const g = test::random_multigraph(seed * 7 + 3);
    for (node_id s = 0; s < g.node_count(); ++s) {
      auto const table = oracle::enumerate_simple_paths(g, s);
      auto const stairs = all_budget_distances(g, s);
      for (node_id t = 0; t < g.node_count(); ++t) {
        for (std::size_t k = 1; k <= max_useful_budget(g); ++k) {
          ASSERT_EQ(table.interchange_constrained(t, k), stairs[t].at(k))
              << "seed " << seed;
        }
      }
    }
  }
}
