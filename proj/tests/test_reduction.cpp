#include <gtest/gtest.h>

#include <random>
#include <set>
#include <sstream>

#include "kdiam/cnf.hpp"
#include "kdiam/error.hpp"
#include "kdiam/oracle.hpp"
#include "kdiam/reduction.hpp"

using namespace kdiam;

namespace {

cnf_formula random_formula(std::mt19937_64& rng) {
  auto const n = 1 + rng() % 6;
  auto const m = 1 + rng() % 8;
  std::vector<clause> clauses;
  for (std::size_t j = 0; j < m; ++j) {
    clause c;
    auto const width = 1 + rng() % 3;
    for (std::size_t i = 0; i < width; ++i) {
      auto const v = static_cast<literal>(1 + rng() % n);
      c.push_back(rng() % 2 ? v : -v);
    }
    clauses.push_back(c);
  }
  return cnf_formula{n, clauses};
}

error_kind dimacs_error(std::string const& text, std::size_t* line = nullptr) {
  std::istringstream in{text};
  try {
    read_dimacs(in);
  } catch (parse_error const& e) {
    if (line) {
      *line = e.line();
    }
    return e.kind();
  } catch (error const& e) {
    return e.kind();
  }
  ADD_FAILURE() << "expected an error for: " << text;
  return error_kind::self_loop;
}

}  // namespace

TEST(reduction, gadget_shape) {
  auto const inst = cnf_to_graph(cnf_formula{2, {{1, 2}, {-1}}});
  auto const& g = inst.graph;
  EXPECT_EQ(g.node_count(), 5U);
  EXPECT_EQ(g.edge_count(), 7U);
  EXPECT_EQ(inst.source, 0U);
  EXPECT_EQ(inst.target, 4U);
  EXPECT_EQ(inst.budget_k, 2U);

  std::multiset<std::pair<node_id, node_id>> chain;
  std::vector<std::pair<node_id, std::string>> into_clause;
  for (auto const& e : g.edges()) {
    EXPECT_EQ(e.length, length_t{1});
    auto const hi = std::max(e.u, e.v);
    if (hi <= 2) {
      chain.insert({std::min(e.u, e.v), hi});
    } else {
      into_clause.emplace_back(hi, g.color_name(e.color));
    }
  }
  EXPECT_EQ(chain, (std::multiset<std::pair<node_id, node_id>>{{0, 1}, {0, 1}, {1, 2}, {1, 2}}));
  std::sort(into_clause.begin(), into_clause.end());
  EXPECT_EQ(into_clause, (std::vector<std::pair<node_id, std::string>>{
                             {3, "x1"}, {3, "x2"}, {4, "¬x1"}}));
  EXPECT_EQ(g.color_count(), 4U);
  for (color_id c = 0; c < g.color_count(); ++c) {
    EXPECT_EQ(literal_name(inst.literal_of_color[c]), g.color_name(c));
  }
}

TEST(reduction, smallest_gadget) {
  auto const inst = cnf_to_graph(cnf_formula{1, {{1}}});
  EXPECT_EQ(inst.graph.node_count(), 3U);
  EXPECT_EQ(inst.graph.edge_count(), 3U);
  auto const p = find_gadget_witness(inst);
  ASSERT_TRUE(p);
  EXPECT_EQ(extract_assignment(inst, *p), (assignment{false, true}));
}

TEST(reduction, empty_clause_is_rejected) {
  try {
    cnf_formula(2, {{1}, {}});
    ADD_FAILURE();
  } catch (error const& e) {
    EXPECT_EQ(e.kind(), error_kind::empty_clause);
  }
  EXPECT_THROW(cnf_formula(0, {}), error);
  EXPECT_THROW(cnf_formula(2, {{3}}), error);
  EXPECT_THROW(cnf_formula(2, {{0}}), error);
}

TEST(reduction, duplicate_literals_merge) {
  cnf_formula const f{2, {{1, 1, -2, 1}}};
  EXPECT_EQ(f.clauses().front(), (clause{1, -2}));
  EXPECT_EQ(cnf_to_graph(f).graph.edge_count(), 6U);
}

TEST(reduction, decide_and_extract) {
  auto const sat = cnf_to_graph(cnf_formula{2, {{1, 2}, {-1}}});
  EXPECT_TRUE(decide_via_gadget(sat));
  auto const p = find_gadget_witness(sat);
  ASSERT_TRUE(p);
  EXPECT_EQ(extract_assignment(sat, *p), (assignment{false, false, true}));

  auto const unsat = cnf_to_graph(cnf_formula{1, {{1}, {-1}}});
  EXPECT_FALSE(decide_via_gadget(unsat));
  EXPECT_FALSE(find_gadget_witness(unsat));
}

TEST(reduction, extract_rejects_bad_witnesses) {
  auto const inst = cnf_to_graph(cnf_formula{2, {{1, 2}, {-1}}});
  auto const& g = inst.graph;
  // a path stopping short of the target
  std::vector<edge_id> shortcut{g.neighbors(0).front().edge};
  auto const partial = make_path(g, 0, shortcut);
  EXPECT_THROW(extract_assignment(inst, partial), std::invalid_argument);

  // x1 true then x2 via the only clause-1 edge, ¬x1 into C2: three colors
  std::vector<edge_id> route;
  auto pick = [&](node_id from, node_id to, std::string const& name) {
    for (auto const& inc : g.neighbors(from)) {
      if (inc.neighbor == to && g.color_name(g.at(inc.edge).color) == name) {
        route.push_back(inc.edge);
        return;
      }
    }
    FAIL() << name;
  };
  pick(0, 1, "x1");
  pick(1, 2, "x2");
  pick(2, 3, "x1");
  pick(3, 4, "¬x1");
  auto const over = make_path(g, 0, route);
  EXPECT_EQ(over.distinct_colors, 3U);
  EXPECT_THROW(extract_assignment(inst, over), std::invalid_argument);
}

TEST(reduction, agrees_with_brute_sat_on_random_formulas) {
  std::mt19937_64 rng{2024};
  std::size_t satisfiable = 0;
  for (int i = 0; i < 100; ++i) {
    auto const f = random_formula(rng);
    auto const inst = cnf_to_graph(f);
    auto const expected = oracle::brute_sat(f);
    auto const p = find_gadget_witness(inst);
    ASSERT_EQ(p.has_value(), expected.has_value()) << "formula " << i;
    if (p) {
      ++satisfiable;
      EXPECT_EQ(p->total_length,
                length_t{static_cast<std::int64_t>(f.variable_count() + f.clauses().size())});
      EXPECT_EQ(p->distinct_colors, f.variable_count());
      auto const a = extract_assignment(inst, *p);
      EXPECT_TRUE(f.satisfied_by(a));
    }
  }
  EXPECT_GT(satisfiable, 10U);
  EXPECT_LT(satisfiable, 100U);
}

TEST(reduction, dimacs_round_trip) {
  std::istringstream in{"c example\np cnf 3 2\n1 -2 0\n2 3\n -1 0\n"};
  auto const f = read_dimacs(in);
  EXPECT_EQ(f.variable_count(), 3U);
  EXPECT_EQ(f.clauses(), (std::vector<clause>{{1, -2}, {2, 3, -1}}));
  std::ostringstream out;
  write_dimacs(f, out);
  EXPECT_EQ(out.str(), "p cnf 3 2\n1 -2 0\n2 3 -1 0\n");
  std::istringstream again{out.str()};
  EXPECT_EQ(read_dimacs(again).clauses(), f.clauses());
}

TEST(reduction, dimacs_errors) {
  std::size_t line = 0;
  EXPECT_EQ(dimacs_error("p cnf 2 1\n1 x 0\n", &line), error_kind::parse_error);
  EXPECT_EQ(line, 2U);
  EXPECT_EQ(dimacs_error("1 2 0\n"), error_kind::parse_error);
  EXPECT_EQ(dimacs_error("p cnf 2 2\n1 2 0\n", &line), error_kind::parse_error);
  EXPECT_EQ(dimacs_error("p cnf 2 1\n1 2\n"), error_kind::parse_error);
  EXPECT_EQ(dimacs_error("p cnf 2 1\n0\n"), error_kind::empty_clause);
  EXPECT_EQ(dimacs_error("p cnf 2 1\np cnf 2 1\n1 0\n"), error_kind::parse_error);
}
