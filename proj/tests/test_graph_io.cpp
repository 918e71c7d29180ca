#include <gtest/gtest.h>

#include <sstream>

#include "kdiam/error.hpp"
#include "kdiam/graph_io.hpp"
#include "kdiam/netgen.hpp"

#include "test_support.hpp"

using namespace kdiam;

namespace {

colored_graph csv(std::string const& text) {
  std::istringstream in{text};
  return read_csv(in);
}

colored_graph json(std::string const& text) {
  std::istringstream in{text};
  return read_json(in);
}

std::string to_csv(colored_graph const& g) {
  std::ostringstream out;
  write_csv(g, out);
  return out.str();
}

std::string to_json(colored_graph const& g) {
  std::ostringstream out;
  write_json(g, out);
  return out.str();
}

template <typename Fn>
std::pair<error_kind, std::string> failure(Fn&& fn) {
  try {
    fn();
  } catch (error const& e) {
    return {e.kind(), e.what()};
  }
  ADD_FAILURE() << "expected an error";
  return {error_kind::parse_error, ""};
}

}  // namespace

TEST(graph_io, csv_basic_with_comments_and_default_length) {
  auto const g = csv(
      "# a comment\n"
      "0,1,red\n"
      "\n"
      "1, 2 , blue , 2.5\n"
      "  # indented comment\n"
      "2,3,red,3/2\r\n");
  EXPECT_EQ(g.node_count(), 4U);
  EXPECT_EQ(g.edge_count(), 3U);
  EXPECT_EQ(g.at(0).length, length_t{1});
  EXPECT_EQ(g.at(1).length, (length_t{5, 2}));
  EXPECT_EQ(g.color_name(g.at(1).color), "blue");
  EXPECT_EQ(g.at(2).length, (length_t{3, 2}));
}

TEST(graph_io, csv_node_directive_keeps_isolated_nodes) {
  auto const g = csv("# nodes=5\n0,1,a\n");
  EXPECT_EQ(g.node_count(), 5U);
  EXPECT_FALSE(is_connected(g));
}

TEST(graph_io, csv_errors_carry_line_numbers) {
  auto const [k1, m1] = failure([] { csv("0,1,a\n1,2\n"); });
  EXPECT_EQ(k1, error_kind::parse_error);
  EXPECT_NE(m1.find("line 2"), std::string::npos) << m1;

  auto const [k2, m2] = failure([] { csv("0,1,a\n\n3,3,b\n"); });
  EXPECT_EQ(k2, error_kind::self_loop);
  EXPECT_NE(m2.find("line 3"), std::string::npos) << m2;

  auto const [k3, m3] = failure([] { csv("0,1,a,0\n"); });
  EXPECT_EQ(k3, error_kind::non_positive_length);

  auto const [k4, m4] = failure([] { csv("0,1,a\n1,0,a\n"); });
  EXPECT_EQ(k4, error_kind::duplicate_colored_edge);
  EXPECT_NE(m4.find("line 2"), std::string::npos) << m4;

  auto const [k5, m5] = failure([] { csv("# nodes=2\n0,5,a\n"); });
  EXPECT_EQ(k5, error_kind::node_out_of_range);

  EXPECT_EQ(failure([] { csv("x,1,a\n"); }).first, error_kind::parse_error);
  EXPECT_EQ(failure([] { csv("0,1,a,fast\n"); }).first, error_kind::parse_error);
  EXPECT_EQ(failure([] { csv("0,1,\n"); }).first, error_kind::parse_error);
  EXPECT_EQ(failure([] { csv("# only comments\n"); }).first, error_kind::parse_error);
  EXPECT_EQ(failure([] { csv("0,1,a\n# nodes=4\n"); }).first, error_kind::parse_error);
}

TEST(graph_io, json_reads_numbers_and_rational_strings) {
  auto const g = json(R"({"nodes": 3, "edges": [[0, 1, "A", 1], [1, 2, "B", "3/2"], [0, 2, "C", 0.5], [0, 1, "B"]]})");
  EXPECT_EQ(g.node_count(), 3U);
  EXPECT_EQ(g.edge_count(), 4U);
  EXPECT_EQ(g.at(1).length, (length_t{3, 2}));
  EXPECT_EQ(g.at(2).length, (length_t{1, 2}));
  EXPECT_EQ(g.at(3).length, length_t{1});
}

TEST(graph_io, json_errors) {
  EXPECT_EQ(failure([] { json("{"); }).first, error_kind::parse_error);
  EXPECT_EQ(failure([] { json(R"({"nodes": 2})"); }).first, error_kind::parse_error);
  EXPECT_EQ(failure([] { json(R"({"nodes": 2, "edges": [[0, 1]]})"); }).first,
            error_kind::parse_error);
  EXPECT_EQ(failure([] { json(R"({"nodes": 2, "edges": [[0, 0, "a"]]})"); }).first,
            error_kind::self_loop);
  EXPECT_EQ(failure([] { json(R"({"nodes": 2, "edges": [[0, 1, "a", -2]]})"); }).first,
            error_kind::non_positive_length);
}

TEST(graph_io, csv_output_is_exact_and_stable) {
  auto const g = build_graph(3, {{0, 1, length_t{1}, "A"}, {1, 2, length_t{7, 2}, "B"}});
  EXPECT_EQ(to_csv(g), "# nodes=3\n0,1,A\n1,2,B,7/2\n");
  EXPECT_EQ(to_json(g),
            "{\"nodes\": 3, \"edges\": [\n  [0, 1, \"A\", 1],\n  [1, 2, \"B\", \"7/2\"]\n]}\n");
}

TEST(graph_io, round_trips_are_byte_stable) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    auto const g = test::random_multigraph(seed);
    auto const text = to_csv(g);
    EXPECT_EQ(to_csv(csv(text)), text);
    auto const j = to_json(g);
    EXPECT_EQ(to_json(json(j)), j);
    EXPECT_EQ(json(j).edge_specs(), g.edge_specs());
  }
}

TEST(graph_io, read_graph_detects_format) {
  std::istringstream as_json{"  {\"nodes\": 2, \"edges\": [[0, 1, \"x\"]]}"};
  EXPECT_EQ(read_graph(as_json).edge_count(), 1U);
  std::istringstream as_csv{"0,1,x\n1,2,y\n"};
  EXPECT_EQ(read_graph(as_csv).edge_count(), 2U);
}

TEST(graph_io, unwritable_line_names_are_rejected) {
  auto const g = build_graph(2, {{0, 1, length_t{1}, "a,b"}});
  std::ostringstream out;
  EXPECT_THROW(write_csv(g, out), error);
}
