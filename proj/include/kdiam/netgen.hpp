#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "kdiam/graph.hpp"

namespace kdiam {

// The five illustrative networks. 1 and 2 are chains split into three lines
// (4+4+3 and 2+2+1 unit edges); 3 is a 12-station network of lines
// a0-a1-a2-a3-a4, b0-b1-a2-b2-b3, c0-b2-c1-c2; 4 and 5 are two colorings of
// the same six-node tree. Every build is checked against the network's
// known indicators and throws std::logic_error if it drifts.
colored_graph paper_network(int id);

// Station names for paper_network(id), indexed by node id.
std::vector<std::string> paper_network_node_names(int id);

// A chain whose consecutive segments of the given edge counts form lines
// "A", "B", ... (then "L27", ...).
colored_graph chain_network(std::vector<std::size_t> const& segments);

// `line_count` lines, each a simple path over `nodes_per_line` stations.
// Every line after the first reuses one or two existing stations (the
// transfer stations) at random positions, so the network is connected.
// Identical output for identical arguments.
colored_graph random_line_network(std::size_t line_count,
                                  std::size_t nodes_per_line,
                                  std::uint64_t seed);

struct generator_spec {
  enum class kind { paper, chain, random_lines };

  kind type{kind::paper};
  int paper_id{1};
  std::vector<std::size_t> segments;
  std::size_t line_count{1};
  std::size_t nodes_per_line{2};
  std::uint64_t seed{0};
};

// "paper:3", "chain:4,4,3", "random:LINES,NODES_PER_LINE,SEED".
// Throws std::invalid_argument.
generator_spec parse_generator_spec(std::string_view text);

colored_graph generate(generator_spec const& spec);

}  // namespace kdiam
