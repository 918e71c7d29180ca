#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "kdiam/length.hpp"

namespace kdiam {

using node_id = std::uint32_t;
using color_id = std::uint32_t;
using edge_id = std::uint32_t;

struct edge {
  node_id u;
  node_id v;
  length_t length;
  color_id color;

  node_id other(node_id x) const { return x == u ? v : u; }
};

// Edge as supplied by a caller: the line is named, not yet interned.
struct edge_spec {
  node_id u;
  node_id v;
  length_t length{1};
  std::string color;

  friend bool operator==(edge_spec const&, edge_spec const&) = default;
};

// Undirected multigraph whose edges carry a positive length and a line color.
// Parallel edges are allowed as long as their colors differ. Immutable once
// built, so it can be shared freely between threads.
class colored_graph {
public:
  struct incidence {
    edge_id edge;
    node_id neighbor;
  };

  colored_graph() = default;

  std::size_t node_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  std::size_t color_count() const { return color_names_.size(); }

  std::span<edge const> edges() const { return edges_; }
  edge const& at(edge_id e) const { return edges_.at(e); }

  // Incident edges ordered by (neighbor, color, edge id).
  std::span<incidence const> neighbors(node_id n) const {
    return adjacency_.at(n);
  }

  std::string const& color_name(color_id c) const { return color_names_.at(c); }
  std::optional<color_id> find_color(std::string_view name) const;

  // Edge list in insertion order with color names restored.
  std::vector<edge_spec> edge_specs() const;

  friend class graph_builder;

private:
  std::vector<edge> edges_;
  std::vector<std::vector<incidence>> adjacency_;
  std::vector<std::string> color_names_;
  std::unordered_map<std::string, color_id> color_ids_;
};

// Incremental construction; each add_edge validates immediately so readers
// can attach their own location to a failure.
class graph_builder {
public:
  explicit graph_builder(std::size_t node_count);

  edge_id add_edge(edge_spec const& spec);
  colored_graph build() &&;

private:
  colored_graph g_;
  std::set<std::tuple<node_id, node_id, color_id>> seen_;
};

// Validates and builds a graph. Colors get dense ids in order of first
// appearance. Throws kdiam::error (self_loop, duplicate_colored_edge,
// non_positive_length, node_out_of_range).
colored_graph build_graph(std::size_t node_count,
                          std::span<edge_spec const> edges);

inline colored_graph build_graph(std::size_t node_count,
                                 std::vector<edge_spec> const& edges) {
  return build_graph(node_count, std::span<edge_spec const>{edges});
}

// Connectivity ignoring colors. The empty graph is not connected.
bool is_connected(colored_graph const& g);

// Number of distinct colors used by edges.
std::size_t line_count(colored_graph const& g);

length_t total_length(colored_graph const& g);

// A node-simple path given by its edges. `nodes` has edges.size() + 1 entries.
struct path_result {
  std::vector<edge_id> edges;
  std::vector<node_id> nodes;
  length_t total_length{0};
  std::size_t interchanges{0};
  std::size_t distinct_colors{0};

  node_id source() const { return nodes.front(); }
  node_id target() const { return nodes.back(); }
};

// Walks `edges` from `source`, checks contiguity and node-simplicity and fills
// in the derived counts. Throws std::invalid_argument on a malformed walk.
path_result make_path(colored_graph const& g, node_id source,
                      std::span<edge_id const> edges);

// Number of adjacent edge pairs with different colors.
std::size_t count_interchanges(colored_graph const& g,
                               std::span<edge_id const> edges);

std::size_t count_distinct_colors(colored_graph const& g,
                                  std::span<edge_id const> edges);

}  // namespace kdiam
