#include "kdiam/graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

#include "kdiam/error.hpp"

namespace kdiam {

std::optional<color_id> colored_graph::find_color(std::string_view name) const {
  if (auto const it = color_ids_.find(std::string{name}); it != end(color_ids_)) {
    return it->second;
  }
  return std::nullopt;
}

std::vector<edge_spec> colored_graph::edge_specs() const {
  std::vector<edge_spec> specs;
  specs.reserve(edges_.size());
  for (auto const& e : edges_) {
    specs.push_back({e.u, e.v, e.length, color_names_[e.color]});
  }
  return specs;
}

graph_builder::graph_builder(std::size_t node_count) {
  if (node_count == 0) {
    throw error{error_kind::node_out_of_range, "graph needs at least one node"};
  }
  g_.adjacency_.resize(node_count);
}

edge_id graph_builder::add_edge(edge_spec const& spec) {
  auto const n = g_.node_count();
  auto const where = "edge (" + std::to_string(spec.u) + "," +
                     std::to_string(spec.v) + "," + spec.color + ")";
  if (spec.u >= n || spec.v >= n) {
    throw error{error_kind::node_out_of_range,
                where + ": endpoint outside 0.." + std::to_string(n - 1)};
  }
  if (spec.u == spec.v) {
    throw error{error_kind::self_loop, where + ": self-loop"};
  }
  if (spec.length <= length_t{0}) {
    throw error{error_kind::non_positive_length,
                where + ": length must be positive"};
  }

  auto const existing = g_.color_ids_.find(spec.color);
  auto const color = existing != end(g_.color_ids_)
                         ? existing->second
                         : static_cast<color_id>(g_.color_names_.size());
  if (!seen_.emplace(std::min(spec.u, spec.v), std::max(spec.u, spec.v), color)
           .second) {
    throw error{error_kind::duplicate_colored_edge,
                where + ": duplicate edge with the same color"};
  }
  if (existing == end(g_.color_ids_)) {
    g_.color_ids_.emplace(spec.color, color);
    g_.color_names_.push_back(spec.color);
  }

  auto const id = static_cast<edge_id>(g_.edges_.size());
  g_.edges_.push_back({spec.u, spec.v, spec.length, color});
  g_.adjacency_[spec.u].push_back({id, spec.v});
  g_.adjacency_[spec.v].push_back({id, spec.u});
  return id;
}

colored_graph graph_builder::build() && {
  auto const& edges = g_.edges_;
  for (auto& list : g_.adjacency_) {
    std::sort(begin(list), end(list), [&](auto const& a, auto const& b) {
      return std::tuple{a.neighbor, edges[a.edge].color, a.edge} <
             std::tuple{b.neighbor, edges[b.edge].color, b.edge};
    });
  }
  return std::move(g_);
}

colored_graph build_graph(std::size_t node_count,
                          std::span<edge_spec const> edges) {
  graph_builder builder{node_count};
  for (auto const& spec : edges) {
    builder.add_edge(spec);
  }
  return std::move(builder).build();
}

bool is_connected(colored_graph const& g) {
  if (g.node_count() == 0) {
    return false;
  }
  std::vector<bool> reached(g.node_count(), false);
  std::queue<node_id> todo;
  reached[0] = true;
  todo.push(0);
  std::size_t count = 1;
  while (!todo.empty()) {
    auto const n = todo.front();
    todo.pop();
    for (auto const& inc : g.neighbors(n)) {
      if (!reached[inc.neighbor]) {
        reached[inc.neighbor] = true;
        ++count;
        todo.push(inc.neighbor);
      }
    }
  }
  return count == g.node_count();
}

std::size_t line_count(colored_graph const& g) {
  std::vector<bool> used(g.color_count(), false);
  for (auto const& e : g.edges()) {
    used[e.color] = true;
  }
  return static_cast<std::size_t>(std::count(begin(used), end(used), true));
}

length_t total_length(colored_graph const& g) {
  length_t sum{0};
  for (auto const& e : g.edges()) {
    sum += e.length;
  }
  return sum;
}

std::size_t count_interchanges(colored_graph const& g,
                               std::span<edge_id const> edges) {
  std::size_t count = 0;
  for (std::size_t i = 1; i < edges.size(); ++i) {
    if (g.at(edges[i - 1]).color != g.at(edges[i]).color) {
      ++count;
    }
  }
  return count;
}

std::size_t count_distinct_colors(colored_graph const& g,
                                  std::span<edge_id const> edges) {
  std::set<color_id> colors;
  for (auto const e : edges) {
    colors.insert(g.at(e).color);
  }
  return colors.size();
}

path_result make_path(colored_graph const& g, node_id source,
                      std::span<edge_id const> edges) {
  if (source >= g.node_count()) {
    throw std::invalid_argument{"path source outside the graph"};
  }
  path_result p;
  p.edges.assign(begin(edges), end(edges));
  p.nodes.reserve(edges.size() + 1);
  p.nodes.push_back(source);

  std::vector<bool> visited(g.node_count(), false);
  visited[source] = true;
  auto at = source;
  for (auto const id : edges) {
    if (id >= g.edge_count()) {
      throw std::invalid_argument{"path references unknown edge"};
    }
    auto const& e = g.at(id);
    if (e.u != at && e.v != at) {
      throw std::invalid_argument{"path edges are not contiguous"};
    }
    at = e.other(at);
    if (visited[at]) {
      throw std::invalid_argument{"path revisits node " + std::to_string(at)};
    }
    visited[at] = true;
    p.nodes.push_back(at);
    p.total_length += e.length;
  }
  p.interchanges = count_interchanges(g, edges);
  p.distinct_colors = count_distinct_colors(g, edges);
  return p;
}

}  // namespace kdiam
