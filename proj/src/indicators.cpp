#include "kdiam/indicators.hpp"

#include <algorithm>
#include <queue>
#include <tuple>

#include "kdiam/error.hpp"
#include "kdiam/pathfind.hpp"

namespace kdiam {

namespace {

void require_connected(colored_graph const& g) {
  if (!is_connected(g)) {
    throw error{error_kind::disconnected_graph, "graph is not connected"};
  }
}

void raise(distance_t& slot, distance_t const& d) {
  if (d && (!slot || *d > *slot)) {
    slot = d;
  }
}

std::size_t variance_terms(colored_graph const& g) {
  return std::max<std::size_t>(1, line_count(g));
}

void finish_sequence(diameter_sequence& seq, std::size_t terms) {
  std::vector<length_t> finite;
  for (std::size_t k = 1; k <= terms; ++k) {
    if (auto const v = seq.at(k)) {
      finite.push_back(*v);
    }
  }
  seq.variance = population_variance(finite);
}

struct sweep_summary {
  diameter_sequence di;
  directness_result directness;
};

// One Pareto sweep per source feeds both the di sequence and directness.
sweep_summary sweep_all_sources(colored_graph const& g) {
  require_connected(g);
  auto const n = g.node_count();
  auto const lines = line_count(g);
  auto const bound = std::max({max_useful_budget(g), lines, std::size_t{1}});

  // ranged[k]: max of pair values on budgets below the pair's stable point;
  // settled[k]: max final value of pairs that stabilize exactly at k.
  std::vector<distance_t> ranged(bound + 2);
  std::vector<distance_t> settled(bound + 2);
  std::size_t stable_from = 1;

  std::optional<length_t> far;
  std::size_t far_transfers = 0;

  for (node_id s = 0; s < n; ++s) {
    auto const labels = pareto_sweep(g, s);
    for (node_id t = 0; t < n; ++t) {
      auto const stairs = labels.staircase(t);
      auto const& steps = stairs.steps;
      for (std::size_t j = 0; j + 1 < steps.size(); ++j) {
        for (auto k = steps[j].k; k < steps[j + 1].k; ++k) {
          raise(ranged[k], steps[j].distance);
        }
      }
      raise(settled[steps.back().k], steps.back().distance);
      stable_from = std::max(stable_from, steps.back().k);

      if (s == t) {
        continue;
      }
      auto const lex = labels.best(t, max_useful_budget(g));
      if (!far || lex->length > *far) {
        far = lex->length;
        far_transfers = lex->interchanges;
      } else if (lex->length == *far) {
        far_transfers = std::max(far_transfers, lex->interchanges);
      }
    }
  }

  sweep_summary out;
  auto& seq = out.di;
  seq.stable_from = stable_from;
  seq.reported_up_to = std::max(stable_from, lines);
  distance_t tail;
  for (std::size_t k = 1; k <= seq.reported_up_to; ++k) {
    raise(tail, settled[k]);
    auto value = ranged[k];
    raise(value, tail);
    seq.values.push_back(value);
  }
  finish_sequence(seq, variance_terms(g));

  out.directness.max_transfers = far_transfers;
  if (far_transfers > 0) {
    out.directness.tau = length_t{static_cast<std::int64_t>(lines),
                                  static_cast<std::int64_t>(far_transfers)};
  }
  return out;
}

}  // namespace

distance_t diameter_sequence::at(std::size_t k) const {
  if (k == 0 || values.empty()) {
    return std::nullopt;
  }
  return values[std::min(k, values.size()) - 1];
}

std::vector<distance_t> shortest_distances(colored_graph const& g, node_id s) {
  if (s >= g.node_count()) {
    throw error{error_kind::unknown_node, "unknown node " + std::to_string(s)};
  }
  std::vector<distance_t> dist(g.node_count());
  using entry = std::pair<length_t, node_id>;
  std::priority_queue<entry, std::vector<entry>, std::greater<>> queue;
  dist[s] = length_t{0};
  queue.emplace(length_t{0}, s);
  while (!queue.empty()) {
    auto const [d, at] = queue.top();
    queue.pop();
    if (d > *dist[at]) {
      continue;
    }
    for (auto const& [id, next] : g.neighbors(at)) {
      auto const candidate = d + g.at(id).length;
      if (!dist[next] || candidate < *dist[next]) {
        dist[next] = candidate;
        queue.emplace(candidate, next);
      }
    }
  }
  return dist;
}

length_t diameter(colored_graph const& g) {
  require_connected(g);
  length_t d{0};
  for (node_id s = 0; s < g.node_count(); ++s) {
    for (auto const& x : shortest_distances(g, s)) {
      d = std::max(d, *x);
    }
  }
  return d;
}

length_t extension(colored_graph const& g) {
  auto const d = diameter(g);
  if (d == length_t{0}) {
    throw error{error_kind::zero_diameter,
                "network extension is undefined for a zero diameter"};
  }
  return total_length(g) / d;
}

directness_result directness(colored_graph const& g) {
  return sweep_all_sources(g).directness;
}

diameter_sequence interchange_diameter_sequence(colored_graph const& g) {
  return sweep_all_sources(g).di;
}

diameter_sequence color_diameter_sequence(
    colored_graph const& g, oracle::enumeration_budget const& budget) {
  require_connected(g);
  auto const brute = oracle::brute_diameter_sequences(g, budget);
  diameter_sequence seq;
  seq.values = brute.dc;
  seq.reported_up_to = seq.values.size();
  seq.stable_from = seq.values.size();
  finish_sequence(seq, variance_terms(g));
  return seq;
}

length_t population_variance(std::span<length_t const> values) {
  if (values.empty()) {
    return length_t{0};
  }
  auto const count = static_cast<std::int64_t>(values.size());
  length_t mean{0};
  for (auto const& v : values) {
    mean += v;
  }
  mean /= count;
  length_t sum{0};
  for (auto const& v : values) {
    sum += (v - mean) * (v - mean);
  }
  return sum / count;
}

indicator_report full_report(colored_graph const& g,
                             oracle::enumeration_budget const& budget) {
  auto summary = sweep_all_sources(g);

  indicator_report r;
  r.nodes = g.node_count();
  r.edges = g.edge_count();
  r.lines = line_count(g);
  r.total_length = total_length(g);
  r.diameter = diameter(g);
  if (r.diameter > length_t{0}) {
    r.extension = r.total_length / r.diameter;
  }
  r.directness = summary.directness;
  r.di = std::move(summary.di);

  if (!budget.allow_large_graphs && r.nodes > budget.max_nodes) {
    r.dc_note = "dc omitted: " + std::to_string(r.nodes) +
                " nodes exceed the oracle budget of " +
                std::to_string(budget.max_nodes);
  } else {
    try {
      r.dc = color_diameter_sequence(g, budget);
    } catch (error const& e) {
      if (e.kind() != error_kind::budget_exceeded) {
        throw;
      }
      r.dc_note = std::string{"dc omitted: "} + e.what();
    }
  }
  return r;
}

}  // namespace kdiam
