#include "kdiam/pathfind.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <queue>
#include <tuple>

#include "kdiam/error.hpp"

namespace kdiam {

namespace {

constexpr auto kNone = std::numeric_limits<std::uint32_t>::max();

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) {
    throw error{error_kind::arithmetic_overflow, "path length overflow"};
  }
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw error{error_kind::arithmetic_overflow,
                "edge lengths need too large a common denominator"};
  }
  return r;
}

// Edge lengths rescaled to integers by the lcm of their denominators, so
// the search compares plain integers and stays exact.
struct scaled_weights {
  explicit scaled_weights(colored_graph const& g) {
    for (auto const& e : g.edges()) {
      auto const den = e.length.denominator();
      scale = checked_mul(scale / std::gcd(scale, den), den);
    }
    std::int64_t total = 0;
    weights.reserve(g.edge_count());
    for (auto const& e : g.edges()) {
      auto const w =
          checked_mul(e.length.numerator(), scale / e.length.denominator());
      total = checked_add(total, w);
      weights.push_back(w);
    }
  }

  std::int64_t scale{1};
  std::vector<std::int64_t> weights;
};

void check_node(colored_graph const& g, node_id n) {
  if (n >= g.node_count()) {
    throw error{error_kind::unknown_node,
                "unknown node " + std::to_string(n) + " (graph has " +
                    std::to_string(g.node_count()) + " nodes)"};
  }
}

}  // namespace

std::size_t max_useful_budget(colored_graph const& g) {
  return std::max<std::size_t>(1, g.node_count() - 1);
}

std::size_t effective_budget(colored_graph const& g, std::size_t k) {
  if (k < 1) {
    throw error{error_kind::invalid_k, "interchange budget k must be >= 1"};
  }
  return std::min(k, max_useful_budget(g));
}

distance_t budget_staircase::at(std::size_t k) const {
  distance_t d;
  for (auto const& step : steps) {
    if (step.k > k) {
      break;
    }
    d = step.distance;
  }
  return d;
}

class label_search {
public:
  label_search(colored_graph const& g, node_id s, std::size_t max_interchanges)
      : g_{g}, weights_{g} {
    set_.graph_ = &g;
    set_.source_ = s;
    set_.max_interchanges_ = max_interchanges;
    set_.scale_ = weights_.scale;
    set_.frontier_.resize(g.node_count() * (g.color_count() + 1));
  }

  // Runs until the queue drains, or until the first label at `stop_at` is
  // settled.
  pareto_label_set run(std::optional<node_id> stop_at) && {
    auto const s = set_.source_;
    insert(s, kNoColor, 0, 0, kNone, 0);
    while (!queue_.empty()) {
      auto const top = queue_.top();
      queue_.pop();
      auto const& settled = set_.labels_[top.id];
      if (settled.dead) {
        continue;
      }
      if (stop_at && top.node == *stop_at) {
        break;
      }
      auto const last = top.color_slot == 0 ? kNoColor : top.color_slot - 1;
      auto const length = settled.length;
      auto const used = settled.interchanges;
      for (auto const& [id, next] : g_.neighbors(top.node)) {
        // Re-entering the source only closes a cycle; never optimal.
        if (next == s) {
          continue;
        }
        auto const color = g_.at(id).color;
        auto const cost = used + ((last != kNoColor && last != color) ? 1U : 0U);
        if (cost > set_.max_interchanges_) {
          continue;
        }
        insert(next, color, checked_add(length, weights_.weights[id]), cost,
               top.id, id);
      }
    }
    return std::move(set_);
  }

private:
  struct entry {
    std::int64_t length;
    std::uint32_t interchanges;
    node_id node;
    std::uint32_t color_slot;
    std::uint32_t id;

    bool operator>(entry const& o) const {
      return std::tie(length, interchanges, node, color_slot, id) >
             std::tie(o.length, o.interchanges, o.node, o.color_slot, o.id);
    }
  };

  void insert(node_id n, color_id c, std::int64_t length,
              std::uint32_t interchanges, std::uint32_t parent, edge_id via) {
    auto& front = set_.frontier_[set_.state(n, c)];
    auto& labels = set_.labels_;
    for (auto const id : front) {
      if (labels[id].length <= length && labels[id].interchanges <= interchanges) {
        return;
      }
    }
    std::erase_if(front, [&](std::uint32_t id) {
      if (length <= labels[id].length && interchanges <= labels[id].interchanges) {
        labels[id].dead = true;
        return true;
      }
      return false;
    });

    auto const id = static_cast<std::uint32_t>(labels.size());
    labels.push_back({length, interchanges, parent, via, false});
    auto const pos = std::find_if(begin(front), end(front), [&](std::uint32_t o) {
      return labels[o].length > length;
    });
    front.insert(pos, id);
    queue_.push({length, interchanges, n,
                 c == kNoColor ? 0U : static_cast<std::uint32_t>(c + 1), id});
  }

  colored_graph const& g_;
  scaled_weights weights_;
  pareto_label_set set_;
  std::priority_queue<entry, std::vector<entry>, std::greater<>> queue_;
};

std::size_t pareto_label_set::state(node_id n, color_id c) const {
  return static_cast<std::size_t>(n) * (graph_->color_count() + 1) +
         (c == kNoColor ? 0 : static_cast<std::size_t>(c) + 1);
}

length_t pareto_label_set::to_length(std::int64_t scaled) const {
  return length_t{scaled, scale_};
}

std::vector<pareto_label> pareto_label_set::frontier(node_id n,
                                                     color_id last_color) const {
  check_node(*graph_, n);
  if (last_color != kNoColor && last_color >= graph_->color_count()) {
    return {};
  }
  std::vector<pareto_label> out;
  for (auto const id : frontier_[state(n, last_color)]) {
    out.push_back({to_length(labels_[id].length), labels_[id].interchanges});
  }
  return out;
}

std::uint32_t pareto_label_set::best_label(node_id t,
                                           std::size_t max_interchanges) const {
  auto best = kNone;
  auto const better = [&](std::uint32_t a, std::uint32_t b) {
    return std::tie(labels_[a].length, labels_[a].interchanges) <
           std::tie(labels_[b].length, labels_[b].interchanges);
  };
  for (std::size_t slot = 0; slot <= graph_->color_count(); ++slot) {
    auto const c = slot == 0 ? kNoColor : static_cast<color_id>(slot - 1);
    for (auto const id : frontier_[state(t, c)]) {
      if (labels_[id].interchanges <= max_interchanges &&
          (best == kNone || better(id, best))) {
        best = id;
      }
    }
  }
  return best;
}

path_result pareto_label_set::reconstruct(std::uint32_t label) const {
  std::vector<edge_id> edges;
  for (auto id = label; labels_[id].parent != kNone; id = labels_[id].parent) {
    edges.push_back(labels_[id].via);
  }
  std::reverse(begin(edges), end(edges));
  return make_path(*graph_, source_, edges);
}

budget_staircase pareto_label_set::staircase(node_id t) const {
  check_node(*graph_, t);
  std::vector<std::pair<std::size_t, std::int64_t>> reached;
  for (std::size_t slot = 0; slot <= graph_->color_count(); ++slot) {
    auto const c = slot == 0 ? kNoColor : static_cast<color_id>(slot - 1);
    for (auto const id : frontier_[state(t, c)]) {
      reached.emplace_back(labels_[id].interchanges, labels_[id].length);
    }
  }
  std::sort(begin(reached), end(reached));

  budget_staircase out;
  if (reached.empty() || reached.front().first > 0) {
    out.steps.push_back({1, std::nullopt});
  }
  std::optional<std::int64_t> best;
  for (auto const& [interchanges, length] : reached) {
    if (!best || length < *best) {
      best = length;
      out.steps.push_back({interchanges + 1, to_length(length)});
    }
  }
  return out;
}

distance_t pareto_label_set::distance(node_id t, std::size_t k) const {
  if (auto const b = best(t, k)) {
    return b->length;
  }
  return std::nullopt;
}

std::optional<pareto_label> pareto_label_set::best(node_id t,
                                                   std::size_t k) const {
  check_node(*graph_, t);
  auto const id = best_label(t, k == 0 ? 0 : k - 1);
  if (k == 0 || id == kNone) {
    return std::nullopt;
  }
  return pareto_label{to_length(labels_[id].length), labels_[id].interchanges};
}

std::optional<path_result> pareto_label_set::best_path(node_id t,
                                                       std::size_t k) const {
  check_node(*graph_, t);
  auto const id = best_label(t, k == 0 ? 0 : k - 1);
  if (k == 0 || id == kNone) {
    return std::nullopt;
  }
  return reconstruct(id);
}

pareto_label_set pareto_sweep(colored_graph const& g, node_id s,
                              std::optional<std::size_t> max_interchanges) {
  check_node(g, s);
  return label_search{g, s, max_interchanges.value_or(max_useful_budget(g) - 1)}
      .run(std::nullopt);
}

std::optional<path_result> interchange_constrained_shortest_path(
    colored_graph const& g, node_id s, node_id t, std::size_t k) {
  k = effective_budget(g, k);
  check_node(g, s);
  check_node(g, t);
  auto const labels = label_search{g, s, k - 1}.run(t);
  return labels.best_path(t, k);
}

std::vector<budget_staircase> all_budget_distances(colored_graph const& g,
                                                   node_id s) {
  auto const labels = pareto_sweep(g, s);
  std::vector<budget_staircase> out;
  out.reserve(g.node_count());
  for (node_id t = 0; t < g.node_count(); ++t) {
    out.push_back(labels.staircase(t));
  }
  return out;
}

std::optional<length_and_interchanges> min_interchanges_among_shortest_paths(
    colored_graph const& g, node_id s, node_id t) {
  check_node(g, s);
  check_node(g, t);
  auto const labels = label_search{g, s, max_useful_budget(g) - 1}.run(t);
  auto const path = labels.best_path(t, max_useful_budget(g));
  if (!path) {
    return std::nullopt;
  }
  return length_and_interchanges{path->total_length, path->interchanges};
}

}  // namespace kdiam
