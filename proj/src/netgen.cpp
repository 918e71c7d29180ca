#include "kdiam/netgen.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>

#include "kdiam/indicators.hpp"

namespace kdiam {

namespace {

std::string line_name(std::size_t index) {
  if (index < 26) {
    return std::string(1, static_cast<char>('A' + index));
  }
  return "L" + std::to_string(index + 1);
}

struct signature {
  std::size_t nodes;
  std::size_t lines;
  std::size_t transfer_stations;
  std::int64_t total_length;
  std::int64_t diameter;
  std::vector<std::int64_t> di;  // k = 1..3
  std::optional<length_t> tau;
};

std::size_t count_transfer_stations(colored_graph const& g) {
  std::size_t count = 0;
  for (node_id n = 0; n < g.node_count(); ++n) {
    auto const incident = g.neighbors(n);
    if (incident.empty()) {
      continue;
    }
    auto const first = g.at(incident.front().edge).color;
    if (std::any_of(begin(incident), end(incident), [&](auto const& inc) {
          return g.at(inc.edge).color != first;
        })) {
      ++count;
    }
  }
  return count;
}

void verify(int id, colored_graph const& g, signature const& sig) {
  auto const fail = [id](std::string const& what) {
    throw std::logic_error{"paper network (" + std::to_string(id) +
                           ") reconstruction mismatch: " + what};
  };
  if (g.node_count() != sig.nodes) fail("node count");
  if (line_count(g) != sig.lines) fail("line count");
  if (count_transfer_stations(g) != sig.transfer_stations) fail("transfer stations");
  if (total_length(g) != length_t{sig.total_length}) fail("total length");
  if (diameter(g) != length_t{sig.diameter}) fail("diameter");

  auto const di = interchange_diameter_sequence(g);
  for (std::size_t k = 1; k <= sig.di.size(); ++k) {
    if (di.at(k) != length_t{sig.di[k - 1]}) {
      fail("di_" + std::to_string(k));
    }
  }
  if (sig.tau && directness(g).tau != sig.tau) {
    fail("directness");
  }
}

colored_graph build_paper_network(int id) {
  auto const unit = [](node_id u, node_id v, char const* line) {
    return edge_spec{u, v, length_t{1}, line};
  };
  switch (id) {
    case 1: return chain_network({4, 4, 3});
    case 2: return chain_network({2, 2, 1});
    case 3:
      // a0..a4 = 0..4, b0 b1 b2 b3 = 5 6 7 8, c0 c1 c2 = 9 10 11
      return build_graph(12, std::vector<edge_spec>{
                                 unit(0, 1, "A"), unit(1, 2, "A"),
                                 unit(2, 3, "A"), unit(3, 4, "A"),
                                 unit(5, 6, "B"), unit(6, 2, "B"),
                                 unit(2, 7, "B"), unit(7, 8, "B"),
                                 unit(9, 7, "C"), unit(7, 10, "C"),
                                 unit(10, 11, "C")});
    case 4:
      // a b c d e f = 0..5
      return build_graph(6, std::vector<edge_spec>{
                                unit(0, 1, "red"), unit(1, 4, "red"),
                                unit(1, 2, "blue"), unit(2, 5, "blue"),
                                unit(2, 3, "green")});
    case 5:
      return build_graph(6, std::vector<edge_spec>{
                                unit(0, 1, "red"), unit(1, 2, "red"),
                                unit(2, 3, "red"), unit(1, 4, "blue"),
                                unit(2, 5, "green")});
    default:
      throw std::invalid_argument{"paper network id must be 1..5, got " +
                                  std::to_string(id)};
  }
}

signature signature_of(int id) {
  auto const three_halves = length_t{3, 2};
  switch (id) {
    case 1: return {12, 3, 2, 11, 11, {4, 8, 11}, std::nullopt};
    case 2: return {6, 3, 2, 5, 5, {2, 4, 5}, std::nullopt};
    case 3: return {12, 3, 2, 11, 5, {4, 5, 5}, std::nullopt};
    case 4: return {6, 3, 2, 5, 3, {2, 3, 3}, three_halves};
    default: return {6, 3, 2, 5, 3, {3, 3, 3}, three_halves};
  }
}

// Unbiased draw in [0, bound) independent of the standard library's
// distribution implementations.
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) {
  auto const limit = std::numeric_limits<std::uint64_t>::max() -
                     std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x = 0;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

std::size_t parse_size(std::string_view s, std::string_view what) {
  std::size_t v = 0;
  auto const [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw std::invalid_argument{"bad " + std::string{what} + " '" +
                                std::string{s} + "'"};
  }
  return v;
}

std::vector<std::string_view> split(std::string_view s) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    auto const comma = s.find(',', start);
    parts.push_back(s.substr(start, comma - start));
    if (comma == std::string_view::npos) {
      return parts;
    }
    start = comma + 1;
  }
}

}  // namespace

colored_graph paper_network(int id) {
  auto g = build_paper_network(id);
  verify(id, g, signature_of(id));
  return g;
}

std::vector<std::string> paper_network_node_names(int id) {
  switch (id) {
    case 1:
    case 2: {
      std::vector<std::string> names;
      for (std::size_t i = 0; i < (id == 1 ? 12U : 6U); ++i) {
        names.push_back("v" + std::to_string(i));
      }
      return names;
    }
    case 3:
      return {"a0", "a1", "a2", "a3", "a4", "b0",
              "b1", "b2", "b3", "c0", "c1", "c2"};
    case 4:
    case 5: return {"a", "b", "c", "d", "e", "f"};
    default:
      throw std::invalid_argument{"paper network id must be 1..5, got " +
                                  std::to_string(id)};
  }
}

colored_graph chain_network(std::vector<std::size_t> const& segments) {
  if (segments.empty() ||
      std::find(begin(segments), end(segments), 0U) != end(segments)) {
    throw std::invalid_argument{"chain segments must be positive"};
  }
  std::vector<edge_spec> edges;
  node_id at = 0;
  for (std::size_t line = 0; line < segments.size(); ++line) {
    for (std::size_t i = 0; i < segments[line]; ++i, ++at) {
      edges.push_back({at, at + 1, length_t{1}, line_name(line)});
    }
  }
  return build_graph(at + 1, edges);
}

colored_graph random_line_network(std::size_t line_count,
                                  std::size_t nodes_per_line,
                                  std::uint64_t seed) {
  if (line_count < 1 || nodes_per_line < 2) {
    throw std::invalid_argument{
        "random line network needs >= 1 line and >= 2 nodes per line"};
  }
  std::mt19937_64 rng{seed};
  std::vector<edge_spec> edges;
  std::size_t node_count = 0;

  for (std::size_t line = 0; line < line_count; ++line) {
    std::vector<node_id> stops(nodes_per_line);
    std::vector<bool> reused(nodes_per_line, false);
    if (line > 0) {
      auto const most = std::min<std::size_t>({2, nodes_per_line, node_count});
      auto const shared = 1 + draw(rng, most);

      // Partial Fisher-Yates picks distinct existing stations and slots.
      std::vector<node_id> pool(node_count);
      std::iota(begin(pool), end(pool), node_id{0});
      std::vector<std::size_t> slots(nodes_per_line);
      std::iota(begin(slots), end(slots), std::size_t{0});
      for (std::size_t i = 0; i < shared; ++i) {
        std::swap(pool[i], pool[i + draw(rng, pool.size() - i)]);
        std::swap(slots[i], slots[i + draw(rng, slots.size() - i)]);
        stops[slots[i]] = pool[i];
        reused[slots[i]] = true;
      }
    }
    for (std::size_t i = 0; i < nodes_per_line; ++i) {
      if (!reused[i]) {
        stops[i] = static_cast<node_id>(node_count++);
      }
    }
    for (std::size_t i = 1; i < nodes_per_line; ++i) {
      edges.push_back({stops[i - 1], stops[i], length_t{1}, line_name(line)});
    }
  }
  return build_graph(node_count, edges);
}

generator_spec parse_generator_spec(std::string_view text) {
  auto const colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw std::invalid_argument{"generator spec must look like 'paper:3', "
                                "'chain:4,4,3' or 'random:LINES,PER_LINE,SEED'"};
  }
  auto const kind = text.substr(0, colon);
  auto const args = split(text.substr(colon + 1));

  generator_spec spec;
  if (kind == "paper") {
    auto const id = parse_size(args.front(), "paper network id");
    if (args.size() != 1 || id < 1 || id > 5) {
      throw std::invalid_argument{"paper network id must be 1..5"};
    }
    spec.type = generator_spec::kind::paper;
    spec.paper_id = static_cast<int>(id);
  } else if (kind == "chain") {
    spec.type = generator_spec::kind::chain;
    for (auto const a : args) {
      spec.segments.push_back(parse_size(a, "segment length"));
    }
  } else if (kind == "random") {
    if (args.size() != 3) {
      throw std::invalid_argument{"random generator needs LINES,PER_LINE,SEED"};
    }
    spec.type = generator_spec::kind::random_lines;
    spec.line_count = parse_size(args[0], "line count");
    spec.nodes_per_line = parse_size(args[1], "nodes per line");
    spec.seed = parse_size(args[2], "seed");
    if (spec.line_count < 1 || spec.nodes_per_line < 2) {
      throw std::invalid_argument{"random generator needs LINES >= 1 and PER_LINE >= 2"};
    }
  } else {
    throw std::invalid_argument{"unknown generator '" + std::string{kind} + "'"};
  }
  return spec;
}

colored_graph generate(generator_spec const& spec) {
  switch (spec.type) {
    case generator_spec::kind::paper: return paper_network(spec.paper_id);
    case generator_spec::kind::chain: return chain_network(spec.segments);
    case generator_spec::kind::random_lines:
      return random_line_network(spec.line_count, spec.nodes_per_line, spec.seed);
  }
  throw std::invalid_argument{"unknown generator kind"};
}

}  // namespace kdiam
