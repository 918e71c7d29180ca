#include "kdiam/graph_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string_view>

#include "nlohmann/json.hpp"

#include "kdiam/error.hpp"

namespace kdiam {

namespace {

std::string_view trim(std::string_view s) {
  auto const is_space = [](char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\n';
  };
  while (!s.empty() && is_space(s.front())) {
    s.remove_prefix(1);
  }
  while (!s.empty() && is_space(s.back())) {
    s.remove_suffix(1);
  }
  return s;
}

std::optional<std::uint64_t> parse_unsigned(std::string_view s) {
  s = trim(s);
  std::uint64_t v = 0;
  auto const [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    return std::nullopt;
  }
  return v;
}

struct located_edge {
  std::size_t line;
  edge_spec spec;
};

constexpr std::uint64_t kMaxNodes = 1U << 30U;

colored_graph assemble(std::size_t node_count,
                       std::vector<located_edge> const& edges,
                       std::string const& unit) {
  graph_builder builder{node_count};
  for (auto const& [where, spec] : edges) {
    try {
      builder.add_edge(spec);
    } catch (error const& e) {
      throw error{e.kind(), unit + std::to_string(where) + ": " + e.what()};
    }
  }
  return std::move(builder).build();
}

void check_name(std::string const& name) {
  if (name.find_first_of(",\n\r") != std::string::npos || name.empty() ||
      name.front() == '#' || trim(name).size() != name.size()) {
    throw error{error_kind::parse_error,
                "line name '" + name + "' cannot be written as CSV"};
  }
}

}  // namespace

colored_graph read_csv(std::istream& in) {
  std::optional<std::uint64_t> declared;
  std::vector<located_edge> edges;
  std::uint64_t max_id = 0;

  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    auto line = trim(raw);
    if (line.empty()) {
      continue;
    }
    if (line.front() == '#') {
      auto body = trim(line.substr(1));
      if (body.starts_with("nodes=")) {
        if (!edges.empty() || declared) {
          throw parse_error{line_no, "'# nodes=' must precede all edges"};
        }
        declared = parse_unsigned(body.substr(6));
        if (!declared || *declared == 0 || *declared > kMaxNodes) {
          throw parse_error{line_no, "bad node count '" +
                                         std::string{body.substr(6)} + "'"};
        }
      }
      continue;
    }

    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
      auto const comma = line.find(',', start);
      fields.push_back(trim(line.substr(start, comma - start)));
      if (comma == std::string_view::npos) {
        break;
      }
      start = comma + 1;
    }
    if (fields.size() < 3 || fields.size() > 4) {
      throw parse_error{line_no, "expected u,v,line[,length] but got " +
                                     std::to_string(fields.size()) + " fields"};
    }
    auto const u = parse_unsigned(fields[0]);
    auto const v = parse_unsigned(fields[1]);
    if (!u || !v || *u >= kMaxNodes || *v >= kMaxNodes) {
      throw parse_error{line_no, "node ids must be non-negative integers"};
    }
    if (fields[2].empty()) {
      throw parse_error{line_no, "empty line name"};
    }
    length_t length{1};
    if (fields.size() == 4) {
      auto const parsed = parse_length(fields[3]);
      if (!parsed) {
        throw parse_error{line_no,
                          "bad length '" + std::string{fields[3]} + "'"};
      }
      length = *parsed;
    }
    max_id = std::max({max_id, *u, *v});
    edges.push_back({line_no,
                     {static_cast<node_id>(*u), static_cast<node_id>(*v),
                      length, std::string{fields[2]}}});
  }

  std::size_t node_count = 0;
  if (declared) {
    node_count = *declared;
  } else if (!edges.empty()) {
    node_count = max_id + 1;
  } else {
    throw parse_error{0, "empty edge list and no '# nodes=' declaration"};
  }
  return assemble(node_count, edges, "line ");
}

void write_csv(colored_graph const& g, std::ostream& out) {
  out << "# nodes=" << g.node_count() << '\n';
  for (auto const& e : g.edges()) {
    auto const& name = g.color_name(e.color);
    check_name(name);
    out << e.u << ',' << e.v << ',' << name;
    if (e.length != length_t{1}) {
      out << ',' << format_exact(e.length);
    }
    out << '\n';
  }
}

colored_graph read_json(std::istream& in) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (nlohmann::json::parse_error const& e) {
    throw parse_error{0, std::string{"invalid JSON: "} + e.what()};
  }

  if (!doc.is_object() || !doc.contains("nodes") || !doc.contains("edges")) {
    throw parse_error{0, "expected an object with 'nodes' and 'edges'"};
  }
  auto const& nodes = doc["nodes"];
  if (!nodes.is_number_unsigned() || nodes.get<std::uint64_t>() == 0 ||
      nodes.get<std::uint64_t>() > kMaxNodes) {
    throw parse_error{0, "'nodes' must be a positive integer"};
  }
  auto const& list = doc["edges"];
  if (!list.is_array()) {
    throw parse_error{0, "'edges' must be an array"};
  }

  std::vector<located_edge> edges;
  std::size_t index = 0;
  for (auto const& item : list) {
    auto const fail = [&](std::string const& msg) {
      return parse_error{0, "edge #" + std::to_string(index) + ": " + msg};
    };
    if (!item.is_array() || item.size() < 3 || item.size() > 4) {
      throw fail("expected [u, v, \"line\", length]");
    }
    if (!item[0].is_number_unsigned() || !item[1].is_number_unsigned() ||
        item[0].get<std::uint64_t>() >= kMaxNodes ||
        item[1].get<std::uint64_t>() >= kMaxNodes) {
      throw fail("node ids must be non-negative integers");
    }
    if (!item[2].is_string() || item[2].get<std::string>().empty()) {
      throw fail("line name must be a non-empty string");
    }
    length_t length{1};
    if (item.size() == 4) {
      std::optional<length_t> parsed;
      if (item[3].is_number_integer()) {
        parsed = length_t{item[3].get<std::int64_t>()};
      } else if (item[3].is_number_float()) {
        parsed = parse_length(item[3].dump());
      } else if (item[3].is_string()) {
        parsed = parse_length(item[3].get<std::string>());
      }
      if (!parsed) {
        throw fail("bad length " + item[3].dump());
      }
      length = *parsed;
    }
    edges.push_back({index,
                     {item[0].get<node_id>(), item[1].get<node_id>(), length,
                      item[2].get<std::string>()}});
    ++index;
  }
  return assemble(nodes.get<std::size_t>(), edges, "edge #");
}

void write_json(colored_graph const& g, std::ostream& out) {
  out << "{\"nodes\": " << g.node_count() << ", \"edges\": [";
  bool first = true;
  for (auto const& e : g.edges()) {
    out << (first ? "\n  " : ",\n  ");
    first = false;
    out << '[' << e.u << ", " << e.v << ", "
        << nlohmann::json(g.color_name(e.color)).dump() << ", ";
    if (e.length.denominator() == 1) {
      out << e.length.numerator();
    } else {
      out << '"' << format_exact(e.length) << '"';
    }
    out << ']';
  }
  out << (first ? "]}\n" : "\n]}\n");
}

colored_graph read_graph(std::istream& in) {
  std::string const content{std::istreambuf_iterator<char>{in},
                            std::istreambuf_iterator<char>{}};
  auto const first =
      std::find_if_not(begin(content), end(content), [](unsigned char c) {
        return std::isspace(c) != 0;
      });
  std::istringstream stream{content};
  if (first != end(content) && *first == '{') {
    return read_json(stream);
  }
  return read_csv(stream);
}

colored_graph read_graph_file(std::string const& path) {
  if (path == "-") {
    return read_graph(std::cin);
  }
  std::ifstream in{path, std::ios::binary};
  if (!in) {
    throw parse_error{0, "cannot open '" + path + "'"};
  }
  return read_graph(in);
}

}  // namespace kdiam
