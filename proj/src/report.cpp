#include "kdiam/report.hpp"

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "nlohmann/json.hpp"

#include "kdiam/pathfind.hpp"

namespace kdiam {

namespace {

using nlohmann::ordered_json;

// Ratios (extension, directness, variance) always show two decimals;
// lengths stay integral when they are.
std::string ratio(length_t const& v, bool exact) {
  return exact ? format_exact(v) : format_decimal(v);
}

std::string dist(distance_t const& d, bool exact) {
  return format_distance(d, exact);
}

ordered_json json_value(length_t const& v) {
  return ordered_json{{"exact", format_exact(v)},
                      {"value", std::stod(format_decimal(v))}};
}

ordered_json json_value(distance_t const& d) {
  return d ? json_value(*d) : ordered_json(nullptr);
}

ordered_json json_sequence(diameter_sequence const& seq) {
  auto values = ordered_json::array();
  for (std::size_t k = 1; k <= seq.reported_up_to; ++k) {
    values.push_back({{"k", k}, {"value", json_value(seq.at(k))}});
  }
  return ordered_json{{"values", values},
                      {"reported_up_to", seq.reported_up_to},
                      {"stable_from", seq.stable_from},
                      {"variance", json_value(seq.variance)}};
}

std::string joined(diameter_sequence const& seq, bool exact) {
  std::string out;
  for (std::size_t k = 1; k <= seq.reported_up_to; ++k) {
    out += (k == 1 ? "" : " ") + dist(seq.at(k), exact);
  }
  return out;
}

void write_table(std::vector<std::vector<std::string>> const& rows,
                 std::ostream& out) {
  std::vector<std::size_t> width;
  for (auto const& row : rows) {
    width.resize(std::max(width.size(), row.size()));
    for (std::size_t c = 0; c < row.size(); ++c) {
      width[c] = std::max(width[c], row[c].size());
    }
  }
  for (auto const& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      line += row[c];
      if (c + 1 < row.size()) {
        line += std::string(width[c] - row[c].size() + 2, ' ');
      }
    }
    out << line << '\n';
  }
}

void write_csv_rows(std::vector<std::vector<std::string>> const& rows,
                    std::ostream& out) {
  for (auto const& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      out << (c == 0 ? "" : ",") << row[c];
    }
    out << '\n';
  }
}

std::vector<std::vector<std::string>> sequence_rows(
    diameter_sequence const& di, std::optional<diameter_sequence> const& dc,
    bool exact) {
  std::vector<std::vector<std::string>> rows;
  rows.push_back({"k", "di_k"});
  if (dc) {
    rows.front().push_back("dc_k");
  }
  auto const last = std::max(di.reported_up_to, dc ? dc->reported_up_to : 0);
  for (std::size_t k = 1; k <= last; ++k) {
    rows.push_back({std::to_string(k), dist(di.at(k), exact)});
    if (dc) {
      rows.back().push_back(dist(dc->at(k), exact));
    }
  }
  return rows;
}

}  // namespace

output_format parse_output_format(std::string_view name) {
  if (name == "text") return output_format::text;
  if (name == "csv") return output_format::csv;
  if (name == "json") return output_format::json;
  throw std::invalid_argument{"unknown output format '" + std::string{name} + "'"};
}

void write_report(indicator_report const& r, format_options const& opt,
                  std::ostream& out) {
  auto const exact = opt.exact;
  auto const tau = r.directness.tau ? ratio(*r.directness.tau, exact)
                                    : std::string{"undefined"};
  auto const ext = r.extension ? ratio(*r.extension, exact)
                               : std::string{"undefined"};

  std::vector<std::pair<std::string, std::string>> scalars{
      {"nodes", std::to_string(r.nodes)},
      {"edges", std::to_string(r.edges)},
      {"lines", std::to_string(r.lines)},
      {"total length", dist(r.total_length, exact)},
      {"diameter", dist(r.diameter, exact)},
      {"extension", ext},
      {"max transfers", std::to_string(r.directness.max_transfers)},
      {"directness", tau},
      {"di", joined(r.di, exact)},
      {"variance", ratio(r.di.variance, exact)},
  };
  if (r.dc) {
    scalars.emplace_back("dc", joined(*r.dc, exact));
    scalars.emplace_back("dc variance", ratio(r.dc->variance, exact));
  }

  switch (opt.format) {
    case output_format::text: {
      for (auto const& [key, value] : scalars) {
        out << key << ": " << value << '\n';
      }
      if (!r.dc_note.empty()) {
        out << "note: " << r.dc_note << '\n';
      }
      out << '\n';
      write_table(sequence_rows(r.di, r.dc, exact), out);
      break;
    }
    case output_format::csv: {
      out << "metric,value\n";
      for (auto const& [key, value] : scalars) {
        if (key == "di" || key == "dc") {
          continue;
        }
        auto name = key;
        std::replace(begin(name), end(name), ' ', '_');
        out << name << ',' << value << '\n';
      }
      out << '\n';
      write_csv_rows(sequence_rows(r.di, r.dc, exact), out);
      break;
    }
    case output_format::json: {
      ordered_json doc{
          {"nodes", r.nodes},
          {"edges", r.edges},
          {"lines", r.lines},
          {"total_length", json_value(r.total_length)},
          {"diameter", json_value(r.diameter)},
          {"extension", r.extension ? json_value(*r.extension) : ordered_json(nullptr)},
          {"max_transfers", r.directness.max_transfers},
          {"directness",
           r.directness.tau ? json_value(*r.directness.tau) : ordered_json(nullptr)},
          {"di", json_sequence(r.di)},
          {"dc", r.dc ? json_sequence(*r.dc) : ordered_json(nullptr)},
      };
      if (!r.dc_note.empty()) {
        doc["note"] = r.dc_note;
      }
      out << doc.dump(2) << '\n';
      break;
    }
  }
}

void write_di_sequence(diameter_sequence const& di, format_options const& opt,
                       std::ostream& out) {
  switch (opt.format) {
    case output_format::text:
      write_table(sequence_rows(di, std::nullopt, opt.exact), out);
      out << "variance: " << ratio(di.variance, opt.exact) << '\n';
      break;
    case output_format::csv:
      write_csv_rows(sequence_rows(di, std::nullopt, opt.exact), out);
      break;
    case output_format::json:
      out << json_sequence(di).dump(2) << '\n';
      break;
  }
}

void write_path(colored_graph const& g, std::optional<path_result> const& p,
                format_options const& opt, std::ostream& out) {
  if (opt.format == output_format::json) {
    if (!p) {
      out << "{\"feasible\": false}\n";
      return;
    }
    auto edges = ordered_json::array();
    for (auto const id : p->edges) {
      auto const& e = g.at(id);
      edges.push_back({{"u", e.u},
                       {"v", e.v},
                       {"line", g.color_name(e.color)},
                       {"length", format_exact(e.length)}});
    }
    ordered_json doc{{"feasible", true},
                     {"nodes", p->nodes},
                     {"edges", edges},
                     {"length", json_value(p->total_length)},
                     {"interchanges", p->interchanges},
                     {"distinct_colors", p->distinct_colors}};
    out << doc.dump(2) << '\n';
    return;
  }

  if (!p) {
    out << "infeasible\n";
    return;
  }
  if (opt.format == output_format::csv) {
    out << "step,u,v,line,length\n";
    for (std::size_t i = 0; i < p->edges.size(); ++i) {
      auto const& e = g.at(p->edges[i]);
      out << i + 1 << ',' << p->nodes[i] << ',' << p->nodes[i + 1] << ','
          << g.color_name(e.color) << ',' << format_exact(e.length) << '\n';
    }
    return;
  }

  out << "length: " << dist(p->total_length, opt.exact) << '\n'
      << "interchanges: " << p->interchanges << '\n'
      << "lines used: " << p->distinct_colors << '\n'
      << "route: " << p->nodes.front();
  for (std::size_t i = 0; i < p->edges.size(); ++i) {
    out << " -[" << g.color_name(g.at(p->edges[i]).color) << "]-> "
        << p->nodes[i + 1];
  }
  out << '\n';
}

oracle_comparison compare_with_oracle(colored_graph const& g,
                                      oracle::enumeration_budget const& budget) {
  oracle_comparison c{interchange_diameter_sequence(g),
                      oracle::brute_diameter_sequences(g, budget), true};
  for (std::size_t k = 1; k <= c.brute.di.size(); ++k) {
    if (c.fast.at(k) != c.brute.di[k - 1]) {
      c.agree = false;
    }
  }
  return c;
}

void write_oracle_comparison(oracle_comparison const& c,
                             format_options const& opt, std::ostream& out) {
  auto const terms = std::max(c.brute.di.size(), c.brute.dc.size());
  auto const at = [](std::vector<distance_t> const& v, std::size_t k) {
    return k <= v.size() ? v[k - 1] : v.back();
  };

  if (opt.format == output_format::json) {
    auto rows = ordered_json::array();
    for (std::size_t k = 1; k <= terms; ++k) {
      rows.push_back({{"k", k},
                      {"di_search", json_value(c.fast.at(k))},
                      {"di_oracle", k <= c.brute.di.size()
                                        ? json_value(c.brute.di[k - 1])
                                        : ordered_json(nullptr)},
                      {"dc_oracle", json_value(at(c.brute.dc, k))}});
    }
    out << ordered_json{{"rows", rows}, {"agree", c.agree}}.dump(2) << '\n';
    return;
  }

  std::vector<std::vector<std::string>> rows{
      {"k", "di_k search", "di_k oracle", "dc_k oracle", "match"}};
  for (std::size_t k = 1; k <= terms; ++k) {
    auto const fast = c.fast.at(k);
    auto const in_range = k <= c.brute.di.size();
    auto const brute = at(c.brute.di, k);
    rows.push_back({std::to_string(k), dist(fast, opt.exact),
                    in_range ? dist(brute, opt.exact) : "-",
                    dist(at(c.brute.dc, k), opt.exact),
                    !in_range ? "-" : fast == brute ? "yes" : "NO"});
  }
  if (opt.format == output_format::csv) {
    write_csv_rows(rows, out);
  } else {
    write_table(rows, out);
    out << (c.agree ? "search and oracle agree\n"
                    : "search and oracle DISAGREE\n");
  }
}

}  // namespace kdiam
