#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "kdiam/error.hpp"
#include "kdiam/graph_io.hpp"
#include "kdiam/indicators.hpp"
#include "kdiam/netgen.hpp"
#include "kdiam/oracle.hpp"
#include "kdiam/pathfind.hpp"
#include "kdiam/reduction.hpp"
#include "kdiam/report.hpp"
#include "kdiam/verify.hpp"

namespace kdiam::cli {

namespace {

constexpr auto kVersion = "kdiam 0.1.0";

struct common_options {
  std::string format{"text"};
  bool exact{false};
  std::optional<std::size_t> max_nodes;
  std::optional<std::uint64_t> max_paths;
  bool force{false};
};

void add_format_options(CLI::App* sub, common_options& o) {
  sub->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"text", "csv", "json"}));
  sub->add_flag("--exact", o.exact, "Print exact rationals instead of decimals");
}

void add_budget_options(CLI::App* sub, common_options& o) {
  sub->add_option("--max-nodes", o.max_nodes,
                  "Oracle node budget (env KDIAM_ORACLE_MAX_NODES, default 12)");
  sub->add_option("--max-paths", o.max_paths,
                  "Oracle path budget (env KDIAM_ORACLE_MAX_PATHS, default 1e7)");
  sub->add_flag("--force", o.force,
                "Run the exponential oracle beyond the node budget");
}

template <typename T>
std::optional<T> env_number(char const* name) {
  auto const* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') {
    return std::nullopt;
  }
  std::istringstream in{raw};
  T value{};
  if (!(in >> value) || value == 0 || !in.eof()) {
    throw parse_error{0, std::string{"bad value for "} + name};
  }
  return value;
}

oracle::enumeration_budget make_budget(common_options const& o) {
  oracle::enumeration_budget b;
  if (auto const v = env_number<std::size_t>("KDIAM_ORACLE_MAX_NODES")) {
    b.max_nodes = *v;
  }
  if (auto const v = env_number<std::uint64_t>("KDIAM_ORACLE_MAX_PATHS")) {
    b.max_paths = *v;
  }
  if (o.max_nodes) {
    b.max_nodes = *o.max_nodes;
  }
  if (o.max_paths) {
    b.max_paths = *o.max_paths;
  }
  b.allow_large_graphs = o.force;
  return b;
}

format_options make_format(common_options const& o) {
  return {parse_output_format(o.format), o.exact};
}

void write_to(std::string const& path, std::ostream& out,
              auto const& writer) {
  if (path == "-") {
    writer(out);
    return;
  }
  std::ofstream file{path, std::ios::binary};
  if (!file) {
    throw parse_error{0, "cannot write '" + path + "'"};
  }
  writer(file);
}

}  // namespace

int run(std::vector<std::string> const& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Interchange-constrained diameters of transit networks", "kdiam"};
  app.require_subcommand(1);
  bool version = false;
  app.add_flag("--version", version, "Print the version and exit");
  app.require_subcommand(0, 1);

  std::string file;
  common_options opt;

  auto* indicators = app.add_subcommand("indicators", "Full indicator report");
  indicators->add_option("file", file, "Edge list (CSV or JSON), '-' for stdin")
      ->required();
  add_format_options(indicators, opt);
  add_budget_options(indicators, opt);

  auto* di_seq = app.add_subcommand("di-seq", "Interchange-constrained diameters");
  di_seq->add_option("file", file, "Edge list, '-' for stdin")->required();
  add_format_options(di_seq, opt);

  std::size_t source = 0;
  std::size_t target = 0;
  std::optional<std::size_t> budget_k;
  bool color_constrained = false;
  auto* path = app.add_subcommand("path", "Constrained shortest path");
  path->add_option("file", file, "Edge list, '-' for stdin")->required();
  path->add_option("-s,--source", source, "Source node id")->required();
  path->add_option("-t,--target", target, "Target node id")->required();
  path->add_option("-k,--budget", budget_k,
                   "At most k-1 interchanges (or k lines with "
                   "--color-constrained); unconstrained when omitted");
  path->add_flag("--color-constrained", color_constrained,
                 "Limit distinct lines instead of interchanges (exhaustive search)");
  add_format_options(path, opt);
  add_budget_options(path, opt);

  auto* oracle_cmd =
      app.add_subcommand("oracle", "Compare the search with exhaustive enumeration");
  oracle_cmd->add_option("file", file, "Edge list, '-' for stdin")->required();
  add_format_options(oracle_cmd, opt);
  add_budget_options(oracle_cmd, opt);

  bool decide = false;
  std::string emit_graph;
  auto* sat = app.add_subcommand("sat-reduce", "Build the colored-graph gadget of a CNF formula");
  sat->add_option("file", file, "DIMACS CNF file, '-' for stdin")->required();
  sat->add_flag("--decide", decide, "Decide satisfiability through the gadget");
  sat->add_option("--emit-graph", emit_graph, "Write the gadget as CSV ('-' for stdout)");
  add_budget_options(sat, opt);

  std::string spec_text;
  std::string output{"-"};
  std::string gen_format{"csv"};
  auto* gen = app.add_subcommand("gen", "Generate a network edge list");
  gen->add_option("spec", spec_text,
                  "paper:1..5 | chain:4,4,3 | random:LINES,PER_LINE,SEED")
      ->required();
  gen->add_option("-o,--output", output, "Output file ('-' for stdout)");
  gen->add_option("--format", gen_format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));

  std::size_t seeds = 100;
  std::uint64_t first_seed = 0;
  auto* verify = app.add_subcommand("verify", "Property sweep: search vs oracle on random networks");
  verify->add_option("--seeds", seeds, "Number of random networks")->required();
  verify->add_option("--first-seed", first_seed, "First seed");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e, out, err);
  } catch (CLI::ParseError const& e) {
    if (version) {
      out << kVersion << '\n';
      return kSuccess;
    }
    app.exit(e, out, err);
    return kInputError;
  }

  try {
    if (indicators->parsed()) {
      auto const g = read_graph_file(file);
      write_report(full_report(g, make_budget(opt)), make_format(opt), out);
      return kSuccess;
    }

    if (di_seq->parsed()) {
      auto const g = read_graph_file(file);
      write_di_sequence(interchange_diameter_sequence(g), make_format(opt), out);
      return kSuccess;
    }

    if (path->parsed()) {
      auto const g = read_graph_file(file);
      auto const s = static_cast<node_id>(source);
      auto const t = static_cast<node_id>(target);
      if (source >= g.node_count() || target >= g.node_count()) {
        throw error{error_kind::unknown_node,
                    "node ids must be below " + std::to_string(g.node_count())};
      }
      std::optional<path_result> result;
      if (color_constrained) {
        auto const budget = make_budget(opt);
        auto const k = budget_k.value_or(std::max<std::size_t>(1, g.color_count()));
        if (!budget.allow_large_graphs && g.node_count() > budget.max_nodes) {
          err << "error: color-constrained search is exponential; the graph has "
              << g.node_count() << " nodes, above the budget of "
              << budget.max_nodes << " (use --force or --max-nodes)\n";
          return kBudgetExceeded;
        }
        result = oracle::brute_color_constrained(g, s, t, k, budget);
      } else {
        auto const k = budget_k.value_or(max_useful_budget(g));
        auto const used = effective_budget(g, k);
        if (budget_k && used != k) {
          err << "warning: k=" << k << " clamped to " << used
              << " (no simple path has more than " << used - 1
              << " interchanges)\n";
        }
        result = interchange_constrained_shortest_path(g, s, t, used);
      }
      write_path(g, result, make_format(opt), out);
      return result ? kSuccess : kInfeasible;
    }

    if (oracle_cmd->parsed()) {
      auto const g = read_graph_file(file);
      auto const comparison = compare_with_oracle(g, make_budget(opt));
      write_oracle_comparison(comparison, make_format(opt), out);
      return comparison.agree ? kSuccess : kInfeasible;
    }

    if (sat->parsed()) {
      auto const formula = read_dimacs_file(file);
      auto const inst = cnf_to_graph(formula);
      if (!emit_graph.empty()) {
        write_to(emit_graph, out, [&](std::ostream& o) { write_csv(inst.graph, o); });
      }
      if (!decide) {
        if (emit_graph != "-") {
          out << "variables: " << formula.variable_count() << '\n'
              << "clauses: " << formula.clauses().size() << '\n'
              << "gadget nodes: " << inst.graph.node_count() << '\n'
              << "gadget edges: " << inst.graph.edge_count() << '\n'
              << "labels: " << inst.graph.color_count() << '\n'
              << "source: " << inst.source << '\n'
              << "target: " << inst.target << '\n'
              << "color budget k: " << inst.budget_k << '\n';
        }
        return kSuccess;
      }
      auto budget = make_budget(opt);
      budget.allow_large_graphs = true;
      auto const witness = find_gadget_witness(inst, budget);
      if (!witness) {
        out << "UNSAT\n";
        return kInfeasible;
      }
      auto const a = extract_assignment(inst, *witness);
      out << "SAT\n";
      for (std::size_t v = 1; v < a.size(); ++v) {
        out << (v == 1 ? "" : " ") << 'x' << v << '=' << (a[v] ? 1 : 0);
      }
      out << "\nwitness labels:";
      for (std::size_t i = 0; i < formula.variable_count(); ++i) {
        out << ' ' << inst.graph.color_name(inst.graph.at(witness->edges[i]).color);
      }
      out << "\nwitness length: " << format_exact(witness->total_length) << '\n';
      return kSuccess;
    }

    if (gen->parsed()) {
      auto const g = generate(parse_generator_spec(spec_text));
      write_to(output, out, [&](std::ostream& o) {
        if (gen_format == "json") {
          write_json(g, o);
        } else {
          write_csv(g, o);
        }
      });
      return kSuccess;
    }

    if (verify->parsed()) {
      std::size_t passed = 0;
      for (std::size_t i = 0; i < seeds; ++i) {
        auto const seed = first_seed + i;
        auto const g = verification_instance(seed);
        auto const result = check_against_oracle(g);
        if (result.ok()) {
          ++passed;
        } else {
          err << "seed " << seed << ": " << result.mismatches
              << " mismatches, first " << result.first_mismatch << '\n';
        }
      }
      out << passed << '/' << seeds << " oracle-equivalent\n";
      return passed == seeds ? kSuccess : kInfeasible;
    }

    if (version) {
      out << kVersion << '\n';
      return kSuccess;
    }
    err << app.help();
    return kInputError;
  } catch (error const& e) {
    err << "error: " << to_string(e.kind()) << ": " << e.what() << '\n';
    return e.kind() == error_kind::budget_exceeded ? kBudgetExceeded : kInputError;
  } catch (std::invalid_argument const& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
}

}  // namespace kdiam::cli
