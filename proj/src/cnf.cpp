#include "kdiam/cnf.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "kdiam/error.hpp"

namespace kdiam {

cnf_formula::cnf_formula(std::size_t variable_count, std::vector<clause> clauses)
    : variable_count_{variable_count} {
  if (variable_count == 0) {
    throw error{error_kind::invalid_formula, "formula needs at least one variable"};
  }
  clauses_.reserve(clauses.size());
  for (std::size_t j = 0; j < clauses.size(); ++j) {
    auto const& raw = clauses[j];
    if (raw.empty()) {
      throw error{error_kind::empty_clause,
                  "clause " + std::to_string(j + 1) + " is empty"};
    }
    clause merged;
    for (auto const l : raw) {
      auto const var = static_cast<std::size_t>(std::abs(static_cast<long>(l)));
      if (l == 0 || var > variable_count) {
        throw error{error_kind::invalid_formula,
                    "clause " + std::to_string(j + 1) + ": literal " +
                        std::to_string(l) + " outside 1.." +
                        std::to_string(variable_count)};
      }
      if (std::find(begin(merged), end(merged), l) == end(merged)) {
        merged.push_back(l);
      }
    }
    clauses_.push_back(std::move(merged));
  }
}

bool cnf_formula::satisfied_by(assignment const& a) const {
  return std::all_of(begin(clauses_), end(clauses_), [&](clause const& c) {
    return std::any_of(begin(c), end(c), [&](literal l) {
      auto const var = static_cast<std::size_t>(std::abs(l));
      return var < a.size() && a[var] == (l > 0);
    });
  });
}

std::string literal_name(literal l) {
  return (l < 0 ? "¬x" : "x") + std::to_string(std::abs(l));
}

cnf_formula read_dimacs(std::istream& in) {
  std::optional<std::size_t> variables;
  std::size_t declared_clauses = 0;
  std::vector<clause> clauses;
  clause current;
  std::size_t current_start = 0;

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream tokens{line};
    std::string first;
    if (!(tokens >> first) || first == "c" || first.front() == 'c') {
      continue;
    }
    if (first == "%") {
      break;
    }
    if (first == "p") {
      std::string format;
      long long vars = -1;
      long long count = -1;
      std::string extra;
      if (variables || !(tokens >> format >> vars >> count) || format != "cnf" ||
          vars < 0 || count < 0 || (tokens >> extra)) {
        throw parse_error{line_no, "expected a single 'p cnf <vars> <clauses>' header"};
      }
      variables = static_cast<std::size_t>(vars);
      declared_clauses = static_cast<std::size_t>(count);
      continue;
    }
    if (!variables) {
      throw parse_error{line_no, "clause before 'p cnf' header"};
    }

    std::istringstream values{line};
    std::string token;
    while (values >> token) {
      char* end = nullptr;
      auto const v = std::strtol(token.c_str(), &end, 10);
      if (*end != '\0' || token.empty()) {
        throw parse_error{line_no, "bad literal '" + token + "'"};
      }
      if (static_cast<std::size_t>(std::labs(v)) > *variables) {
        throw parse_error{line_no, "literal " + token + " exceeds declared " +
                                       std::to_string(*variables) + " variables"};
      }
      if (v == 0) {
        if (current.empty()) {
          throw error{error_kind::empty_clause,
                      "line " + std::to_string(line_no) + ": empty clause"};
        }
        clauses.push_back(std::move(current));
        current.clear();
      } else {
        if (current.empty()) {
          current_start = line_no;
        }
        current.push_back(static_cast<literal>(v));
      }
    }
  }

  if (!variables) {
    throw parse_error{line_no, "missing 'p cnf' header"};
  }
  if (!current.empty()) {
    throw parse_error{current_start, "clause not terminated by 0"};
  }
  if (clauses.size() != declared_clauses) {
    throw parse_error{0, "header declares " + std::to_string(declared_clauses) +
                             " clauses but " + std::to_string(clauses.size()) +
                             " were read"};
  }
  return cnf_formula{*variables, std::move(clauses)};
}

cnf_formula read_dimacs_file(std::string const& path) {
  if (path == "-") {
    return read_dimacs(std::cin);
  }
  std::ifstream in{path};
  if (!in) {
    throw parse_error{0, "cannot open '" + path + "'"};
  }
  return read_dimacs(in);
}

void write_dimacs(cnf_formula const& f, std::ostream& out) {
  out << "p cnf " << f.variable_count() << ' ' << f.clauses().size() << '\n';
  for (auto const& c : f.clauses()) {
    for (auto const l : c) {
      out << l << ' ';
    }
    out << "0\n";
  }
}

}  // namespace kdiam
