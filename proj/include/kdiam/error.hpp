#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kdiam {

enum class error_kind {
  self_loop,
  duplicate_colored_edge,
  non_positive_length,
  node_out_of_range,
  invalid_k,
  unknown_node,
  budget_exceeded,
  empty_clause,
  invalid_formula,
  infeasible_path_witness,
  disconnected_graph,
  zero_diameter,
  arithmetic_overflow,
  parse_error,
};

char const* to_string(error_kind kind);

class error : public std::runtime_error {
public:
  error(error_kind kind, std::string const& what)
      : std::runtime_error{what}, kind_{kind} {}

  error_kind kind() const noexcept { return kind_; }

private:
  error_kind kind_;
};

// Malformed CSV / JSON / DIMACS input. `line` is 1-based, 0 when unknown.
class parse_error : public error {
public:
  parse_error(std::size_t line, std::string const& msg)
      : error{error_kind::parse_error,
              line == 0 ? msg : "line " + std::to_string(line) + ": " + msg},
        line_{line} {}

  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

}  // namespace kdiam
