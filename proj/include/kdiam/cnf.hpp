#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace kdiam {

// Signed variable index: +i is x_i, -i is its negation (i >= 1).
using literal = std::int32_t;
using clause = std::vector<literal>;

// Truth values indexed by variable, entry 0 unused.
using assignment = std::vector<bool>;

// CNF formula over variables x_1..x_n. Clauses are non-empty, literal
// indices lie in [1, n], and duplicate literals inside a clause are merged
// (first occurrence kept).
class cnf_formula {
public:
  // Throws EmptyClause or InvalidFormula.
  cnf_formula(std::size_t variable_count, std::vector<clause> clauses);

  std::size_t variable_count() const { return variable_count_; }
  std::vector<clause> const& clauses() const { return clauses_; }

  bool satisfied_by(assignment const& a) const;

private:
  std::size_t variable_count_;
  std::vector<clause> clauses_;
};

// "x3" or "¬x3".
std::string literal_name(literal l);

// DIMACS CNF: `c` comment lines, a `p cnf <vars> <clauses>` header, then
// 0-terminated clauses of signed integers. Throws parse_error with line
// numbers, EmptyClause for a bare `0`.
cnf_formula read_dimacs(std::istream& in);
cnf_formula read_dimacs_file(std::string const& path);
void write_dimacs(cnf_formula const& f, std::ostream& out);

}  // namespace kdiam
