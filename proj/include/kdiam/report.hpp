#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "kdiam/graph.hpp"
#include "kdiam/indicators.hpp"
#include "kdiam/oracle.hpp"

namespace kdiam {

enum class output_format { text, csv, json };

// Throws std::invalid_argument for anything but text / csv / json.
output_format parse_output_format(std::string_view name);

struct format_options {
  output_format format{output_format::text};
  // Rationals instead of two-decimal figures (text and CSV; JSON always
  // carries both).
  bool exact{false};
};

void write_report(indicator_report const& r, format_options const& opt,
                  std::ostream& out);

void write_di_sequence(diameter_sequence const& di, format_options const& opt,
                       std::ostream& out);

// Writes the path or the word "infeasible".
void write_path(colored_graph const& g, std::optional<path_result> const& p,
                format_options const& opt, std::ostream& out);

// Side-by-side di_k from the label-setting search and from enumeration,
// plus the enumerated dc_k.
struct oracle_comparison {
  diameter_sequence fast;
  oracle::diameter_sequences brute;
  bool agree{true};
};

oracle_comparison compare_with_oracle(colored_graph const& g,
                                      oracle::enumeration_budget const& budget);

void write_oracle_comparison(oracle_comparison const& c,
                             format_options const& opt, std::ostream& out);

}  // namespace kdiam
