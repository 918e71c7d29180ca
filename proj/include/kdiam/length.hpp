#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace kdiam {

// Exact edge / path length. Unit lengths are the common case.
using length_t = boost::rational<std::int64_t>;

// Constrained distance; nullopt stands for "no feasible path" (infinity).
using distance_t = std::optional<length_t>;

// Accepts "3", "3/2", "2.5", "-0.75".
std::optional<length_t> parse_length(std::string_view text);

// Canonical form: "3" for integers, "p/q" otherwise.
std::string format_exact(length_t const& value);

// Two decimals, rounded half away from zero ("1.67" for 5/3).
std::string format_decimal(length_t const& value, int places = 2);

// "inf" for an infeasible distance.
std::string format_distance(distance_t const& d, bool exact);

double to_double(length_t const& value);

}  // namespace kdiam
