#include "kdiam/length.hpp"

#include <charconv>
#include <cstdlib>

namespace kdiam {

namespace {

std::optional<std::int64_t> parse_int(std::string_view s) {
  if (s.empty()) {
    return std::nullopt;
  }
  std::int64_t value = 0;
  auto const [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    return std::nullopt;
  }
  return value;
}

bool all_digits(std::string_view s) {
  for (char c : s) {
    if (c < '0' || c > '9') {
      return false;
    }
  }
  return true;
}

}  // namespace

std::optional<length_t> parse_length(std::string_view text) {
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) {
    text.remove_prefix(1);
  }
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t' ||
                           text.back() == '\r')) {
    text.remove_suffix(1);
  }
  if (text.empty()) {
    return std::nullopt;
  }

  if (auto const slash = text.find('/'); slash != std::string_view::npos) {
    auto const num = parse_int(text.substr(0, slash));
    auto const den = parse_int(text.substr(slash + 1));
    if (!num || !den || *den <= 0) {
      return std::nullopt;
    }
    return length_t{*num, *den};
  }

  if (auto const dot = text.find('.'); dot != std::string_view::npos) {
    bool negative = false;
    auto whole = text.substr(0, dot);
    auto const frac = text.substr(dot + 1);
    if (!whole.empty() && (whole.front() == '-' || whole.front() == '+')) {
      negative = whole.front() == '-';
      whole.remove_prefix(1);
    }
    if ((whole.empty() && frac.empty()) || !all_digits(whole) ||
        !all_digits(frac) || whole.size() + frac.size() > 18) {
      return std::nullopt;
    }
    std::int64_t num = 0;
    std::int64_t den = 1;
    for (char c : whole) {
      num = num * 10 + (c - '0');
    }
    for (char c : frac) {
      num = num * 10 + (c - '0');
      den *= 10;
    }
    return length_t{negative ? -num : num, den};
  }

  if (auto const v = parse_int(text.front() == '+' ? text.substr(1) : text)) {
    return length_t{*v};
  }
  return std::nullopt;
}

std::string format_exact(length_t const& value) {
  if (value.denominator() == 1) {
    return std::to_string(value.numerator());
  }
  return std::to_string(value.numerator()) + "/" +
         std::to_string(value.denominator());
}

std::string format_decimal(length_t const& value, int places) {
  __int128 scale = 1;
  for (int i = 0; i < places; ++i) {
    scale *= 10;
  }
  __int128 const num = value.numerator();
  __int128 const den = value.denominator();
  bool const negative = num < 0;
  __int128 const scaled = (negative ? -num : num) * scale;
  __int128 const rounded = (2 * scaled + den) / (2 * den);

  auto const whole = static_cast<std::int64_t>(rounded / scale);
  auto frac = static_cast<std::int64_t>(rounded % scale);

  std::string out;
  if (negative && rounded != 0) {
    out += '-';
  }
  out += std::to_string(whole);
  if (places > 0) {
    std::string digits = std::to_string(frac);
    out += '.';
    out += std::string(static_cast<std::size_t>(places) - digits.size(), '0');
    out += digits;
  }
  return out;
}

std::string format_distance(distance_t const& d, bool exact) {
  if (!d) {
    return "inf";
  }
  if (exact || d->denominator() == 1) {
    return format_exact(*d);
  }
  return format_decimal(*d);
}

double to_double(length_t const& value) {
  return static_cast<double>(value.numerator()) /
         static_cast<double>(value.denominator());
}

}  // namespace kdiam
