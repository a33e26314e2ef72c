#pragma once

#include <string_view>
#include <vector>

#include "powerlaw/discrete_law.hpp"

namespace powerlaw {

/// Integer lengths spaced `per_decade` points per decade from lo to hi,
/// rounded and deduplicated; both ends included.
std::vector<Length> log_grid(Length lo, Length hi, unsigned per_decade = 4);

/// lo, lo+1, ..., hi.
std::vector<Length> linear_grid(Length lo, Length hi);

/// Parses "1,10,100", "log:10:1e4[:4]" or "range:0:50". Values may use
/// exponent notation as long as they are integral. Result is strictly
/// increasing; throws std::invalid_argument otherwise.
std::vector<Length> parse_grid(std::string_view text);

/// Same for real-valued budgets ("1,2.5,inf", "log:1:1e6:4").
std::vector<double> parse_real_grid(std::string_view text);

}  // namespace powerlaw
