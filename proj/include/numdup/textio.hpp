#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace numdup {

/// Parses a comma-separated integer list like "4,5,11" (spaces tolerated).
/// Throws std::invalid_argument on malformed input.
std::vector<std::int64_t> parse_int_list(std::string_view text);

std::string join_ints(const std::vector<std::int64_t>& values, char sep = ',');

}  // namespace numdup
