#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace nrsched {

using Int = std::int64_t;

// Objective values and prefix sums. Reduction-family instances overflow 64 bits.
using Wide = __int128;

std::string to_string(Wide v);

/// Parses an optionally signed decimal integer; throws std::invalid_argument
/// on malformed text and std::out_of_range on overflow.
Wide parse_wide(std::string_view text);

inline std::ostream& operator<<(std::ostream& os, Wide v) { return os << to_string(v); }

}  // namespace nrsched
