#include "nrsched/wide.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "nrsched/error.hpp"

namespace nrsched {

std::string to_string(Wide v) {
  if (v == 0) return "0";
  const bool negative = v < 0;
  // Work on the unsigned magnitude so the minimum value does not overflow.
  unsigned __int128 mag = negative ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
  std::string digits;
  while (mag != 0) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(mag % 10)));
    mag /= 10;
  }
  if (negative) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

Wide parse_wide(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty integer");
  bool negative = false;
  std::size_t i = 0;
  if (text[0] == '-' || text[0] == '+') {
    negative = text[0] == '-';
    i = 1;
  }
  if (i == text.size()) throw std::invalid_argument("missing digits");
  constexpr unsigned __int128 limit = static_cast<unsigned __int128>(std::numeric_limits<Wide>::max());
  unsigned __int128 mag = 0;
  for (; i < text.size(); ++i) {
    const char c = text[i];
    if (c < '0' || c > '9') throw std::invalid_argument("not a decimal integer: " + std::string(text));
    mag = mag * 10 + static_cast<unsigned>(c - '0');
    if (mag > limit + (negative ? 1 : 0)) throw std::out_of_range("integer out of range: " + std::string(text));
  }
  return negative ? static_cast<Wide>(-mag) : static_cast<Wide>(mag);
}

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvariantViolation: return "InvariantViolation";
    case ErrorKind::NonUniformRequirement: return "NonUniformRequirement";
    case ErrorKind::ZeroRequirement: return "ZeroRequirement";
    case ErrorKind::ModelMismatch: return "ModelMismatch";
    case ErrorKind::SizeLimit: return "SizeLimit";
    case ErrorKind::Unsolvable: return "Unsolvable";
    case ErrorKind::InfeasibleSchedule: return "InfeasibleSchedule";
    case ErrorKind::NotTerminal: return "NotTerminal";
    case ErrorKind::StateSpaceExceeded: return "StateSpaceExceeded";
    case ErrorKind::InvalidEpsilon: return "InvalidEpsilon";
    case ErrorKind::IneligibleTuple: return "IneligibleTuple";
    case ErrorKind::InvalidProfile: return "InvalidProfile";
    case ErrorKind::OverflowBudget: return "OverflowBudget";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Error";
}

}  // namespace nrsched
