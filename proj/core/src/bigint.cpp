#include "pshcalc/bigint.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "pshcalc/errors.hpp"

namespace pshcalc {

BigInt parse_decimal(std::string_view text) {
  std::string_view digits = text;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](unsigned char ch) {
        return std::isdigit(ch) != 0;
      })) {
    throw ParseError("not a decimal integer: \"" + std::string(text) + "\"");
  }
  std::string body(text.front() == '+' ? text.substr(1) : text);
  return BigInt(body, 10);
}

}  // namespace pshcalc
