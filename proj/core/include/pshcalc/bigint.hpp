#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>

namespace pshcalc {

/// Exact arbitrary-precision integer used for every count and coefficient.
using BigInt = mpz_class;

inline std::string to_decimal(const BigInt& value) { return value.get_str(10); }

/// Parses an optionally signed decimal integer. Throws ParseError.
BigInt parse_decimal(std::string_view text);

/// Number of bits in |value|; zero has bit length 0.
inline std::size_t bit_length(const BigInt& value) {
  return sgn(value) == 0 ? 0 : mpz_sizeinbase(value.get_mpz_t(), 2);
}

}  // namespace pshcalc
