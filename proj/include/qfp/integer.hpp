#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace qfp {

// Arbitrary-precision signed integer used for every coefficient.
using Integer = mpz_class;

inline std::string to_decimal(const Integer& v) { return v.get_str(10); }

// Parses an optionally signed decimal literal; throws std::invalid_argument.
Integer parse_integer(std::string_view text);

}  // namespace qfp
