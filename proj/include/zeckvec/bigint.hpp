#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace zeckvec {

using BigInt = boost::multiprecision::cpp_int;

std::string to_string(const BigInt& value);

/// Parses an optionally signed decimal integer. Throws Error(ParseError).
BigInt parse_bigint(std::string_view text);

/// Narrowing conversion for values used as sizes or loop bounds.
/// Throws Error(DomainError) if the value does not fit.
std::int64_t to_int64(const BigInt& value);

inline bool is_zero(const BigInt& value) { return value.is_zero(); }

}  // namespace zeckvec
