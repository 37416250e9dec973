#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace inflation {

using BigInt = boost::multiprecision::cpp_int;
using ExactRational = boost::multiprecision::cpp_rational;

/// Parses an integer ("12"), a decimal ("7.5", "-0.25", "1e3" is rejected)
/// or a fraction ("15/2"). Decimals are expanded digit by digit, so the
/// result is exact.
ExactRational parse_rational(std::string_view text);

/// Always "p/q", including "n/1" for integers.
std::string to_fraction_string(const ExactRational& value);

BigInt ceil(const ExactRational& value);

/// Smallest integer m with m >= total / n, saturated at `cap`. A count c
/// satisfies c >= total / n exactly when c >= this threshold.
std::uint64_t size_threshold(std::uint64_t total, const ExactRational& n,
                             std::uint64_t cap);

/// Exact binomial coefficient by the multiplicative recurrence; 0 when
/// k > n.
BigInt binomial(std::uint64_t n, std::uint64_t k);

/// Multinomial size! / (part!)^parts with part = size / parts. Requires
/// parts | size.
BigInt balanced_multinomial(std::uint64_t size, std::uint64_t parts);

BigInt pow2(std::uint64_t exponent);

}  // namespace inflation
