#include "inflation/rational.hpp"

#include "inflation/error.hpp"

#include <cctype>

namespace inflation {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::parse: return "parse-error";
    case ErrorCode::budget_exceeded: return "budget-exceeded";
    case ErrorCode::infeasible: return "infeasible";
    case ErrorCode::precondition: return "precondition";
    case ErrorCode::internal: return "internal";
  }
  return "unknown";
}

namespace {

BigInt parse_digits(std::string_view digits, std::string_view whole) {
  if (digits.empty()) fail(ErrorCode::parse, "malformed number '" + std::string(whole) + "'");
  BigInt out = 0;
  for (char ch : digits) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) {
      fail(ErrorCode::parse, "malformed number '" + std::string(whole) + "'");
    }
    out = out * 10 + (ch - '0');
  }
  return out;
}

}  // namespace

ExactRational parse_rational(std::string_view text) {
  const std::string_view whole = text;
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  ExactRational value;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    BigInt num = parse_digits(text.substr(0, slash), whole);
    BigInt den = parse_digits(text.substr(slash + 1), whole);
    if (den == 0) fail(ErrorCode::parse, "zero denominator in '" + std::string(whole) + "'");
    value = ExactRational(num, den);
  } else if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = text.substr(0, dot);
    std::string_view frac_part = text.substr(dot + 1);
    if (int_part.empty() && frac_part.empty()) {
      fail(ErrorCode::parse, "malformed number '" + std::string(whole) + "'");
    }
    BigInt num = int_part.empty() ? BigInt(0) : parse_digits(int_part, whole);
    BigInt scale = 1;
    for (char ch : frac_part) {
      if (!std::isdigit(static_cast<unsigned char>(ch))) {
        fail(ErrorCode::parse, "malformed number '" + std::string(whole) + "'");
      }
      num = num * 10 + (ch - '0');
      scale *= 10;
    }
    value = ExactRational(num, scale);
  } else {
    value = ExactRational(parse_digits(text, whole));
  }
  return negative ? ExactRational(-value) : value;
}

std::string to_fraction_string(const ExactRational& value) {
  return boost::multiprecision::numerator(value).str() + "/" +
         boost::multiprecision::denominator(value).str();
}

BigInt ceil(const ExactRational& value) {
  const BigInt num = boost::multiprecision::numerator(value);
  const BigInt den = boost::multiprecision::denominator(value);
  BigInt q = num / den;  // truncates toward zero
  if (q * den < num) ++q;
  return q;
}

std::uint64_t size_threshold(std::uint64_t total, const ExactRational& n,
                             std::uint64_t cap) {
  if (n <= 0) fail(ErrorCode::precondition, "n must be positive");
  const BigInt t = ceil(ExactRational(total) / n);
  if (t > cap) return cap;
  return t.convert_to<std::uint64_t>();
}

BigInt binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt out = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // out * (n - k + i) is divisible by i after each step
    out = out * (n - k + i) / i;
  }
  return out;
}

BigInt balanced_multinomial(std::uint64_t size, std::uint64_t parts) {
  if (parts == 0 || size % parts != 0) {
    fail(ErrorCode::precondition, "part count must divide the ground size");
  }
  const std::uint64_t part = size / parts;
  BigInt out = 1;
  std::uint64_t rest = size;
  for (std::uint64_t p = 0; p < parts; ++p) {
    out *= binomial(rest, part);
    rest -= part;
  }
  return out;
}

BigInt pow2(std::uint64_t exponent) {
  BigInt out = 1;
  out <<= exponent;
  return out;
}

}  // namespace inflation
