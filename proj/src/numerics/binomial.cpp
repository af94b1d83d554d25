#include "checkerboard/numerics/binomial.hpp"

#include <cmath>
#include <limits>

#include "checkerboard/error.hpp"

namespace checkerboard {

PathCount::PathCount(BigInt v) : value_(std::move(v)) {
  if (value_ < 0) {
    throw DomainError("path count cannot be negative: " + value_.str());
  }
}

double PathCount::log() const {
  if (value_.is_zero()) return -std::numeric_limits<double>::infinity();
  const unsigned msb = boost::multiprecision::msb(value_);
  if (msb < 63) return std::log(static_cast<double>(static_cast<std::uint64_t>(value_)));
  // Keep the top 63 bits; the discarded tail changes the log by < 2^-62.
  const unsigned shift = msb - 62;
  const BigInt top = value_ >> shift;
  return std::log(static_cast<double>(static_cast<std::uint64_t>(top))) +
         static_cast<double>(shift) * std::log(2.0);
}

double PathCount::to_double() const { return value_.convert_to<double>(); }

BigInt binomial_int(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt result = 1;
  // result stays integral: after step i it equals C(n - k + i, i).
  for (std::int64_t i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

PathCount binomial(std::int64_t n, std::int64_t k) { return PathCount(binomial_int(n, k)); }

double log_binomial(double n, double k) {
  if (n < 0 || k < 0 || k > n) return -std::numeric_limits<double>::infinity();
  return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

}  // namespace checkerboard
