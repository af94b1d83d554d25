#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace checkerboard {

using BigInt = boost::multiprecision::cpp_int;

// Exact nonnegative count of lattice paths.
class PathCount {
 public:
  PathCount() = default;
  PathCount(std::uint64_t v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  // Throws DomainError if v < 0.
  explicit PathCount(BigInt v);

  const BigInt& value() const { return value_; }
  bool is_zero() const { return value_.is_zero(); }
  std::string str() const { return value_.str(); }

  // Natural logarithm; -infinity for zero. Accurate to double precision for
  // counts of any size.
  double log() const;
  double to_double() const;

  PathCount& operator+=(const PathCount& o) {
    value_ += o.value_;
    return *this;
  }
  friend PathCount operator+(PathCount a, const PathCount& b) { return a += b; }
  friend PathCount operator*(const PathCount& a, const PathCount& b) {
    return PathCount(BigInt(a.value_ * b.value_));
  }
  friend bool operator==(const PathCount& a, const PathCount& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const PathCount& a, const PathCount& b) {
    return a.value_ == b.value_ ? std::strong_ordering::equal
           : a.value_ < b.value_ ? std::strong_ordering::less
                                 : std::strong_ordering::greater;
  }

 private:
  BigInt value_{0};
};

// C(n, k) with C(n, k) = 0 whenever k < 0, k > n or n < 0.
PathCount binomial(std::int64_t n, std::int64_t k);

// Same convention, as a signed big integer for use inside difference formulas.
BigInt binomial_int(std::int64_t n, std::int64_t k);

// log C(n, k) through lgamma; -infinity where the binomial vanishes.
// n and k may be non-integral (generalized binomial) when n >= k >= 0.
double log_binomial(double n, double k);

}  // namespace checkerboard
