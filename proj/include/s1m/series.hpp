#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "s1m/polynomial.hpp"

namespace s1m {

/// Generating function sum_k b_k x^k stored as a reduced rational function
/// numerator(x) / denominator(x) with integer coefficients.
///
/// Reduced means: no common polynomial factor, the coefficients of both
/// parts share no integer factor, and the denominator has a positive
/// constant term. Equal series therefore have equal representations.
class PoincareSeries {
 public:
  /// The zero series.
  PoincareSeries();

  /// Throws std::domain_error if the reduced denominator vanishes at x = 0.
  PoincareSeries(const Polynomial& numerator, const Polynomial& denominator);

  static PoincareSeries polynomial(const std::vector<std::int64_t>& coeffs);

  const std::vector<std::int64_t>& numerator() const { return numerator_; }
  const std::vector<std::int64_t>& denominator() const { return denominator_; }

  Polynomial numerator_poly() const;
  Polynomial denominator_poly() const;

  /// Coefficients b_0..b_upto of the power-series expansion. Throws
  /// std::domain_error if a coefficient is not an integer.
  std::vector<std::int64_t> expand(std::size_t upto) const;

  /// "(1 + x)/(1 - x)", or just the numerator when the denominator is 1.
  std::string to_string() const;

  friend PoincareSeries operator+(const PoincareSeries& a, const PoincareSeries& b);
  friend PoincareSeries operator*(const PoincareSeries& a, const PoincareSeries& b);
  friend bool operator==(const PoincareSeries&, const PoincareSeries&) = default;

 private:
  std::vector<std::int64_t> numerator_;
  std::vector<std::int64_t> denominator_;
};

/// Renders "b0 + b1 x + ... + ..." up to the given degree, skipping zeros.
std::string expansion_string(const PoincareSeries& series, std::size_t upto);

}  // namespace s1m
