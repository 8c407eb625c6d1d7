#include "s1m/rational.hpp"

#include <numeric>
#include <ostream>

namespace s1m {

namespace checked {

std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("rational arithmetic overflow");
  return out;
}

std::int64_t sub(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_sub_overflow(a, b, &out)) throw std::overflow_error("rational arithmetic overflow");
  return out;
}

std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("rational arithmetic overflow");
  return out;
}

}  // namespace checked

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  if (den < 0) {
    num = checked::sub(0, num);
    den = checked::sub(0, den);
  }
  const std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

Rational Rational::operator-() const { return Rational(checked::sub(0, num_), den_); }

Rational& Rational::operator+=(const Rational& other) {
  // Cross-multiply over the lcm of the denominators to keep intermediates small.
  const std::int64_t g = std::gcd(den_, other.den_);
  const std::int64_t lhs = checked::mul(num_, other.den_ / g);
  const std::int64_t rhs = checked::mul(other.num_, den_ / g);
  *this = Rational(checked::add(lhs, rhs), checked::mul(den_ / g, other.den_));
  return *this;
}

Rational& Rational::operator-=(const Rational& other) { return *this += -other; }

Rational& Rational::operator*=(const Rational& other) {
  const std::int64_t g1 = std::gcd(num_, other.den_);
  const std::int64_t g2 = std::gcd(other.num_, den_);
  const std::int64_t n = checked::mul(num_ / g1, other.num_ / g2);
  const std::int64_t d = checked::mul(den_ / g2, other.den_ / g1);
  *this = Rational(n, d);
  return *this;
}

Rational& Rational::operator/=(const Rational& other) {
  if (other.is_zero()) throw std::domain_error("division by zero rational");
  return *this *= Rational(other.den_, other.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  const __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
  const __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

std::int64_t modular_inverse(std::int64_t n, std::int64_t m) {
  if (m < 2) throw std::invalid_argument("modular_inverse: modulus must be at least 2");
  std::int64_t old_r = ((n % m) + m) % m, r = m;
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    std::int64_t tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
  }
  if (old_r != 1) throw std::invalid_argument("modular_inverse: arguments are not coprime");
  const std::int64_t inv = ((old_s % m) + m) % m;
  return inv;
}

}  // namespace s1m
