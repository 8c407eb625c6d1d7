#include "s1m/series.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace s1m {

namespace {

std::vector<std::int64_t> to_integers(const Polynomial& p) {
  std::vector<std::int64_t> out;
  out.reserve(p.coeffs().size());
  for (const Rational& c : p.coeffs()) {
    if (!c.is_integer()) throw std::logic_error("series coefficient is not integral after scaling");
    out.push_back(c.num());
  }
  return out;
}

Polynomial from_integers(const std::vector<std::int64_t>& coeffs) {
  std::vector<Rational> out(coeffs.begin(), coeffs.end());
  return Polynomial(std::move(out));
}

}  // namespace

PoincareSeries::PoincareSeries() : denominator_{1} {}

PoincareSeries::PoincareSeries(const Polynomial& numerator, const Polynomial& denominator) {
  if (denominator.is_zero()) throw std::domain_error("Poincare series with zero denominator");
  const Polynomial common = gcd(numerator, denominator);
  Polynomial num = numerator.divmod(common).first;
  Polynomial den = denominator.divmod(common).first;
  if (den.constant_term().is_zero()) {
    throw std::domain_error("Poincare series denominator vanishes at x = 0");
  }

  // Clear denominators, then strip the common integer content.
  std::int64_t scale = 1;
  for (const Polynomial* p : {&num, &den}) {
    for (const Rational& c : p->coeffs()) scale = std::lcm(scale, c.den());
  }
  num *= Rational(scale);
  den *= Rational(scale);
  std::int64_t content = 0;
  for (const Polynomial* p : {&num, &den}) {
    for (const Rational& c : p->coeffs()) content = std::gcd(content, c.num());
  }
  Rational factor(1, content);
  if (den.constant_term() < Rational(0)) factor = -factor;
  num *= factor;
  den *= factor;
  numerator_ = to_integers(num);
  denominator_ = to_integers(den);
}

PoincareSeries PoincareSeries::polynomial(const std::vector<std::int64_t>& coeffs) {
  return PoincareSeries(from_integers(coeffs), Polynomial{1});
}

Polynomial PoincareSeries::numerator_poly() const { return from_integers(numerator_); }
Polynomial PoincareSeries::denominator_poly() const { return from_integers(denominator_); }

std::vector<std::int64_t> PoincareSeries::expand(std::size_t upto) const {
  std::vector<Rational> coeffs(upto + 1);
  const Rational lead(denominator_.at(0));
  for (std::size_t k = 0; k <= upto; ++k) {
    Rational acc = k < numerator_.size() ? Rational(numerator_[k]) : Rational(0);
    for (std::size_t j = 1; j <= k && j < denominator_.size(); ++j) {
      acc -= Rational(denominator_[j]) * coeffs[k - j];
    }
    coeffs[k] = acc / lead;
  }
  std::vector<std::int64_t> out;
  out.reserve(coeffs.size());
  for (const Rational& c : coeffs) {
    if (!c.is_integer()) throw std::domain_error("series expansion has a non-integral coefficient");
    out.push_back(c.num());
  }
  return out;
}

std::string PoincareSeries::to_string() const {
  const std::string num = numerator_poly().to_string();
  if (denominator_.size() == 1 && denominator_[0] == 1) return num;
  return "(" + num + ")/(" + denominator_poly().to_string() + ")";
}

PoincareSeries operator+(const PoincareSeries& a, const PoincareSeries& b) {
  const Polynomial num = a.numerator_poly() * b.denominator_poly() + b.numerator_poly() * a.denominator_poly();
  return PoincareSeries(num, a.denominator_poly() * b.denominator_poly());
}

PoincareSeries operator*(const PoincareSeries& a, const PoincareSeries& b) {
  return PoincareSeries(a.numerator_poly() * b.numerator_poly(), a.denominator_poly() * b.denominator_poly());
}

std::string expansion_string(const PoincareSeries& series, std::size_t upto) {
  const std::vector<std::int64_t> coeffs = series.expand(upto);
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    const std::int64_t c = coeffs[k];
    if (c == 0) continue;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    const std::int64_t mag = c < 0 ? -c : c;
    if (k == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag;
    os << "x";
    if (k > 1) os << "^" << k;
  }
  if (first) os << "0";
  os << " + ...";
  return os.str();
}

}  // namespace s1m
