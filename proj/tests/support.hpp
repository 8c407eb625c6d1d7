#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "s1m/textio.hpp"

namespace testing {

inline s1m::OrbitInvariants datum(std::string_view text) {
  s1m::ParseResult r = s1m::parse(text);
  if (!r.ok()) throw std::runtime_error("test datum does not parse: " + std::string(text));
  return *r.value;
}

inline s1m::Cycle cycle(std::initializer_list<s1m::EdgeLabel> labels) { return s1m::Cycle(labels); }

}  // namespace testing

#include <random>

#include "s1m/cohomology.hpp"

namespace testing {

// Random class satisfying the three compatibility relations, with
// polynomial parts of degree <= max_degree.
inline s1m::CohomElement random_element(const s1m::CohomContext& ctx, std::mt19937& rng, int max_degree = 4) {
  std::uniform_int_distribution<int> coef(-3, 3);
  auto rational = [&] { return s1m::Rational(coef(rng), 1 + rng() % 3); };
  auto tail = [&] {
    std::vector<s1m::Rational> c(static_cast<std::size_t>(max_degree) + 1);
    for (std::size_t k = 1; k < c.size(); ++k) c[k] = rng() % 2 ? rational() : s1m::Rational(0);
    return c;
  };
  s1m::CohomParts parts = s1m::CohomElement::zero(ctx).parts();
  parts.D = rational();
  s1m::Rational sum;
  for (auto* list : {&parts.A, &parts.B, &parts.C, &parts.C_se}) {
    for (auto& c : *list) {
      c = rational();
      sum += c;
    }
  }
  parts.C[0] -= sum;
  for (std::size_t i = 0; i < parts.p.size(); ++i) {
    auto pc = tail();
    pc[0] = parts.D;
    parts.p[i] = s1m::Polynomial(pc);
    auto qc = tail();
    qc[0] = parts.C[i];
    parts.q[i] = s1m::Polynomial(qc);
  }
  return s1m::CohomElement::from_parts(ctx, parts);
}

}  // namespace testing
