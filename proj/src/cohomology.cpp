#include "s1m/cohomology.hpp"

#include <algorithm>
#include <sstream>

namespace s1m {

namespace {

void require_valid(const OrbitInvariants& inv) {
  ValidationReport report = validate(inv);
  if (!report.ok()) throw InvalidDatum(std::move(report));
}

const Polynomial kOneMinusXSquared{1, 0, -1};

}  // namespace

// ---------------------------------------------------------------------------
// Series
// ---------------------------------------------------------------------------

PoincareSeries orbit_space_poincare(const OrbitInvariants& inv) {
  const std::int64_t boundary = inv.f + inv.s + inv.t + static_cast<std::int64_t>(inv.graph.cycles.size());
  const bool orientable = inv.eps == Orientability::orientable;
  if (boundary == 0) {
    if (orientable) return PoincareSeries::polynomial({1, 2 * inv.g, 1});
    return PoincareSeries::polynomial({1, inv.g});
  }
  const std::int64_t b1 = (orientable ? 2 * inv.g : inv.g) + boundary - 1;
  return PoincareSeries::polynomial({1, b1});
}

FixedSetShape fixed_set_shape(const OrbitInvariants& inv) {
  return {inv.f, static_cast<std::int64_t>(count_label(inv.graph, EdgeLabel::F))};
}

PoincareSeries equivariant_poincare(const OrbitInvariants& inv) {
  const FixedSetShape shape = fixed_set_shape(inv);
  // H*(F) = circles (1 + x) + intervals, shifted by Q[u]_+ = x^2/(1 - x^2).
  const Polynomial fixed{Rational(shape.circles + shape.intervals), Rational(shape.circles)};
  const PoincareSeries tail(Polynomial::monomial(1, 2) * fixed, kOneMinusXSquared);
  return orbit_space_poincare(inv) + tail;
}

std::int64_t betti(const OrbitInvariants& inv, std::size_t k) { return equivariant_poincare(inv).expand(k).at(k); }

std::vector<std::int64_t> betti_numbers(const OrbitInvariants& inv, std::size_t upto) {
  return equivariant_poincare(inv).expand(upto);
}

// ---------------------------------------------------------------------------
// Cohomology classes
// ---------------------------------------------------------------------------

CohomContext CohomContext::from(const OrbitInvariants& inv) {
  require_valid(inv);
  if (!inv.closed()) throw std::invalid_argument("cohomology ring is implemented for closed manifolds only");
  if (inv.f <= 0) throw std::invalid_argument("cohomology ring is implemented for manifolds with fixed circles");
  return {inv.eps, inv.g, inv.f, inv.s};
}

CohomElement CohomElement::from_parts(const CohomContext& ctx, CohomParts parts) {
  const auto g = static_cast<std::size_t>(ctx.g);
  const auto f = static_cast<std::size_t>(ctx.f);
  const auto s = static_cast<std::size_t>(ctx.s);
  const std::size_t b_len = ctx.eps == Orientability::orientable ? g : 0;
  if (parts.A.size() != g || parts.B.size() != b_len || parts.C.size() != f || parts.C_se.size() != s ||
      parts.p.size() != f || parts.q.size() != f) {
    throw RelationError(0, "cohomology parts do not match the context shape");
  }
  Rational sum;
  for (const auto* list : {&parts.A, &parts.B, &parts.C, &parts.C_se}) {
    for (const Rational& c : *list) sum += c;
  }
  if (!sum.is_zero()) throw RelationError(1, "relation (1) fails: surface H^1 coefficients sum to " + sum.to_string());
  for (std::size_t i = 0; i < f; ++i) {
    if (parts.p[i].constant_term() != parts.D) {
      throw RelationError(2, "relation (2) fails: p_" + std::to_string(i + 1) + "(0) != D");
    }
    if (parts.q[i].constant_term() != parts.C[i]) {
      throw RelationError(3, "relation (3) fails: q_" + std::to_string(i + 1) + "(0) != C_" + std::to_string(i + 1));
    }
  }
  return CohomElement(ctx, std::move(parts));
}

CohomElement CohomElement::zero(const CohomContext& ctx) {
  CohomParts parts;
  parts.A.assign(static_cast<std::size_t>(ctx.g), 0);
  parts.B.assign(ctx.eps == Orientability::orientable ? static_cast<std::size_t>(ctx.g) : 0, 0);
  parts.C.assign(static_cast<std::size_t>(ctx.f), 0);
  parts.C_se.assign(static_cast<std::size_t>(ctx.s), 0);
  parts.p.assign(static_cast<std::size_t>(ctx.f), Polynomial{});
  parts.q.assign(static_cast<std::size_t>(ctx.f), Polynomial{});
  return CohomElement(ctx, std::move(parts));
}

CohomElement CohomElement::one(const CohomContext& ctx) {
  CohomElement out = zero(ctx);
  out.parts_.D = 1;
  for (auto& p : out.parts_.p) p = Polynomial{1};
  return out;
}

bool CohomElement::is_zero() const { return *this == zero(ctx_); }

void CohomElement::check_same_context(const CohomElement& other) const {
  if (!(ctx_ == other.ctx_)) throw std::invalid_argument("cohomology classes belong to different manifolds");
}

CohomElement CohomElement::operator-() const {
  CohomElement out = *this;
  out *= Rational(-1);
  return out;
}

CohomElement& CohomElement::operator+=(const CohomElement& other) {
  check_same_context(other);
  auto add = [](std::vector<Rational>& lhs, const std::vector<Rational>& rhs) {
    for (std::size_t i = 0; i < lhs.size(); ++i) lhs[i] += rhs[i];
  };
  parts_.D += other.parts_.D;
  add(parts_.A, other.parts_.A);
  add(parts_.B, other.parts_.B);
  add(parts_.C, other.parts_.C);
  add(parts_.C_se, other.parts_.C_se);
  for (std::size_t i = 0; i < parts_.p.size(); ++i) {
    parts_.p[i] += other.parts_.p[i];
    parts_.q[i] += other.parts_.q[i];
  }
  return *this;
}

CohomElement& CohomElement::operator-=(const CohomElement& other) { return *this += -other; }

CohomElement& CohomElement::operator*=(const Rational& c) {
  parts_.D *= c;
  for (auto* list : {&parts_.A, &parts_.B, &parts_.C, &parts_.C_se}) {
    for (Rational& x : *list) x *= c;
  }
  for (std::size_t i = 0; i < parts_.p.size(); ++i) {
    parts_.p[i] *= c;
    parts_.q[i] *= c;
  }
  return *this;
}

std::string CohomElement::to_string() const {
  std::ostringstream os;
  auto list = [&os](const char* name, const std::vector<Rational>& xs) {
    if (xs.empty()) return;
    os << "; " << name << "=[";
    for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? "," : "") << xs[i];
    os << "]";
  };
  os << "D=" << parts_.D;
  list("A", parts_.A);
  list("B", parts_.B);
  list("C", parts_.C);
  list("Cse", parts_.C_se);
  for (std::size_t i = 0; i < parts_.p.size(); ++i) {
    os << "; p" << i + 1 << "=" << parts_.p[i].to_string("u") << "; q" << i + 1 << "=" << parts_.q[i].to_string("u");
  }
  return os.str();
}

CohomElement cohom_zero(const CohomContext& ctx) { return CohomElement::zero(ctx); }

CohomElement cohom_from_parts(const CohomContext& ctx, CohomParts parts) {
  return CohomElement::from_parts(ctx, std::move(parts));
}

CohomElement pi_star_u(const CohomContext& ctx) {
  CohomParts parts = CohomElement::zero(ctx).parts();
  for (auto& p : parts.p) p = Polynomial::monomial(1, 1);
  return CohomElement::from_parts(ctx, std::move(parts));
}

std::map<int, CohomElement> degree_decompose(const CohomElement& x) {
  const CohomContext& ctx = x.context();
  const CohomParts& parts = x.parts();
  std::map<int, CohomElement> out;

  if (!parts.D.is_zero()) out.emplace(0, CohomElement::one(ctx) * parts.D);

  CohomParts deg1 = CohomElement::zero(ctx).parts();
  deg1.A = parts.A;
  deg1.B = parts.B;
  deg1.C = parts.C;
  deg1.C_se = parts.C_se;
  for (std::size_t i = 0; i < deg1.q.size(); ++i) deg1.q[i] = Polynomial::constant(parts.C[i]);
  CohomElement h1 = CohomElement::from_parts(ctx, std::move(deg1));
  if (!h1.is_zero()) out.emplace(1, std::move(h1));

  int max_power = 0;
  for (std::size_t i = 0; i < parts.p.size(); ++i) {
    max_power = std::max({max_power, parts.p[i].degree(), parts.q[i].degree()});
  }
  for (int k = 1; k <= max_power; ++k) {
    const auto power = static_cast<std::size_t>(k);
    CohomParts even = CohomElement::zero(ctx).parts();
    CohomParts odd = CohomElement::zero(ctx).parts();
    for (std::size_t i = 0; i < parts.p.size(); ++i) {
      even.p[i] = Polynomial::monomial(parts.p[i].coeff(power), power);
      odd.q[i] = Polynomial::monomial(parts.q[i].coeff(power), power);
    }
    CohomElement e = CohomElement::from_parts(ctx, std::move(even));
    CohomElement o = CohomElement::from_parts(ctx, std::move(odd));
    if (!e.is_zero()) out.emplace(2 * k, std::move(e));
    if (!o.is_zero()) out.emplace(2 * k + 1, std::move(o));
  }
  return out;
}

namespace {

// Product of two homogeneous classes of the given degrees.
CohomElement cup_homogeneous(int da, const CohomElement& a, int db, const CohomElement& b) {
  const CohomContext& ctx = a.context();
  if (da == 0) return b * a.parts().D;
  if (db == 0) return a * b.parts().D;
  if (da == 1 && db == 1) return CohomElement::zero(ctx);

  CohomParts out = CohomElement::zero(ctx).parts();
  const std::size_t f = out.p.size();
  if (da == 1 || db == 1) {
    // Only the restriction to the fixed circles survives: C_i th_i . p_i d_i.
    const CohomParts& low = (da == 1 ? a : b).parts();
    const CohomParts& high = (da == 1 ? b : a).parts();
    for (std::size_t i = 0; i < f; ++i) out.q[i] = high.p[i] * low.C[i];
  } else {
    const CohomParts& x = a.parts();
    const CohomParts& y = b.parts();
    for (std::size_t i = 0; i < f; ++i) {
      out.p[i] = x.p[i] * y.p[i];
      out.q[i] = x.p[i] * y.q[i] + x.q[i] * y.p[i];
    }
  }
  return CohomElement::from_parts(ctx, std::move(out));
}

}  // namespace

CohomElement cup(const CohomElement& a, const CohomElement& b) {
  if (!(a.context() == b.context())) throw std::invalid_argument("cup: classes belong to different manifolds");
  CohomElement result = CohomElement::zero(a.context());
  const auto lhs = degree_decompose(a);
  const auto rhs = degree_decompose(b);
  for (const auto& [da, xa] : lhs) {
    for (const auto& [db, xb] : rhs) result += cup_homogeneous(da, xa, db, xb);
  }
  return result;
}

CohomElement module_action(std::size_t power, const CohomElement& x) {
  const CohomElement u = pi_star_u(x.context());
  CohomElement out = x;
  for (std::size_t i = 0; i < power; ++i) out = cup(u, out);
  return out;
}

// ---------------------------------------------------------------------------
// Formality
// ---------------------------------------------------------------------------

std::vector<std::int64_t> FormalityResult::degree_counts() const {
  std::vector<std::int64_t> counts(4, 0);
  for (const auto& g : generators) {
    if (static_cast<std::size_t>(g.degree) >= counts.size()) counts.resize(static_cast<std::size_t>(g.degree) + 1);
    ++counts[static_cast<std::size_t>(g.degree)];
  }
  return counts;
}

namespace {

// Degree-1 class with theta coefficients `theta` on the fixed circles. The
// surface relation is balanced on one remaining H^1 slot when the family
// has one (the SE circle, or the single crosscap class).
CohomElement theta_class(const CohomContext& ctx, const std::vector<Rational>& theta) {
  CohomParts parts = CohomElement::zero(ctx).parts();
  Rational sum;
  for (std::size_t i = 0; i < theta.size(); ++i) {
    parts.C[i] = theta[i];
    parts.q[i] = Polynomial::constant(theta[i]);
    sum += theta[i];
  }
  if (!sum.is_zero()) {
    if (!parts.C_se.empty()) parts.C_se[0] = -sum;
    else if (!parts.A.empty()) parts.A[0] = -sum;
  }
  return CohomElement::from_parts(ctx, std::move(parts));
}

CohomElement u_delta_difference(const CohomContext& ctx, std::size_t i) {
  CohomParts parts = CohomElement::zero(ctx).parts();
  parts.p[0] = Polynomial::monomial(1, 1);
  parts.p[i] = Polynomial::monomial(-1, 1);
  return CohomElement::from_parts(ctx, std::move(parts));
}

}  // namespace

FormalityResult is_formal(const OrbitInvariants& inv) {
  require_valid(inv);
  if (!inv.closed()) throw std::invalid_argument("formality implemented for closed manifolds only");

  FormalityResult result;
  if (inv.f == 0) {
    result.reason = "no fixed circles (f = 0): the cohomology is finite dimensional";
    return result;
  }
  const bool orientable = inv.eps == Orientability::orientable;
  const bool genus_zero_no_se = orientable && inv.g == 0 && inv.s == 0;
  const bool genus_zero_one_se = orientable && inv.g == 0 && inv.s == 1;
  const bool crosscap_no_se = !orientable && inv.g == 1 && inv.s == 0;
  if (!(genus_zero_no_se || genus_zero_one_se || crosscap_no_se)) {
    result.reason = orientable ? "b^1 > b^3 since 2g + s > 1" : "b^1 > b^3 since g + s > 1";
    return result;
  }

  result.formal = true;
  const CohomContext ctx = CohomContext::from(inv);
  const auto f = static_cast<std::size_t>(inv.f);
  auto idx = [](std::size_t i) { return std::to_string(i + 1); };

  result.generators.push_back({0, "sum_i delta_i", CohomElement::one(ctx)});
  if (genus_zero_no_se) {
    result.reason = "eps = o, g = 0, s = 0";
    for (std::size_t i = 1; i < f; ++i) {
      std::vector<Rational> theta(f, 0);
      theta[0] = 1;
      theta[i] = -1;
      result.generators.push_back({1, "theta_1 - theta_" + idx(i), theta_class(ctx, theta)});
    }
  } else {
    result.reason = genus_zero_one_se ? "eps = o, g = 0, s = 1" : "eps = n, g = 1, s = 0";
    for (std::size_t i = 0; i < f; ++i) {
      std::vector<Rational> theta(f, 0);
      theta[i] = 1;
      result.generators.push_back({1, "theta_" + idx(i), theta_class(ctx, theta)});
    }
  }
  for (std::size_t i = 1; i < f; ++i) {
    result.generators.push_back({2, "u(delta_1 - delta_" + idx(i) + ")", u_delta_difference(ctx, i)});
  }
  if (genus_zero_no_se) {
    CohomParts parts = CohomElement::zero(ctx).parts();
    for (auto& q : parts.q) q = Polynomial::monomial(1, 1);
    result.generators.push_back({3, "u sum_i theta_i", CohomElement::from_parts(ctx, std::move(parts))});
  }
  return result;
}

PoincareSeries free_module_series(const FormalityResult& result) {
  std::vector<Rational> coeffs;
  for (const auto& g : result.generators) {
    const auto d = static_cast<std::size_t>(g.degree);
    if (coeffs.size() <= d) coeffs.resize(d + 1);
    coeffs[d] += 1;
  }
  return PoincareSeries(Polynomial(std::move(coeffs)), kOneMinusXSquared);
}

// ---------------------------------------------------------------------------
// Orbifold Euler number
// ---------------------------------------------------------------------------

EulerNumber euler_number(const OrbitInvariants& inv) {
  require_valid(inv);
  if (!inv.closed()) throw std::invalid_argument("euler_number: defined here for closed manifolds only");
  EulerNumber out;
  if (inv.f > 0) {
    out.kind = EulerNumber::Kind::undefined;
    out.reason = "fixed points present: pi*(u) = sum_i u delta_i lives in degree >= 2 of the fixed part";
    return out;
  }
  if (inv.eps == Orientability::nonorientable || inv.s > 0) {
    out.kind = EulerNumber::Kind::zero;
    out.reason = "H^2 of the orbit surface vanishes (nonorientable or with SE boundary)";
    return out;
  }
  out.kind = EulerNumber::Kind::rational;
  out.value = Rational(inv.b);
  for (const SeifertPair& p : inv.pairs) out.value += Rational(modular_inverse(p.n, p.m), p.m);
  out.reason = "oriented Seifert manifold: b + sum l_i/m_i";
  return out;
}

}  // namespace s1m
