#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "s1m/invariants.hpp"
#include "s1m/polynomial.hpp"
#include "s1m/rational.hpp"
#include "s1m/series.hpp"

namespace s1m {

// ---------------------------------------------------------------------------
// Poincare series and Betti numbers
// ---------------------------------------------------------------------------

/// Rational Poincare polynomial of the orbit surface. With B boundary
/// circles (f + s + t + graph cycles): 1 + (2g + B - 1)x orientable,
/// 1 + (g + B - 1)x nonorientable; closed: 1 + 2gx + x^2 or 1 + gx.
PoincareSeries orbit_space_poincare(const OrbitInvariants& inv);

/// Fixed-point set: circles away from the boundary and intervals ending on it.
struct FixedSetShape {
  std::int64_t circles = 0;
  std::int64_t intervals = 0;

  friend bool operator==(const FixedSetShape&, const FixedSetShape&) = default;
};

FixedSetShape fixed_set_shape(const OrbitInvariants& inv);

/// Equivariant Poincare series: orbit-space series plus
/// x^2/(1 - x^2) * (circles (1 + x) + intervals).
PoincareSeries equivariant_poincare(const OrbitInvariants& inv);

/// Equivariant Betti number in degree k.
std::int64_t betti(const OrbitInvariants& inv, std::size_t k);

/// Equivariant Betti numbers in degrees 0..upto.
std::vector<std::int64_t> betti_numbers(const OrbitInvariants& inv, std::size_t upto);

// ---------------------------------------------------------------------------
// Ring and module structure for closed manifolds with fixed circles
// ---------------------------------------------------------------------------

/// Shape data a cohomology class depends on: a closed datum with f > 0.
struct CohomContext {
  Orientability eps = Orientability::orientable;
  std::int64_t g = 0;
  std::int64_t f = 0;
  std::int64_t s = 0;

  /// Throws std::invalid_argument unless inv is valid, closed and has f > 0.
  static CohomContext from(const OrbitInvariants& inv);

  friend bool operator==(const CohomContext&, const CohomContext&) = default;
};

/// Raw coefficients of a class
///   (D d0 + sum A_k a_k + sum B_k b_k + sum C_i th_i + sum Cse_j th_{f+j},
///    sum_i p_i(u) d_i + q_i(u) th_i)
/// in H*(M/S^1) + sum_i Q[u] (x) H*(F_i). B is empty when eps = n.
struct CohomParts {
  Rational D;
  std::vector<Rational> A;
  std::vector<Rational> B;
  std::vector<Rational> C;
  std::vector<Rational> C_se;
  std::vector<Polynomial> p;
  std::vector<Polynomial> q;

  friend bool operator==(const CohomParts&, const CohomParts&) = default;
};

/// Thrown when parts do not describe an equivariant class. relation() is
/// 1 (surface H^1 coefficients sum to zero), 2 (p_i(0) = D), 3 (q_i(0) = C_i),
/// or 0 for a shape mismatch with the context.
class RelationError : public std::invalid_argument {
 public:
  RelationError(int relation, const std::string& what) : std::invalid_argument(what), relation_(relation) {}
  int relation() const { return relation_; }

 private:
  int relation_;
};

/// Equivariant cohomology class of a closed manifold with fixed circles,
/// as a compatible pair of an orbit-surface class and fixed-circle classes.
class CohomElement {
 public:
  /// Validates the shape against ctx and the three compatibility relations.
  static CohomElement from_parts(const CohomContext& ctx, CohomParts parts);

  static CohomElement zero(const CohomContext& ctx);
  static CohomElement one(const CohomContext& ctx);

  const CohomContext& context() const { return ctx_; }
  const CohomParts& parts() const { return parts_; }
  bool is_zero() const;

  CohomElement operator-() const;
  CohomElement& operator+=(const CohomElement& other);
  CohomElement& operator-=(const CohomElement& other);
  CohomElement& operator*=(const Rational& c);

  friend CohomElement operator+(CohomElement a, const CohomElement& b) { return a += b; }
  friend CohomElement operator-(CohomElement a, const CohomElement& b) { return a -= b; }
  friend CohomElement operator*(CohomElement a, const Rational& c) { return a *= c; }
  friend CohomElement operator*(const Rational& c, CohomElement a) { return a *= c; }
  friend bool operator==(const CohomElement&, const CohomElement&) = default;

  std::string to_string() const;

 private:
  CohomElement(CohomContext ctx, CohomParts parts) : ctx_(ctx), parts_(std::move(parts)) {}
  void check_same_context(const CohomElement& other) const;

  CohomContext ctx_;
  CohomParts parts_;
};

CohomElement cohom_zero(const CohomContext& ctx);
CohomElement cohom_from_parts(const CohomContext& ctx, CohomParts parts);

/// Image of the generator u of H*(BS^1): sum_i u d_i.
CohomElement pi_star_u(const CohomContext& ctx);

/// Homogeneous components keyed by degree; zero components are omitted.
/// Degree 0 carries D, degree 1 the surface H^1 part, degree 2k the u^k
/// coefficients of the p_i and degree 2k+1 those of the q_i (k >= 1).
std::map<int, CohomElement> degree_decompose(const CohomElement& x);

/// Cup product. Throws std::invalid_argument on a context mismatch.
CohomElement cup(const CohomElement& a, const CohomElement& b);

/// u^power acting through pi_star_u.
CohomElement module_action(std::size_t power, const CohomElement& x);

// ---------------------------------------------------------------------------
// Formality and the orbifold Euler number
// ---------------------------------------------------------------------------

struct ModuleGenerator {
  int degree = 0;
  std::string expression;
  CohomElement element;
};

struct FormalityResult {
  bool formal = false;
  std::string reason;
  std::vector<ModuleGenerator> generators;

  /// Generator count in each degree 0..3.
  std::vector<std::int64_t> degree_counts() const;
};

/// Equivariant formality of a closed datum, with a free Q[u]-basis when
/// formal. Throws std::invalid_argument for manifolds with boundary.
FormalityResult is_formal(const OrbitInvariants& inv);

/// sum_g x^deg(g) / (1 - x^2), the Poincare series of the free module on
/// the generators.
PoincareSeries free_module_series(const FormalityResult& result);

struct EulerNumber {
  enum class Kind : std::uint8_t { rational, zero, undefined };

  Kind kind = Kind::undefined;
  Rational value;
  std::string reason;
};

/// Image of u in H^2 of the orbit surface for a closed fixed-point-free
/// datum: zero when eps = n or s > 0, otherwise b + sum l_i/m_i with
/// l_i n_i = 1 mod m_i. Data with fixed circles give Kind::undefined.
/// Throws std::invalid_argument for manifolds with boundary.
EulerNumber euler_number(const OrbitInvariants& inv);

}  // namespace s1m
