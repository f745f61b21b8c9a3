#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hullkit/rational.hpp"

namespace hullkit {

/// Univariate polynomial over Q, coefficients stored lowest degree first.
/// Always normalized: no trailing zero coefficients (the zero polynomial is empty).
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs);
  Poly(std::initializer_list<Rational> coeffs) : Poly(std::vector<Rational>(coeffs)) {}

  static Poly constant(const Rational& c) { return Poly({c}); }
  static Poly monomial(const Rational& c, std::size_t degree);
  static Poly x() { return Poly({0, 1}); }

  bool is_zero() const { return c_.empty(); }
  /// Degree; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
  Rational lead() const { return c_.empty() ? Rational(0) : c_.back(); }

  Rational operator()(const Rational& t) const;
  Poly derivative() const;
  Poly monic() const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);

  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  void normalize();
  std::vector<Rational> c_;
};

Poly operator+(Poly a, const Poly& b);
Poly operator-(Poly a, const Poly& b);
Poly operator-(const Poly& a);
Poly operator*(const Poly& a, const Poly& b);
Poly operator*(const Rational& s, const Poly& p);

/// Euclidean division: a = q*b + r with deg r < deg b. b must be nonzero.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly operator%(const Poly& a, const Poly& b);

/// Monic gcd (zero if both inputs are zero).
Poly gcd(const Poly& a, const Poly& b);

/// Bezout data: g = s*a + t*b with g the monic gcd.
struct ExtendedGcd {
  Poly g, s, t;
};
ExtendedGcd extended_gcd(const Poly& a, const Poly& b);

/// p / gcd(p, p'), made monic. Throws PreconditionError on the zero polynomial.
Poly squarefree_part(const Poly& p);

/// A real interval with optional (infinite) ends; finite ends are closed.
struct Interval {
  std::optional<Rational> lo;
  std::optional<Rational> hi;

  static Interval all() { return {}; }
  static Interval at_most(Rational b) { return {std::nullopt, std::move(b)}; }
  static Interval at_least(Rational a) { return {std::move(a), std::nullopt}; }
  static Interval closed(Rational a, Rational b) { return {std::move(a), std::move(b)}; }
};

/// The Sturm chain p, p', -rem(p, p'), ...
std::vector<Poly> sturm_chain(const Poly& p);

/// Exact number of distinct real roots of a squarefree p inside the interval.
/// Throws PreconditionError if p is zero or not squarefree.
std::size_t sturm_real_roots_in(const Poly& p, const Interval& interval);

std::string to_string(const Poly& p, const std::string& var = "t");

}  // namespace hullkit
