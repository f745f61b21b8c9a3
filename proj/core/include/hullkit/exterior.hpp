#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "hullkit/rational.hpp"

namespace hullkit {

/// A sorted index subset of {0, ..., dim-1}, bit i set when index i is present.
using Mask = std::uint32_t;

std::size_t binomial(std::size_t n, std::size_t k);

/// Lexicographically ordered k-subsets of {0..n-1}; the coordinate basis of Λ^k.
class ExteriorBasis {
 public:
  ExteriorBasis() = default;
  ExteriorBasis(std::size_t n, std::size_t k);

  std::size_t size() const { return masks_.size(); }
  std::size_t degree() const { return k_; }
  Mask mask(std::size_t i) const { return masks_[i]; }
  std::size_t index(Mask m) const;

 private:
  std::size_t n_ = 0;
  std::size_t k_ = 0;
  std::vector<Mask> masks_;
  std::unordered_map<Mask, std::size_t> index_;
};

/// Homogeneous element of Λ^degree of a dim-dimensional dual space.
/// Zero coefficients are never stored.
class ExteriorForm {
 public:
  ExteriorForm() = default;
  ExteriorForm(std::size_t dim, std::size_t degree) : dim_(dim), degree_(degree) {}

  static ExteriorForm one(std::size_t dim);
  /// xi^{i1} ∧ ... ∧ xi^{ik} for the given (not necessarily sorted) indices.
  static ExteriorForm basis(std::size_t dim, std::vector<std::size_t> indices);
  static ExteriorForm from_coords(std::size_t dim, std::size_t degree, const Vec& coords);

  std::size_t dim() const { return dim_; }
  std::size_t degree() const { return degree_; }
  const std::map<Mask, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Rational coeff(Mask m) const;
  void add(Mask m, const Rational& c);
  /// Coordinates in the lexicographic basis of Λ^degree.
  Vec coords() const;

  ExteriorForm& operator+=(const ExteriorForm& o);
  ExteriorForm& operator-=(const ExteriorForm& o);

  friend bool operator==(const ExteriorForm&, const ExteriorForm&) = default;

 private:
  std::size_t dim_ = 0;
  std::size_t degree_ = 0;
  std::map<Mask, Rational> terms_;
};

ExteriorForm operator+(ExteriorForm a, const ExteriorForm& b);
ExteriorForm operator-(ExteriorForm a, const ExteriorForm& b);
ExteriorForm operator*(const Rational& s, const ExteriorForm& f);

/// Sign of moving the sorted block b past the sorted block a: (-1)^{#{(i,j): i in a, j in b, i > j}}.
int shuffle_sign(Mask a, Mask b);

ExteriorForm wedge(const ExteriorForm& a, const ExteriorForm& b);
ExteriorForm wedge_power(const ExteriorForm& a, std::size_t k);

/// "2 x1^y - 1/2 x2^x3"; "0" for the zero form, "1" for the unit.
std::string to_string(const ExteriorForm& f, const std::vector<std::string>& names);
std::string mask_name(Mask m, const std::vector<std::string>& names);

}  // namespace hullkit
