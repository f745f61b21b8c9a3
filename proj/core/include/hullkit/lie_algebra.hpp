#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "hullkit/linalg.hpp"

namespace hullkit {

inline constexpr std::size_t kSoftDimensionCap = 16;
inline constexpr std::size_t kHardDimensionCap = 24;

/// Finite-dimensional Lie algebra over Q by structure constants:
/// [e_i, e_j] = sum_k c(i, j, k) e_k.
///
/// Construction does not validate the axioms; call validate() for that.
class LieAlgebra {
 public:
  LieAlgebra() = default;
  /// All-zero brackets. Throws PreconditionError above the hard dimension cap.
  explicit LieAlgebra(std::vector<std::string> basis_names);
  static LieAlgebra abelian(std::size_t dim);

  std::size_t dim() const { return names_.size(); }
  const std::vector<std::string>& basis_names() const { return names_; }
  std::optional<std::size_t> index_of(const std::string& name) const;

  const Rational& c(std::size_t i, std::size_t j, std::size_t k) const {
    return c_[(i * dim() + j) * dim() + k];
  }
  Rational& c(std::size_t i, std::size_t j, std::size_t k) { return c_[(i * dim() + j) * dim() + k]; }

  /// Sets [e_i, e_j] = v and [e_j, e_i] = -v.
  void set_bracket(std::size_t i, std::size_t j, const Vec& v);
  Vec bracket_basis(std::size_t i, std::size_t j) const;
  Vec bracket(const Vec& x, const Vec& y) const;

  bool is_abelian() const;

  friend bool operator==(const LieAlgebra&, const LieAlgebra&) = default;

 private:
  std::vector<std::string> names_;
  std::vector<Rational> c_;
};

/// Linear subspace of a Lie algebra's coordinate space. The basis is kept in
/// reduced echelon form, so equal subspaces have identical bases.
class Subspace {
 public:
  Subspace() = default;
  Subspace(std::size_t ambient_dim, const std::vector<Vec>& spanning);
  static Subspace whole(std::size_t dim);
  static Subspace zero(std::size_t dim) { return Subspace(dim, {}); }

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vec>& basis() const { return basis_; }

  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;
  /// Coordinate directions not among the echelon pivots; they span a complement.
  std::vector<std::size_t> complement_directions() const;
  std::vector<std::size_t> pivots() const;

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  std::size_t ambient_ = 0;
  std::vector<Vec> basis_;
};

struct ValidationReport {
  enum class Kind { ok, antisymmetry, jacobi };
  Kind kind = Kind::ok;
  std::array<std::size_t, 3> triple{};
  Vec residual;

  bool ok() const { return kind == Kind::ok; }
  std::string describe(const LieAlgebra& g) const;
};

/// Checks antisymmetry then Jacobi; reports the first violation.
ValidationReport validate(const LieAlgebra& g);

/// Matrix of y -> [x, y]; column j is [x, e_j].
Mat ad_matrix(const LieAlgebra& g, const Vec& x);

Subspace derived_subalgebra(const LieAlgebra& g);
/// [a, b] spanned over basis vectors of both.
Subspace bracket_span(const LieAlgebra& g, const Subspace& a, const Subspace& b);
/// g = g^(0) ⊇ g^(1) ⊇ ... until it stabilizes; the last entry is the limit.
std::vector<Subspace> derived_series(const LieAlgebra& g);
std::vector<Subspace> lower_central_series(const LieAlgebra& g);

bool is_solvable(const LieAlgebra& g);
bool is_nilpotent(const LieAlgebra& g);

bool is_subalgebra(const LieAlgebra& g, const Subspace& s);
bool is_ideal(const LieAlgebra& g, const Subspace& s);
Subspace center(const LieAlgebra& g);

/// {x : ad_x nilpotent} via the trace-form radical of the associative
/// envelope of ad(g). Throws PreconditionError for non-solvable g.
Subspace nilradical(const LieAlgebra& g);

/// Structure constants of a subalgebra in the coordinates of the given basis.
/// Throws PreconditionError if the span is not closed under the bracket.
/// Empty names become b1, b2, ...
LieAlgebra restrict_to(const LieAlgebra& g, const std::vector<Vec>& basis,
                       std::vector<std::string> names);

/// Whether D([x,y]) = [Dx,y] + [x,Dy] on all basis pairs.
bool is_derivation(const LieAlgebra& g, const Mat& d);
/// Whether A[x,y] = [Ax, Ay] on all basis pairs.
bool preserves_bracket(const LieAlgebra& g, const Mat& a);

}  // namespace hullkit
