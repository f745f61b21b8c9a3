#pragma once

#include <optional>
#include <vector>

#include "hullkit/exterior.hpp"
#include "hullkit/lie_algebra.hpp"

namespace hullkit {

/// A graded subcomplex of Λu*: per degree a basis (columns in the lexicographic
/// coordinates of Λ^k) and the differential written in those bases.
struct FormModel {
  std::size_t ambient_dim = 0;
  std::vector<ExteriorBasis> ambient_basis;  ///< k = 0..ambient_dim
  std::vector<Mat> basis;                    ///< C(n,k) x m_k
  std::vector<Mat> diff;                     ///< m_{k+1} x m_k; diff[n] has zero rows

  std::size_t top_degree() const { return ambient_dim; }
  std::size_t dim(std::size_t k) const { return basis[k].cols(); }

  ExteriorForm form(std::size_t k, const Vec& coords) const;
  /// Coordinates of an ambient form in the model, or nullopt if it lies outside.
  std::optional<Vec> coords(const ExteriorForm& f) const;
  bool has_zero_differential() const;
};

/// Chevalley-Eilenberg complex of a Lie algebra with
/// d xi^k = - sum_{i<j} c_ij^k xi^i ∧ xi^j, extended as an antiderivation.
class CochainComplex {
 public:
  CochainComplex() = default;
  explicit CochainComplex(const LieAlgebra& g);

  const LieAlgebra& algebra() const { return g_; }
  std::size_t dim() const { return g_.dim(); }
  /// d: Λ^k -> Λ^{k+1} in lexicographic coordinates (k = 0..dim).
  const Mat& d(std::size_t k) const { return model_.diff[k]; }
  const ExteriorBasis& basis(std::size_t k) const { return model_.ambient_basis[k]; }
  ExteriorForm differential(const ExteriorForm& f) const;
  /// The full complex as a FormModel (identity bases).
  const FormModel& model() const { return model_; }

 private:
  LieAlgebra g_;
  std::vector<ExteriorForm> d1_;
  FormModel model_;
};

/// Throws InternalError naming the offending basis form if d∘d != 0.
CochainComplex ce_complex(const LieAlgebra& g);

struct CohomologyClass {
  std::size_t degree = 0;
  Vec coords;
};

/// Cohomology in one degree: closed representatives independent modulo
/// exact forms, plus the data to project any closed form onto them.
struct CohomologyBasis {
  std::size_t degree = 0;
  std::vector<ExteriorForm> representatives;
  std::vector<Vec> representative_coords;  ///< in model coordinates
  Mat projection;                          ///< [representatives | d_{k-1}] in model coordinates

  std::size_t size() const { return representatives.size(); }
};

CohomologyBasis cohomology(const FormModel& model, std::size_t k);
inline CohomologyBasis cohomology(const CochainComplex& cx, std::size_t k) { return cohomology(cx.model(), k); }

/// Decomposition z = sum c_i rep_i + d(primitive) of a closed form.
struct ClassProjection {
  Vec coefficients;
  ExteriorForm primitive;
};

/// Cohomology of every degree of a model, with products.
class CohomologyRing {
 public:
  CohomologyRing() = default;
  explicit CohomologyRing(FormModel model);

  const FormModel& model() const { return model_; }
  const CohomologyBasis& basis(std::size_t k) const { return h_[k]; }
  std::vector<std::size_t> betti() const;
  std::size_t top_degree() const { return model_.top_degree(); }

  /// Throws PreconditionError if f is not a closed form of the model.
  ClassProjection project(const ExteriorForm& f) const;
  CohomologyClass class_of(const ExteriorForm& f) const;
  ExteriorForm representative(const CohomologyClass& c) const;
  CohomologyClass cup(const CohomologyClass& a, const CohomologyClass& b) const;
  CohomologyClass unit() const;
  CohomologyClass basis_class(std::size_t k, std::size_t i) const;
  /// Some form x in the model with dx = f, or nullopt if f is not exact.
  std::optional<ExteriorForm> primitive(const ExteriorForm& f) const;
  ExteriorForm differential(const ExteriorForm& f) const;

 private:
  FormModel model_;
  std::vector<CohomologyBasis> h_;
};

}  // namespace hullkit
