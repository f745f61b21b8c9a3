#include "hullkit/cochain.hpp"

#include "hullkit/errors.hpp"

namespace hullkit {

ExteriorForm FormModel::form(std::size_t k, const Vec& c) const {
  return ExteriorForm::from_coords(ambient_dim, k, basis[k].apply(c));
}

std::optional<Vec> FormModel::coords(const ExteriorForm& f) const {
  const std::size_t k = f.degree();
  if (k > ambient_dim) return Vec{};
  if (basis[k].cols() == 0) return f.is_zero() ? std::optional<Vec>(Vec{}) : std::nullopt;
  return solve(basis[k], f.coords());
}

bool FormModel::has_zero_differential() const {
  for (const auto& d : diff)
    if (!d.is_zero()) return false;
  return true;
}

CochainComplex::CochainComplex(const LieAlgebra& g) : g_(g) {
  const std::size_t n = g.dim();
  for (std::size_t k = 0; k < n; ++k) {
    ExteriorForm dxi(n, 2);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        dxi.add((Mask{1} << i) | (Mask{1} << j), -g.c(i, j, k));
    d1_.push_back(std::move(dxi));
  }
  model_.ambient_dim = n;
  for (std::size_t k = 0; k <= n; ++k) {
    model_.ambient_basis.emplace_back(n, k);
    model_.basis.push_back(Mat::identity(model_.ambient_basis[k].size()));
  }
  for (std::size_t k = 0; k <= n; ++k) {
    const auto& src = model_.ambient_basis[k];
    if (k == n) {
      model_.diff.emplace_back(0, src.size());
      continue;
    }
    const auto& dst = model_.ambient_basis[k + 1];
    Mat d(dst.size(), src.size());
    for (std::size_t col = 0; col < src.size(); ++col) {
      ExteriorForm image = differential(ExteriorForm::from_coords(n, k, unit_vec(src.size(), col)));
      for (const auto& [m, c] : image.terms()) d(dst.index(m), col) = c;
    }
    model_.diff.push_back(std::move(d));
  }
}

ExteriorForm CochainComplex::differential(const ExteriorForm& f) const {
  const std::size_t n = g_.dim();
  ExteriorForm out(n, f.degree() + 1);
  for (const auto& [mask, coeff] : f.terms()) {
    // d(xi^{i1} ∧ ... ∧ xi^{ik}) = sum_m (-1)^m xi^{i1} ∧ .. ∧ d xi^{im} ∧ .. ∧ xi^{ik}
    std::size_t position = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const Mask bit = Mask{1} << i;
      if (!(mask & bit)) continue;
      const Mask before = mask & (bit - 1);
      const Mask after = mask & ~(before | bit);
      ExteriorForm prefix(n, position), suffix(n, f.degree() - position - 1);
      prefix.add(before, 1);
      suffix.add(after, 1);
      ExteriorForm term = wedge(wedge(prefix, d1_[i]), suffix);
      out += (position % 2 ? -coeff : coeff) * term;
      ++position;
    }
  }
  return out;
}

CochainComplex ce_complex(const LieAlgebra& g) {
  CochainComplex cx(g);
  for (std::size_t k = 0; k + 1 < g.dim(); ++k) {
    const Mat dd = cx.d(k + 1) * cx.d(k);
    if (dd.is_zero()) continue;
    for (std::size_t col = 0; col < dd.cols(); ++col)
      if (!is_zero(dd.column(col)))
        throw InternalError("d^2 != 0 on basis form " + mask_name(cx.basis(k).mask(col), g.basis_names()) +
                            " (Jacobi failure upstream)");
  }
  return cx;
}

CohomologyBasis cohomology(const FormModel& model, std::size_t k) {
  if (k > model.top_degree()) throw PreconditionError("cohomology degree out of range");
  CohomologyBasis h;
  h.degree = k;
  const std::size_t m = model.dim(k);
  std::vector<Vec> chosen;
  Mat image(m, 0);
  if (k > 0) {
    image = model.diff[k - 1];
    chosen = column_space_basis(image);
  }
  // Pivot columns past the image block are exactly the greedy choice of
  // cocycles independent modulo exact forms.
  const auto cocycles = kernel_basis(model.diff[k]);
  std::vector<Vec> columns = chosen;
  columns.insert(columns.end(), cocycles.begin(), cocycles.end());
  if (!columns.empty())
    for (auto p : row_echelon(Mat::from_columns(m, columns)).pivots) {
      if (p < chosen.size()) continue;
      h.representative_coords.push_back(columns[p]);
      h.representatives.push_back(model.form(k, columns[p]));
    }
  h.projection = hstack(Mat::from_columns(m, h.representative_coords), image);
  return h;
}

CohomologyRing::CohomologyRing(FormModel model) : model_(std::move(model)) {
  for (std::size_t k = 0; k <= model_.top_degree(); ++k) h_.push_back(cohomology(model_, k));
}

std::vector<std::size_t> CohomologyRing::betti() const {
  std::vector<std::size_t> b;
  for (const auto& h : h_) b.push_back(h.size());
  return b;
}

ExteriorForm CohomologyRing::differential(const ExteriorForm& f) const {
  const std::size_t k = f.degree();
  if (k >= model_.top_degree()) return ExteriorForm(model_.ambient_dim, k + 1);
  auto c = model_.coords(f);
  if (!c) throw PreconditionError("form does not lie in the model");
  return model_.form(k + 1, model_.diff[k].apply(*c));
}

ClassProjection CohomologyRing::project(const ExteriorForm& f) const {
  const std::size_t k = f.degree();
  if (k > top_degree()) return {{}, ExteriorForm(model_.ambient_dim, k - 1)};
  auto c = model_.coords(f);
  if (!c) throw PreconditionError("form does not lie in the model");
  if (!is_zero(model_.diff[k].apply(*c))) throw PreconditionError("projecting a form that is not closed");
  const auto& h = h_[k];
  ClassProjection out{zero_vec(h.size()), ExteriorForm(model_.ambient_dim, k == 0 ? 0 : k - 1)};
  if (h.projection.cols() == 0) return out;
  auto z = solve(h.projection, *c);
  if (!z) throw InternalError("closed form not in span of representatives and exact forms");
  for (std::size_t i = 0; i < h.size(); ++i) out.coefficients[i] = (*z)[i];
  if (k > 0) {
    Vec prim_image(z->begin() + static_cast<std::ptrdiff_t>(h.size()), z->end());
    // The trailing block multiplies the columns of d_{k-1}, i.e. model coordinates in degree k-1.
    out.primitive = model_.form(k - 1, prim_image);
  }
  return out;
}

CohomologyClass CohomologyRing::class_of(const ExteriorForm& f) const {
  return {f.degree(), project(f).coefficients};
}

ExteriorForm CohomologyRing::representative(const CohomologyClass& c) const {
  ExteriorForm out(model_.ambient_dim, c.degree);
  if (c.degree > top_degree()) return out;
  const auto& h = h_[c.degree];
  for (std::size_t i = 0; i < h.size(); ++i)
    if (sgn(c.coords[i]) != 0) out += c.coords[i] * h.representatives[i];
  return out;
}

CohomologyClass CohomologyRing::cup(const CohomologyClass& a, const CohomologyClass& b) const {
  const std::size_t k = a.degree + b.degree;
  if (k > top_degree()) return {k, {}};
  return class_of(wedge(representative(a), representative(b)));
}

CohomologyClass CohomologyRing::unit() const { return basis_class(0, 0); }

CohomologyClass CohomologyRing::basis_class(std::size_t k, std::size_t i) const {
  return {k, unit_vec(h_[k].size(), i)};
}

std::optional<ExteriorForm> CohomologyRing::primitive(const ExteriorForm& f) const {
  const std::size_t k = f.degree();
  if (f.is_zero()) return ExteriorForm(model_.ambient_dim, k == 0 ? 0 : k - 1);
  if (k == 0 || k > top_degree()) return std::nullopt;
  auto c = model_.coords(f);
  if (!c) return std::nullopt;
  auto x = solve(model_.diff[k - 1], *c);
  if (!x) return std::nullopt;
  return model_.form(k - 1, *x);
}

}  // namespace hullkit
