#include "hullkit/invariants.hpp"

#include "hullkit/errors.hpp"

namespace hullkit {

namespace {

// Image of each degree-1 basis form under a linear map on u*, given by its
// matrix on 1-form coordinates.
Mat induced_on_forms(const Mat& on_one_forms, std::size_t k, bool as_derivation) {
  const std::size_t n = on_one_forms.rows();
  const ExteriorBasis src(n, k);
  Mat out(src.size(), src.size());
  std::vector<ExteriorForm> images;
  for (std::size_t i = 0; i < n; ++i)
    images.push_back(ExteriorForm::from_coords(n, 1, on_one_forms.column(i)));
  for (std::size_t col = 0; col < src.size(); ++col) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i)
      if (src.mask(col) & (Mask{1} << i)) idx.push_back(i);
    ExteriorForm image(n, k);
    if (as_derivation) {
      for (std::size_t m = 0; m < idx.size(); ++m) {
        ExteriorForm term = ExteriorForm::one(n);
        for (std::size_t p = 0; p < idx.size(); ++p)
          term = wedge(term, p == m ? images[idx[p]] : ExteriorForm::basis(n, {idx[p]}));
        image += term;
      }
    } else {
      image = ExteriorForm::one(n);
      for (auto i : idx) image = wedge(image, images[i]);
    }
    for (const auto& [mask, c] : image.terms()) out(src.index(mask), col) = c;
  }
  return out;
}

}  // namespace

Mat derivation_on_forms(const Mat& d, std::size_t k) {
  // (Dξ^i) = -Σ_j D(i, j) ξ^j, i.e. the matrix -D^T on 1-form coordinates.
  return induced_on_forms(-d.transpose(), k, true);
}

Mat automorphism_on_forms(const Mat& a, std::size_t k) {
  // (A*ξ^i) = Σ_j A(i, j) ξ^j.
  return induced_on_forms(a.transpose(), k, false);
}

Mat averaging_projector(const std::vector<Mat>& group, std::size_t dim, std::size_t k) {
  const std::size_t size = binomial(dim, k);
  Mat p(size, size);
  for (const auto& g : group) p += automorphism_on_forms(g, k);
  Rational scale(1);
  scale /= static_cast<unsigned long>(group.size());
  p *= scale;
  return p;
}

InvariantComplex invariant_subcomplex(const HullData& h, std::size_t finite_bound) {
  validate_hull_data(h, finite_bound);
  const std::size_t n = h.u.dim();
  const auto group = enumerate_group(h.finite_generators, n, finite_bound);

  InvariantComplex ic;
  ic.ambient = ce_complex(h.u);
  ic.group_order = group.size();
  FormModel& model = ic.model;
  model.ambient_dim = n;
  for (std::size_t k = 0; k <= n; ++k) {
    model.ambient_basis.emplace_back(n, k);
    const std::size_t size = model.ambient_basis[k].size();
    Mat constraints(0, size);
    for (const auto& d : h.torus_derivations) constraints = vstack(constraints, derivation_on_forms(d, k));
    if (group.size() > 1)
      constraints = vstack(constraints, averaging_projector(group, n, k) - Mat::identity(size));
    if (constraints.rows() == 0) {
      model.basis.push_back(Mat::identity(size));
    } else {
      model.basis.push_back(Mat::from_columns(size, kernel_basis(constraints)));
    }
  }
  for (std::size_t k = 0; k <= n; ++k) {
    if (k == n) {
      model.diff.emplace_back(0, model.dim(k));
      continue;
    }
    Mat restricted(model.dim(k + 1), model.dim(k));
    const Mat image = ic.ambient.d(k) * model.basis[k];
    for (std::size_t col = 0; col < image.cols(); ++col) {
      auto c = solve(model.basis[k + 1], image.column(col));
      if (!c) throw InternalError("invariant forms are not closed under d in degree " + std::to_string(k));
      restricted.set_column(col, *c);
    }
    model.diff.push_back(std::move(restricted));
  }
  if (model.dim(0) != 1) throw InternalError("constants are not invariant");
  std::size_t total = 0;
  for (std::size_t k = 0; k <= n; ++k) total += model.dim(k);
  if (total <= 128)
    if (auto failure = check_wedge_closed(ic)) throw InternalError(*failure);
  return ic;
}

InvariantComplex full_complex(const LieAlgebra& u) {
  InvariantComplex ic;
  ic.ambient = ce_complex(u);
  ic.model = ic.ambient.model();
  return ic;
}

std::optional<std::string> check_wedge_closed(const InvariantComplex& ic) {
  const FormModel& model = ic.model;
  const std::size_t n = model.ambient_dim;
  for (std::size_t p = 1; p <= n; ++p)
    for (std::size_t q = p; p + q <= n; ++q)
      for (std::size_t i = 0; i < model.dim(p); ++i)
        for (std::size_t j = 0; j < model.dim(q); ++j) {
          const ExteriorForm w = wedge(model.form(p, unit_vec(model.dim(p), i)), model.form(q, unit_vec(model.dim(q), j)));
          if (!model.coords(w)) return "invariant forms are not closed under wedge in degrees " + std::to_string(p) +
                                       " and " + std::to_string(q);
        }
  return std::nullopt;
}

}  // namespace hullkit
