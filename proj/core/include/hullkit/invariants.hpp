#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hullkit/cochain.hpp"
#include "hullkit/hull.hpp"

namespace hullkit {

/// The subalgebra (Λu*)^T of forms fixed by the torus derivations and the
/// finite group, with the restricted differential.
struct InvariantComplex {
  CochainComplex ambient;
  FormModel model;
  std::size_t group_order = 1;
};

/// Degree-0 derivation D acting on Λ^k u* via (Dα)(x) = -α(Dx).
Mat derivation_on_forms(const Mat& d, std::size_t k);
/// Pullback of an automorphism A on Λ^k u*: (A*α)(x) = α(Ax).
Mat automorphism_on_forms(const Mat& a, std::size_t k);
/// (1/|G|) sum_g g* on Λ^k u* over the enumerated group elements.
Mat averaging_projector(const std::vector<Mat>& group, std::size_t dim, std::size_t k);

/// Throws ValidationError / PreconditionError from validate_hull_data and
/// InternalError if the computed subspace is not a sub-DGA.
InvariantComplex invariant_subcomplex(const HullData& h, std::size_t finite_bound = kDefaultFiniteBound);

/// The whole complex of u, no action.
InvariantComplex full_complex(const LieAlgebra& u);

/// Closed under wedge: all products of invariant basis forms stay invariant.
std::optional<std::string> check_wedge_closed(const InvariantComplex& ic);

}  // namespace hullkit
