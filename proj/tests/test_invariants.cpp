#include <doctest.h>

#include <hullkit/errors.hpp>
#include <hullkit/fixtures.hpp>
#include <hullkit/invariants.hpp>

#include "support/fixtures.hpp"

using namespace hullkit;

namespace {

std::vector<std::string> model_basis(const InvariantComplex& ic, std::size_t k, const std::vector<std::string>& names) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < ic.model.dim(k); ++i)
    out.push_back(to_string(ic.model.form(k, unit_vec(ic.model.dim(k), i)), names));
  return out;
}

}  // namespace

TEST_CASE("induced actions on forms") {
  // D = diag(1, 0, 1) on Heisenberg: D x3 = x3 so D acts on xi^3 by -1.
  const Mat d = Mat::diagonal({1, 0, 1});
  CHECK(derivation_on_forms(d, 1) == Mat::diagonal({-1, 0, -1}));
  CHECK(derivation_on_forms(d, 2) == Mat::diagonal({-1, -2, -1}));
  const Mat a = Mat::diagonal({1, -1, -1});
  CHECK(automorphism_on_forms(a, 2) == Mat::diagonal({-1, -1, 1}));
  CHECK(averaging_projector({Mat::identity(3), a}, 3, 1) == Mat::diagonal({1, 0, 0}));
  // Pullback is contravariant: (AB)* = B* A*.
  const Mat p{{1, 1, 0}, {0, 1, 0}, {0, 0, 1}}, q{{1, 0, 0}, {2, 1, 0}, {0, 0, 1}};
  CHECK(automorphism_on_forms(p * q, 2) == automorphism_on_forms(q, 2) * automorphism_on_forms(p, 2));
}

TEST_CASE("finite extension of the Heisenberg algebra") {
  const InputDocument doc = fixture("section7");
  const InvariantComplex ic = invariant_subcomplex(*doc.hull_override);
  const auto& names = doc.hull_override->u.basis_names();
  CHECK(ic.group_order == 2);
  CHECK(model_basis(ic, 0, names) == std::vector<std::string>{"1"});
  CHECK(model_basis(ic, 1, names) == std::vector<std::string>{"x1"});
  CHECK(model_basis(ic, 2, names) == std::vector<std::string>{"x2^x3"});
  CHECK(model_basis(ic, 3, names) == std::vector<std::string>{"x1^x2^x3"});
  CHECK(ic.model.has_zero_differential());
  CHECK(CohomologyRing(ic.model).betti() == std::vector<std::size_t>{1, 1, 1, 1});
  CHECK_FALSE(check_wedge_closed(ic));
}

TEST_CASE("the M_Delta variant") {
  const InputDocument doc = fixture("section7_Mdelta");
  const InvariantComplex ic = invariant_subcomplex(*doc.hull_override);
  const auto& names = doc.hull_override->u.basis_names();
  const CohomologyRing ring(ic.model);
  auto reps = [&](std::size_t k) {
    std::vector<std::string> out;
    for (const auto& f : ring.basis(k).representatives) out.push_back(to_string(f, names));
    return out;
  };
  CHECK(reps(1) == std::vector<std::string>{"x1", "y"});
  CHECK(reps(3) == std::vector<std::string>{"x1^x2^x3", "x2^x3^y"});
  CHECK(ring.betti() == std::vector<std::size_t>{1, 2, 2, 2, 1});
}

TEST_CASE("torus-invariant forms of hull data") {
  // sol: nbar abelian of dim 3, torus diag(0, 1, -1).
  const HullData h = hull_action_data(fixture("sol").algebra);
  const InvariantComplex ic = invariant_subcomplex(h);
  CHECK(model_basis(ic, 1, h.u.basis_names()) == std::vector<std::string>{"t"});
  CHECK(model_basis(ic, 2, h.u.basis_names()) == std::vector<std::string>{"x^y"});
  CHECK(ic.model.has_zero_differential());
}

TEST_CASE("invariant model computes the cohomology of g on split examples") {
  // For the split fixtures the invariant model and the full complex of g have
  // the same Betti numbers.
  for (const std::string id : {"sol", "example1", "example2", "rotation", "example1:m=2:n=1:a=1,2:b=3"}) {
    CAPTURE(id);
    const LieAlgebra g = fixture(id).algebra;
    const InvariantComplex ic = invariant_subcomplex(hull_action_data(g));
    CHECK(CohomologyRing(ic.model).betti() == CohomologyRing(ce_complex(g).model()).betti());
    CHECK_FALSE(check_wedge_closed(ic));
  }
}

TEST_CASE("invariant models are closed under d and wedge on every fixture") {
  for (const auto& id : testing_support::solvable_fixture_ids()) {
    CAPTURE(id);
    const InputDocument doc = fixture(id);
    const HullData h = doc.hull_override ? *doc.hull_override : hull_action_data(doc.algebra);
    const InvariantComplex ic = invariant_subcomplex(h);
    CHECK_FALSE(check_wedge_closed(ic));
    for (std::size_t k = 0; k < ic.model.top_degree(); ++k)
      for (std::size_t i = 0; i < ic.model.dim(k); ++i) {
        const ExteriorForm f = ic.model.form(k, unit_vec(ic.model.dim(k), i));
        CHECK(ic.model.coords(ic.ambient.differential(f)));
      }
  }
}

TEST_CASE("full complex wraps the Chevalley-Eilenberg model") {
  const LieAlgebra g = fixture("heisenberg").algebra;
  const InvariantComplex ic = full_complex(g);
  CHECK(ic.group_order == 1);
  CHECK(ic.model.dim(1) == 3);
  CHECK_FALSE(ic.model.has_zero_differential());
}

TEST_CASE("invalid hull data is rejected") {
  const LieAlgebra u = fixture("heisenberg").algebra;
  CHECK_THROWS_AS(invariant_subcomplex({u, {}, {Mat::diagonal({-1, 1, 1})}}), ValidationError);
  const Mat order_three{{0, 0, 1}, {1, 0, 0}, {0, 1, 0}};
  CHECK_THROWS_AS(invariant_subcomplex({u, {}, {order_three}}), ValidationError);
  CHECK_THROWS_AS(invariant_subcomplex({LieAlgebra::abelian(2), {}, {Mat{{1, 1}, {0, 1}}}}, 100), PreconditionError);
}
