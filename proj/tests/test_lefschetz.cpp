#include <doctest.h>

#include <random>

#include <hullkit/errors.hpp>
#include <hullkit/fixtures.hpp>
#include <hullkit/lefschetz.hpp>

#include "support/fixtures.hpp"

using namespace hullkit;

namespace {

InvariantComplex model_of(const InputDocument& doc) {
  if (doc.hull_override) return invariant_subcomplex(*doc.hull_override);
  return invariant_subcomplex(hull_action_data(doc.algebra));
}

}  // namespace

TEST_CASE("symplectic checks") {
  const InputDocument doc = fixture("example1");
  const InvariantComplex ic = model_of(doc);
  const SymplecticCheck s = verify_symplectic(ic, *doc.omega);
  CHECK(s.closed);
  CHECK(s.top_power_nonzero);
  CHECK(s.half_dim == 3);
  CHECK(to_string(s.top_power, doc.algebra.basis_names()) == "6 tau^x1^y1^z1^w1^sigma");

  // Degenerate and non-closed forms.
  const ExteriorForm degenerate = ExteriorForm::basis(6, {0, 5});
  CHECK_FALSE(verify_symplectic(ic, degenerate).symplectic());
  const InvariantComplex kt = model_of(fixture("kodaira_thurston"));
  const SymplecticCheck open = verify_symplectic(kt, ExteriorForm::basis(4, {2, 3}));
  CHECK_FALSE(open.closed);

  CHECK_THROWS_AS(verify_symplectic(model_of(fixture("sol")), ExteriorForm(3, 2)), PreconditionError);
  CHECK_THROWS_AS(verify_symplectic(ic, ExteriorForm::basis(6, {0})), PreconditionError);
  // x1^y1 + x1^sigma is not torus invariant.
  CHECK_THROWS_AS(verify_symplectic(ic, ExteriorForm::basis(6, {1, 5})), PreconditionError);
  CHECK_THROWS_AS(hard_lefschetz(ic, degenerate), PreconditionError);
}

TEST_CASE("hard Lefschetz holds on the split examples") {
  for (const std::string id : {"example1", "example2", "example1:m=2:n=1:a=1,2:b=3", "section7_Mdelta"}) {
    CAPTURE(id);
    const InputDocument doc = fixture(id);
    const InvariantComplex ic = model_of(doc);
    const LefschetzReport r = hard_lefschetz(ic, *doc.omega);
    CHECK(r.holds);
    REQUIRE(r.duality_route);
    CHECK(r.routes_agree);
    CHECK(poincare_pairing(ic).all_perfect());
  }
}

TEST_CASE("M_Delta: omega maps H^1 isomorphically onto H^3") {
  const InputDocument doc = fixture("section7_Mdelta");
  const LefschetzReport r = hard_lefschetz(model_of(doc), *doc.omega);
  REQUIRE(r.maps.size() == 3);
  CHECK(r.maps[1] == Mat::identity(2));
  CHECK(r.iso[1]);
}

TEST_CASE("Kodaira-Thurston fails hard Lefschetz in degree 1") {
  const InputDocument doc = fixture("kodaira_thurston");
  const InvariantComplex ic = model_of(doc);
  const LefschetzReport r = hard_lefschetz(ic, *doc.omega);
  CHECK_FALSE(r.holds);
  CHECK(r.iso == std::vector<bool>{true, false, true});
  CHECK(rank(r.maps[1]) == 2);
  CHECK_FALSE(r.duality_route);
}

TEST_CASE("Lefschetz verdicts are invariant under scaling and exact shifts of omega") {
  std::mt19937 rng(12);
  std::uniform_int_distribution<int> c(-3, 3);
  for (const std::string id : {"kodaira_thurston", "example1", "example2"}) {
    CAPTURE(id);
    const InputDocument doc = fixture(id);
    const InvariantComplex ic = model_of(doc);
    const LefschetzReport base = hard_lefschetz(ic, *doc.omega);
    CHECK(hard_lefschetz(ic, Rational(3, 2) * *doc.omega).iso == base.iso);
    CHECK(hard_lefschetz(ic, Rational(-5) * *doc.omega).iso == base.iso);
    for (int trial = 0; trial < 5; ++trial) {
      Vec eta(ic.model.dim(1));
      for (auto& e : eta) e = c(rng);
      const ExteriorForm shifted = *doc.omega + ic.ambient.differential(ic.model.form(1, eta));
      if (!verify_symplectic(ic, shifted).symplectic()) continue;
      CHECK(hard_lefschetz(ic, shifted).iso == base.iso);
    }
  }
}

TEST_CASE("Poincaré pairing") {
  for (const auto& id : testing_support::solvable_fixture_ids()) {
    CAPTURE(id);
    CHECK(poincare_pairing(model_of(fixture(id))).all_perfect());
  }
  // A non-unimodular algebra has H^top = 0.
  LieAlgebra g({"t", "x"});
  g.set_bracket(0, 1, {0, 1});
  CHECK_FALSE(poincare_pairing(full_complex(g)).top_one_dimensional);
}

TEST_CASE("symplectic search") {
  const InvariantComplex ic = model_of(fixture("example2"));
  auto omega = search_symplectic(ic, 1);
  REQUIRE(omega);
  CHECK(verify_symplectic(ic, *omega).symplectic());
  CHECK_FALSE(search_symplectic(model_of(fixture("sol"))));
  const InvariantComplex fil = model_of(fixture("filiform4"));
  auto fil_omega = search_symplectic(fil, 1, 32);
  REQUIRE(fil_omega);
  CHECK(verify_symplectic(fil, *fil_omega).symplectic());
  CHECK(fil.ambient.differential(parse_form("e1^e4 + e2^e3", {"e1", "e2", "e3", "e4"})).is_zero());
}
