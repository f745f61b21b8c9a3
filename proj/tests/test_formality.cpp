#include <doctest.h>

#include <random>

#include <hullkit/fixtures.hpp>
#include <hullkit/formality.hpp>

using namespace hullkit;

namespace {

InvariantComplex model_of(const std::string& id) {
  const InputDocument doc = fixture(id);
  if (doc.hull_override) return invariant_subcomplex(*doc.hull_override);
  return invariant_subcomplex(hull_action_data(doc.algebra));
}

// Class of the Massey representative built from arbitrary defining forms,
// compared modulo the indeterminacy.
bool same_coset(const CohomologyRing& ring, const MasseyWitness& w, const ExteriorForm& r2) {
  const CohomologyClass diff = ring.class_of(r2 - w.r);
  std::vector<Vec> span;
  for (const auto& c : w.indeterminacy) span.push_back(c.coords);
  return in_span(span_basis(span, diff.coords.size()), diff.coords, diff.coords.size());
}

}  // namespace

TEST_CASE("Heisenberg Massey witness") {
  const InvariantComplex ic = full_complex(fixture("heisenberg").algebra);
  const CohomologyRing ring(ic.model);
  const auto e1 = ring.basis_class(1, 0), e2 = ring.basis_class(1, 1);
  const auto m = massey_triple(ring, e1, e1, e2);
  REQUIRE(m.status == MasseyStatus::nonvanishing);
  const std::vector<std::string> names{"e1", "e2", "e3"};
  CHECK(to_string(m.witness.x, names) == "0");
  CHECK(to_string(m.witness.y, names) == "-e3");
  CHECK(to_string(m.witness.r, names) == "-e1^e3");
  CHECK(m.witness.indeterminacy_rank == 0);
  CHECK(verify_massey_witness(ic, m.witness));

  const FormalityVerdict v = formality_verdict(ic);
  CHECK(v.status == FormalityStatus::obstructed_nonformal);
  REQUIRE(v.witness);
  CHECK(v.witness->A == ExteriorForm::basis(3, {0}));
  CHECK(v.witness->C == ExteriorForm::basis(3, {1}));
  CHECK(verify_formality_verdict(ic, v));
}

TEST_CASE("undefined and vanishing products") {
  const InvariantComplex ic = full_complex(fixture("heisenberg").algebra);
  const CohomologyRing ring(ic.model);
  const auto e1 = ring.basis_class(1, 0), e2 = ring.basis_class(1, 1);
  // e1 e3 in H^2: [e1][e1^e3] is the top class, so <e1, e1^e3, ...> is undefined.
  const auto h2 = ring.basis_class(2, 0);
  CHECK(massey_triple(ring, e1, e2, h2).status == MasseyStatus::undefined);
  const InvariantComplex ab = full_complex(LieAlgebra::abelian(3));
  const CohomologyRing r2(ab.model);
  const auto a = r2.basis_class(1, 0);
  CHECK(massey_triple(r2, a, a, a).status == MasseyStatus::vanishes);
}

TEST_CASE("Massey coset is independent of the defining system") {
  std::mt19937 rng(31);
  std::uniform_int_distribution<int> c(-3, 3);
  for (const std::string id : {"heisenberg", "filiform4", "kodaira_thurston"}) {
    CAPTURE(id);
    const InvariantComplex ic = full_complex(fixture(id).algebra);
    const CohomologyRing ring(ic.model);
    const FormalityVerdict v = formality_verdict(ic);
    REQUIRE(v.witness);
    const MasseyWitness& w = *v.witness;
    const std::size_t n = ic.model.ambient_dim;
    for (int trial = 0; trial < 10; ++trial) {
      // A -> A + d(eta), x -> x + eta∧B, plus closed shifts of x and y.
      Vec eta_c(binomial(n, w.A.degree() - 1));
      for (auto& e : eta_c) e = c(rng);
      const ExteriorForm eta = ExteriorForm::from_coords(n, w.A.degree() - 1, eta_c);
      const ExteriorForm A2 = w.A + ic.ambient.differential(eta);
      ExteriorForm x2 = w.x + wedge(eta, w.B);
      ExteriorForm y2 = w.y;
      const auto& hx = ring.basis(x2.degree());
      const auto& hy = ring.basis(y2.degree());
      for (const auto& rep : hx.representatives) x2 += Rational(c(rng)) * rep;
      for (const auto& rep : hy.representatives) y2 += Rational(c(rng)) * rep;
      REQUIRE(ic.ambient.differential(x2) == wedge(A2, w.B));
      REQUIRE(ic.ambient.differential(y2) == wedge(w.B, w.C));
      const Rational sign = w.a.degree % 2 ? 1 : -1;
      const ExteriorForm r2 = wedge(A2, y2) + sign * wedge(x2, w.C);
      CHECK(same_coset(ring, w, r2));
    }
  }
}

TEST_CASE("tampered witnesses fail verification") {
  const InvariantComplex ic = full_complex(fixture("heisenberg").algebra);
  FormalityVerdict v = formality_verdict(ic);
  REQUIRE(v.witness);
  MasseyWitness w = *v.witness;
  w.y = w.y + ExteriorForm::basis(3, {1});
  CHECK_FALSE(verify_massey_witness(ic, w));
  MasseyWitness w2 = *v.witness;
  w2.r = Rational(2) * w2.r;
  CHECK_FALSE(verify_massey_witness(ic, w2));
  v.status = FormalityStatus::certified_formal;
  CHECK_FALSE(verify_formality_verdict(ic, v));
}

TEST_CASE("formality verdicts on the fixtures") {
  CHECK(formality_verdict(model_of("sol")).status == FormalityStatus::certified_formal);
  CHECK(formality_verdict(model_of("example1")).status == FormalityStatus::certified_formal);
  CHECK(formality_verdict(model_of("example2")).status == FormalityStatus::certified_formal);
  CHECK(formality_verdict(model_of("section7")).status == FormalityStatus::certified_formal);
  CHECK(formality_verdict(model_of("section7_Mdelta")).status == FormalityStatus::certified_formal);
  for (const std::string id : {"heisenberg", "filiform4", "kodaira_thurston"}) {
    CAPTURE(id);
    const InvariantComplex ic = model_of(id);
    const FormalityVerdict v = formality_verdict(ic);
    CHECK(v.status == FormalityStatus::obstructed_nonformal);
    CHECK(verify_formality_verdict(ic, v));
  }
}

TEST_CASE("scan depth limits the search") {
  const InvariantComplex ic = full_complex(fixture("heisenberg").algebra);
  const FormalityVerdict shallow = formality_verdict(ic, 2);
  CHECK(shallow.status == FormalityStatus::undecided);
  CHECK(shallow.triples_scanned == 0);
  CHECK(verify_formality_verdict(ic, shallow));
  CHECK(formality_verdict(ic, 3).status == FormalityStatus::obstructed_nonformal);
}
