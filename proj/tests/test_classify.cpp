#include <doctest.h>

#include <hullkit/classify.hpp>
#include <hullkit/fixtures.hpp>

using namespace hullkit;

TEST_CASE("derivation spectra") {
  const auto sol = derivation_spectrum(Mat::diagonal({0, 1, -1}));
  CHECK(sol.zero_multiplicity == 1);
  CHECK(sol.even);
  CHECK(sol.q_squarefree == Poly{-1, 1});
  CHECK(sol.nonpositive_roots == 0);
  CHECK_FALSE(sol.compatible);

  const Mat rot{{0, -1, 0}, {1, 0, 0}, {0, 0, 0}};
  const auto r = derivation_spectrum(rot);
  CHECK(r.q_squarefree == Poly{1, 1});
  CHECK(r.nonpositive_roots == 1);
  CHECK(r.compatible);

  const auto odd = derivation_spectrum(Mat::diagonal({1, 2}));
  CHECK_FALSE(odd.even);
  CHECK_FALSE(odd.compatible);

  // Eigenvalues ±1 ± i: p = t^4 + 4, even, q = u^2 + 4 has no real roots.
  const Mat twisted{{1, -1, 0, 0}, {1, 1, 0, 0}, {0, 0, -1, -1}, {0, 0, 1, -1}};
  const auto tw = derivation_spectrum(twisted);
  CHECK(tw.even);
  CHECK(tw.nonpositive_roots == 0);
  CHECK_FALSE(tw.compatible);
  CHECK(verify_not_type_one_witness(twisted, tw));
  CHECK_FALSE(verify_not_type_one_witness(rot, r));
}

TEST_CASE("type I verdicts") {
  const TypeOneVerdict sol = type_one_check(hull_action_data(fixture("sol").algebra));
  CHECK(sol.status == TypeOneStatus::not_type_I);
  REQUIRE(sol.witness);
  CHECK(verify_not_type_one_witness(hull_action_data(fixture("sol").algebra).torus_derivations[*sol.witness],
                                    sol.spectra[*sol.witness]));

  CHECK(type_one_check(hull_action_data(fixture("rotation").algebra)).status == TypeOneStatus::type_I);
  CHECK(type_one_check(hull_action_data(fixture("example1:m=1:n=1:a=0:b=1").algebra)).status == TypeOneStatus::type_I);
  CHECK(type_one_check(hull_action_data(fixture("example1").algebra)).status == TypeOneStatus::not_type_I);
  CHECK(type_one_check(hull_action_data(fixture("abelian:n=3").algebra)).status == TypeOneStatus::type_I);
  CHECK(type_one_check(hull_action_data(fixture("heisenberg").algebra)).status == TypeOneStatus::type_I);

  const LieAlgebra u = fixture("heisenberg").algebra;
  const auto nonabelian = type_one_check({u, {Mat::diagonal({1, 0, 1})}, {}});
  CHECK(nonabelian.status == TypeOneStatus::not_certified);

  const auto noncommuting =
      type_one_check({LieAlgebra::abelian(2), {Mat::diagonal({1, -1}), Mat{{0, -1}, {1, 0}}}, {}});
  CHECK(noncommuting.status == TypeOneStatus::not_certified);
  REQUIRE(noncommuting.noncommuting);
  CHECK(*noncommuting.noncommuting == std::make_pair<std::size_t, std::size_t>(0, 1));
}

TEST_CASE("Kähler conclusions") {
  TypeOneVerdict not_one;
  not_one.status = TypeOneStatus::not_type_I;
  not_one.witness = 0;
  const auto k = kahler_obstruction(true, not_one);
  CHECK(k.conclusion == KahlerConclusion::not_kahler);
  CHECK(k.statement == "not Kähler (assuming a lattice exists)");
  CHECK(k.assumptions == std::vector<std::string>{"a lattice exists"});

  TypeOneVerdict one;
  one.status = TypeOneStatus::type_I;
  CHECK(kahler_obstruction(true, one).statement == "no obstruction from this criterion");
  CHECK(kahler_obstruction(true, one).assumptions.empty());
  CHECK(kahler_obstruction(false, not_one).statement == "criterion inapplicable");
}

TEST_CASE("analyze sol") {
  const AnalysisReport r = analyze(fixture("sol").analysis_input());
  CHECK(r.solvable);
  CHECK_FALSE(r.nilpotent);
  CHECK(r.nilradical->dim() == 2);
  CHECK(r.hull_abelian->abelian);
  CHECK(r.formality->status == FormalityStatus::certified_formal);
  CHECK(r.type_one->status == TypeOneStatus::not_type_I);
  CHECK(r.kahler->statement == "not Kähler (assuming a lattice exists)");
  CHECK_FALSE(r.symplectic);
  for (const auto& s : r.stages) CHECK(s.status == StageStatus::ok);
}

TEST_CASE("analyze the finite extension with omega") {
  const AnalysisReport r = analyze(fixture("section7_Mdelta").analysis_input());
  CHECK(r.formality->status == FormalityStatus::certified_formal);
  CHECK(r.symplectic->symplectic());
  CHECK(r.lefschetz->holds);
  CHECK(r.kahler->conclusion == KahlerConclusion::inapplicable);
}

TEST_CASE("analyze Heisenberg") {
  const AnalysisReport r = analyze(fixture("heisenberg").analysis_input());
  CHECK_FALSE(r.hull_abelian->abelian);
  CHECK(r.formality->status == FormalityStatus::obstructed_nonformal);
  CHECK(r.kahler->statement == "criterion inapplicable");
}

TEST_CASE("analyze never asserts a positive Kähler conclusion") {
  for (const std::string id : {"sol", "rotation", "abelian:n=2", "example1", "example2", "heisenberg"}) {
    const AnalysisReport r = analyze(fixture(id).analysis_input());
    REQUIRE(r.kahler);
    CHECK((r.kahler->conclusion != KahlerConclusion::not_kahler || r.kahler->assumptions.size() == 1));
    CHECK(r.kahler->statement.rfind("Kähler", 0) != 0);
  }
  CHECK(analyze(fixture("rotation").analysis_input()).kahler->statement == "no obstruction from this criterion");
  CHECK(analyze(fixture("abelian:n=2").analysis_input()).kahler->statement == "no obstruction from this criterion");
}

TEST_CASE("stage failures degrade gracefully") {
  const AnalysisReport sl2 = analyze(fixture("sl2").analysis_input());
  CHECK(sl2.stage("validate")->status == StageStatus::ok);
  CHECK(sl2.stage("nilradical")->status == StageStatus::failed);
  CHECK(sl2.stage("hull")->status == StageStatus::skipped);
  CHECK(sl2.stage("formality")->status == StageStatus::skipped);
  CHECK(sl2.stage("kahler")->status == StageStatus::skipped);
  CHECK_FALSE(sl2.solvable);

  LieAlgebra bad({"a", "b", "c"});
  bad.set_bracket(0, 1, {0, 1, 0});
  bad.set_bracket(0, 2, {0, 0, 1});
  bad.set_bracket(1, 2, {1, 0, 0});
  const AnalysisReport r = analyze({bad, std::nullopt, std::nullopt, {}});
  CHECK(r.stage("validate")->status == StageStatus::failed);
  CHECK(r.stage("structure")->status == StageStatus::skipped);

  // Omega supplied but degenerate: symplectic fails, Lefschetz skipped, the rest survives.
  AnalysisInput in = fixture("example1").analysis_input();
  in.omega = ExteriorForm::basis(6, {0, 5});
  const AnalysisReport d = analyze(in);
  CHECK(d.stage("symplectic")->status == StageStatus::failed);
  CHECK(d.stage("lefschetz")->status == StageStatus::skipped);
  CHECK(d.stage("formality")->status == StageStatus::ok);
  CHECK(d.stage("kahler")->status == StageStatus::ok);
}

TEST_CASE("analyze is deterministic") {
  const AnalysisInput in = fixture("example2").analysis_input();
  const AnalysisReport a = analyze(in), b = analyze(in);
  REQUIRE(a.stages.size() == b.stages.size());
  for (std::size_t i = 0; i < a.stages.size(); ++i) {
    CHECK(a.stages[i].name == b.stages[i].name);
    CHECK(a.stages[i].message == b.stages[i].message);
  }
  CHECK(a.lefschetz->maps == b.lefschetz->maps);
  CHECK(a.betti == b.betti);
}
