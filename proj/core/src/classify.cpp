#include "hullkit/classify.hpp"

#include <functional>

#include "hullkit/errors.hpp"
#include "hullkit/linalg.hpp"

namespace hullkit {

DerivationSpectrum derivation_spectrum(const Mat& d, std::size_t index) {
  DerivationSpectrum s;
  s.index = index;
  s.char_poly = char_poly(d);
  const auto& c = s.char_poly.coeffs();
  while (s.zero_multiplicity < c.size() && c[s.zero_multiplicity] == 0) ++s.zero_multiplicity;
  s.stripped = Poly(std::vector<Rational>(c.begin() + static_cast<std::ptrdiff_t>(s.zero_multiplicity), c.end()));
  s.even = true;
  for (std::size_t i = 1; i < s.stripped.coeffs().size(); i += 2)
    if (s.stripped.coeff(i) != 0) s.even = false;
  if (!s.even) return s;
  std::vector<Rational> half;
  for (std::size_t i = 0; i < s.stripped.coeffs().size(); i += 2) half.push_back(s.stripped.coeff(i));
  s.q = Poly(std::move(half));
  s.q_squarefree = squarefree_part(s.q);
  s.nonpositive_roots = sturm_real_roots_in(s.q_squarefree, Interval::at_most(0));
  s.compatible = static_cast<int>(s.nonpositive_roots) == s.q_squarefree.degree();
  return s;
}

TypeOneVerdict type_one_check(const HullData& h) {
  TypeOneVerdict v;
  const auto& ds = h.torus_derivations;
  for (std::size_t i = 0; i < ds.size(); ++i)
    for (std::size_t j = i + 1; j < ds.size(); ++j)
      if (!commutator(ds[i], ds[j]).is_zero()) {
        v.noncommuting = {i, j};
        v.reason = "torus derivations " + std::to_string(i) + " and " + std::to_string(j) + " do not commute";
        return v;
      }
  if (ds.empty()) {
    v.status = TypeOneStatus::type_I;
    v.reason = "no torus derivations; every spectrum is zero";
    return v;
  }
  if (!h.u.is_abelian()) {
    v.reason = "unipotent hull is not abelian";
    return v;
  }
  for (std::size_t i = 0; i < ds.size(); ++i) {
    v.spectra.push_back(derivation_spectrum(ds[i], i));
    if (!v.spectra.back().compatible && !v.witness) v.witness = i;
  }
  if (v.witness) {
    v.status = TypeOneStatus::not_type_I;
    v.reason = "torus derivation " + std::to_string(*v.witness) + " has an eigenvalue off the imaginary axis";
  } else {
    v.status = TypeOneStatus::type_I;
    v.reason = "every torus derivation has purely imaginary spectrum";
  }
  return v;
}

bool verify_not_type_one_witness(const Mat& d, const DerivationSpectrum& s) {
  const DerivationSpectrum fresh = derivation_spectrum(d, s.index);
  if (fresh.char_poly != s.char_poly) return false;
  if (!fresh.even) return true;
  return static_cast<int>(fresh.nonpositive_roots) < fresh.q_squarefree.degree();
}

KahlerObstruction kahler_obstruction(bool nbar_abelian, const TypeOneVerdict& type_one) {
  KahlerObstruction k;
  if (!nbar_abelian) {
    k.statement = "criterion inapplicable";
    k.certificates = {"unipotent hull is not abelian"};
    return k;
  }
  k.certificates = {"unipotent hull is abelian"};
  switch (type_one.status) {
    case TypeOneStatus::not_type_I:
      k.conclusion = KahlerConclusion::not_kahler;
      k.statement = std::string("not Kähler (assuming ") + kLatticeAssumption + ")";
      k.assumptions = {kLatticeAssumption};
      k.certificates.push_back("torus derivation " + std::to_string(*type_one.witness) +
                               " fails the imaginary-axis test");
      break;
    case TypeOneStatus::type_I:
      k.conclusion = KahlerConclusion::no_obstruction;
      k.statement = "no obstruction from this criterion";
      k.certificates.push_back("type I");
      break;
    case TypeOneStatus::not_certified:
      k.statement = "criterion inapplicable";
      k.certificates.push_back("type I not certified: " + type_one.reason);
      break;
  }
  return k;
}

const StageRecord* AnalysisReport::stage(const std::string& name) const {
  for (const auto& s : stages)
    if (s.name == name) return &s;
  return nullptr;
}

namespace {

class StageRunner {
 public:
  explicit StageRunner(AnalysisReport& r) : r_(r) {}

  bool run(const std::string& name, bool ready, const std::function<void(std::string&)>& body) {
    StageRecord rec{name, StageStatus::skipped, {}};
    if (!ready) {
      rec.message = "an earlier stage did not complete";
      r_.stages.push_back(std::move(rec));
      return false;
    }
    try {
      body(rec.message);
      rec.status = StageStatus::ok;
    } catch (const ValidationError& e) {
      rec.status = StageStatus::failed;
      rec.message = std::string("validation: ") + e.what();
    } catch (const PreconditionError& e) {
      rec.status = StageStatus::failed;
      rec.message = std::string("precondition: ") + e.what();
    }
    const bool ok = rec.status == StageStatus::ok;
    r_.stages.push_back(std::move(rec));
    return ok;
  }

 private:
  AnalysisReport& r_;
};

}  // namespace

AnalysisReport analyze(const AnalysisInput& input) {
  AnalysisReport r;
  r.input = input;
  StageRunner stages(r);
  const LieAlgebra& g = input.algebra;

  const bool valid = stages.run("validate", true, [&](std::string& msg) {
    r.validation = validate(g);
    if (!r.validation.ok()) throw ValidationError(r.validation.describe(g));
    msg = "Lie algebra axioms hold";
  });

  const bool structure = stages.run("structure", valid, [&](std::string&) {
    r.solvable = is_solvable(g);
    r.nilpotent = is_nilpotent(g);
  });

  const bool nil = stages.run("nilradical", structure, [&](std::string& msg) {
    r.nilradical = nilradical(g);
    msg = "dimension " + std::to_string(r.nilradical->dim());
  });

  const bool hull = stages.run("hull", nil, [&](std::string& msg) {
    r.hull = build_splittable_hull(g);
    r.hull_abelian = unipotent_hull_abelian(*r.hull);
    msg = "dim Im f = " + std::to_string(r.hull->imf_basis.size()) +
          (r.hull_abelian->abelian ? ", unipotent hull abelian" : ", unipotent hull not abelian");
  });

  stages.run("split_form", hull, [&](std::string& msg) {
    r.split = recognize_split_form(g);
    msg = r.split ? "split semisimple" : "not split semisimple";
  });

  const bool data = stages.run("hull_data", valid && (input.hull_override || hull), [&](std::string& msg) {
    if (input.hull_override) {
      validate_hull_data(*input.hull_override, input.options.finite_bound);
      r.hull_data = *input.hull_override;
      msg = "from hull_override";
    } else {
      r.hull_data = hull_action_data(*r.hull);
      msg = "from the splittable hull";
    }
  });

  const bool model = stages.run("invariant_model", data, [&](std::string& msg) {
    r.invariants = invariant_subcomplex(*r.hull_data, input.options.finite_bound);
    std::size_t total = 0;
    for (std::size_t k = 0; k <= r.invariants->model.top_degree(); ++k) total += r.invariants->model.dim(k);
    msg = "total dimension " + std::to_string(total) + ", group order " + std::to_string(r.invariants->group_order);
  });

  stages.run("cohomology", model, [&](std::string&) { r.betti = CohomologyRing(r.invariants->model).betti(); });

  stages.run("formality", model, [&](std::string& msg) {
    r.formality = formality_verdict(*r.invariants, input.options.massey_depth);
    msg = to_string(r.formality->status);
  });

  if (input.omega) {
    const bool symp = stages.run("symplectic", model, [&](std::string& msg) {
      r.symplectic = verify_symplectic(*r.invariants, *input.omega);
      if (!r.symplectic->symplectic())
        throw PreconditionError(r.symplectic->closed ? "omega is degenerate" : "omega is not closed");
      msg = "omega is symplectic";
    });
    stages.run("lefschetz", symp, [&](std::string& msg) {
      r.lefschetz = hard_lefschetz(*r.invariants, *input.omega);
      msg = r.lefschetz->holds ? "holds" : "fails";
    });
  }

  const bool type_one = stages.run("type_one", data, [&](std::string& msg) {
    r.type_one = type_one_check(*r.hull_data);
    msg = to_string(r.type_one->status);
  });

  stages.run("kahler", type_one, [&](std::string& msg) {
    r.kahler = kahler_obstruction(r.hull_data->u.is_abelian(), *r.type_one);
    msg = r.kahler->statement;
  });
  return r;
}

std::string to_string(TypeOneStatus s) {
  switch (s) {
    case TypeOneStatus::type_I: return "type_I";
    case TypeOneStatus::not_type_I: return "not_type_I";
    case TypeOneStatus::not_certified: return "not_certified";
  }
  return {};
}

std::string to_string(KahlerConclusion c) {
  switch (c) {
    case KahlerConclusion::not_kahler: return "not_kahler";
    case KahlerConclusion::no_obstruction: return "no_obstruction";
    case KahlerConclusion::inapplicable: return "inapplicable";
  }
  return {};
}

std::string to_string(StageStatus s) {
  switch (s) {
    case StageStatus::ok: return "ok";
    case StageStatus::failed: return "failed";
    case StageStatus::skipped: return "skipped";
  }
  return {};
}

}  // namespace hullkit
