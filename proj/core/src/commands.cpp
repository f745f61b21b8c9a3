#include "hullkit/commands.hpp"

#include <sstream>

#include <json.hpp>

#include "hullkit/errors.hpp"

namespace hullkit {

using nlohmann::json;

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"validate",   "nilradical", "hull",      "cohomology",
                                              "invariants", "formality",  "lefschetz", "analyze"};
  return names;
}

namespace {

using Names = std::vector<std::string>;

json rat(const Rational& r) { return to_string(r); }

json vec(const Vec& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(rat(x));
  return a;
}

json mat(const Mat& m) {
  json a = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) a.push_back(vec(m.row(r)));
  return a;
}

std::string lincomb(const Vec& v, const Names& names) {
  return to_string(ExteriorForm::from_coords(names.size(), 1, v), names);
}

json subspace(const Subspace& s, const Names& names) {
  json a = json::array();
  for (const auto& v : s.basis()) a.push_back(lincomb(v, names));
  return a;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? sep : "") + parts[i];
  return s;
}

std::string sizes(const std::vector<std::size_t>& v) {
  std::vector<std::string> parts;
  for (auto x : v) parts.push_back(std::to_string(x));
  return "(" + join(parts, ", ") + ")";
}

std::string bracketed(const std::vector<std::string>& v) { return "{" + join(v, ", ") + "}"; }

std::vector<std::string> subspace_strings(const Subspace& s, const Names& names) {
  std::vector<std::string> out;
  for (const auto& v : s.basis()) out.push_back(lincomb(v, names));
  return out;
}

std::string matrix_text(const Mat& m, const std::string& indent) {
  std::ostringstream os;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << indent << "[";
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? " " : "") << to_string(m(r, c));
    os << "]\n";
  }
  if (m.rows() == 0) os << indent << "[] (" << m.rows() << "x" << m.cols() << ")\n";
  return os.str();
}

class Output {
 public:
  explicit Output(std::string command) { j_["command"] = std::move(command); }

  json& result() { return j_["result"]; }
  std::ostringstream& text() { return text_; }

  CommandResult finish(int code, const std::string& error_kind = {}, const std::string& message = {}) {
    j_["schema_version"] = kSchemaVersion;
    j_["exit_code"] = code;
    if (code == kExitOk) {
      j_["status"] = "ok";
    } else {
      j_["status"] = "error";
      j_["error"] = {{"kind", error_kind}, {"message", message}};
      j_.erase("result");
      text_.str("");
      text_ << error_kind << " error: " << message << "\n";
    }
    return {code, text_.str(), j_.dump(2) + "\n"};
  }

 private:
  json j_;
  std::ostringstream text_;
};

void require_valid(const LieAlgebra& g) {
  const ValidationReport r = validate(g);
  if (!r.ok()) throw ValidationError(r.describe(g));
}

HullData hull_data_for(const InputDocument& doc) {
  if (doc.hull_override) {
    validate_hull_data(*doc.hull_override, doc.options.finite_bound);
    return *doc.hull_override;
  }
  return hull_action_data(doc.algebra);
}

json cohomology_json(const CohomologyRing& ring, const Names& names, std::ostringstream& text) {
  json degrees = json::array();
  text << "betti: " << sizes(ring.betti()) << "\n";
  for (std::size_t k = 0; k <= ring.top_degree(); ++k) {
    std::vector<std::string> reps;
    for (const auto& f : ring.basis(k).representatives) reps.push_back(to_string(f, names));
    degrees.push_back({{"degree", k}, {"representatives", reps}});
    text << "H^" << k << ": " << bracketed(reps) << "\n";
  }
  return {{"betti", ring.betti()}, {"degrees", degrees}};
}

json model_json(const InvariantComplex& ic, const Names& names, std::ostringstream& text) {
  json degrees = json::array();
  std::vector<std::size_t> dims;
  for (std::size_t k = 0; k <= ic.model.top_degree(); ++k) {
    std::vector<std::string> forms;
    for (std::size_t i = 0; i < ic.model.dim(k); ++i)
      forms.push_back(to_string(ic.model.form(k, unit_vec(ic.model.dim(k), i)), names));
    dims.push_back(forms.size());
    degrees.push_back({{"degree", k}, {"basis", forms}, {"differential", mat(ic.model.diff[k])}});
    text << "invariant forms in degree " << k << ": " << bracketed(forms) << "\n";
  }
  const bool zero = ic.model.has_zero_differential();
  text << "model dimensions: " << sizes(dims) << "\n";
  text << "group order: " << ic.group_order << "\n";
  text << "differential on invariant forms: " << (zero ? "zero" : "nonzero") << "\n";
  return {{"dimensions", dims}, {"degrees", degrees}, {"group_order", ic.group_order}, {"zero_differential", zero}};
}

json class_json(const CohomologyClass& c) { return {{"degree", c.degree}, {"coords", vec(c.coords)}}; }

json massey_json(const MasseyWitness& w, const Names& names) {
  json indet = json::array();
  for (const auto& c : w.indeterminacy) indet.push_back(class_json(c));
  return {{"a", class_json(w.a)},
          {"b", class_json(w.b)},
          {"c", class_json(w.c)},
          {"A", to_string(w.A, names)},
          {"B", to_string(w.B, names)},
          {"C", to_string(w.C, names)},
          {"x", to_string(w.x, names)},
          {"y", to_string(w.y, names)},
          {"representative", to_string(w.r, names)},
          {"representative_class", class_json(w.r_class)},
          {"indeterminacy", indet},
          {"indeterminacy_rank", w.indeterminacy_rank}};
}

json formality_json(const InvariantComplex& ic, const FormalityVerdict& v, const Names& names, std::ostringstream& text) {
  json j{{"status", to_string(v.status)},
         {"depth", v.depth},
         {"triples_scanned", v.triples_scanned},
         {"verified", verify_formality_verdict(ic, v)}};
  text << "formality: " << to_string(v.status) << "\n";
  if (v.certificate) {
    j["certificate"] = {{"kind", "zero_differential"}, {"model_dimensions", v.certificate->model_dims}};
    text << "  certificate: invariant model has zero differential, dimensions " << sizes(v.certificate->model_dims)
         << "\n";
  }
  if (v.witness) {
    j["witness"] = massey_json(*v.witness, names);
    const auto& w = *v.witness;
    text << "  Massey witness <[" << to_string(w.A, names) << "], [" << to_string(w.B, names) << "], ["
         << to_string(w.C, names) << "]>\n";
    text << "    x = " << to_string(w.x, names) << ", y = " << to_string(w.y, names) << "\n";
    text << "    representative " << to_string(w.r, names) << ", indeterminacy rank " << w.indeterminacy_rank << "\n";
  }
  if (v.status == FormalityStatus::undecided)
    text << "  no nonvanishing triple Massey product up to total degree " << v.depth << " (" << v.triples_scanned
         << " triples)\n";
  return j;
}

json symplectic_json(const SymplecticCheck& s, const Names& names, std::ostringstream& text) {
  text << "omega: " << to_string(s.omega, names) << "\n";
  text << "  closed: " << (s.closed ? "yes" : "no") << "\n";
  text << "  omega^" << s.half_dim << ": " << to_string(s.top_power, names) << "\n";
  text << "  symplectic: " << (s.symplectic() ? "yes" : "no") << "\n";
  return {{"omega", to_string(s.omega, names)},
          {"closed", s.closed},
          {"top_power", to_string(s.top_power, names)},
          {"top_power_nonzero", s.top_power_nonzero},
          {"symplectic", s.symplectic()}};
}

json lefschetz_json(const LefschetzReport& r, std::ostringstream& text) {
  json maps = json::array();
  text << "hard Lefschetz: " << (r.holds ? "holds" : "fails") << "\n";
  for (std::size_t i = 0; i < r.maps.size(); ++i) {
    maps.push_back({{"degree", i}, {"matrix", mat(r.maps[i])}, {"isomorphism", static_cast<bool>(r.iso[i])}});
    text << "  [omega^" << r.half_dim - i << "]: H^" << i << " -> H^" << 2 * r.half_dim - i << " "
         << (r.iso[i] ? "isomorphism" : "not an isomorphism") << "\n";
    text << matrix_text(r.maps[i], "    ");
  }
  json j{{"holds", r.holds}, {"maps", maps}, {"routes_agree", r.routes_agree}};
  if (r.duality_route) {
    std::vector<bool> route = *r.duality_route;
    j["duality_route"] = route;
  }
  return j;
}

json type_one_json(const TypeOneVerdict& v, std::ostringstream& text) {
  json spectra = json::array();
  for (const auto& s : v.spectra)
    spectra.push_back({{"index", s.index},
                       {"char_poly", to_string(s.char_poly, "t")},
                       {"zero_multiplicity", s.zero_multiplicity},
                       {"even", s.even},
                       {"q", to_string(s.q, "u")},
                       {"q_squarefree", to_string(s.q_squarefree, "u")},
                       {"nonpositive_roots", s.nonpositive_roots},
                       {"compatible", s.compatible}});
  json j{{"status", to_string(v.status)}, {"reason", v.reason}, {"spectra", spectra}};
  if (v.witness) j["witness"] = *v.witness;
  if (v.noncommuting) j["noncommuting"] = {v.noncommuting->first, v.noncommuting->second};
  text << "type I: " << to_string(v.status) << " (" << v.reason << ")\n";
  for (const auto& s : v.spectra)
    text << "  derivation " << s.index << ": char poly " << to_string(s.char_poly, "t")
         << (s.even ? ", squarefree even part " + to_string(s.q_squarefree, "u") + ", roots in (-inf, 0]: " +
                          std::to_string(s.nonpositive_roots)
                    : ", odd part nonzero")
         << "\n";
  return j;
}

json kahler_json(const KahlerObstruction& k, std::ostringstream& text) {
  text << "Kähler: " << k.statement << "\n";
  if (!k.assumptions.empty()) text << "  assumptions: " << join(k.assumptions, "; ") << "\n";
  text << "  based on: " << join(k.certificates, "; ") << "\n";
  return {{"conclusion", to_string(k.conclusion)},
          {"statement", k.statement},
          {"assumptions", k.assumptions},
          {"certificates", k.certificates}};
}

json hull_json(const SplittableHull& h, const AbelianHullResult& ab, const std::optional<SplitForm>& split,
               std::ostringstream& text) {
  const Names& names = h.g.basis_names();
  const Names& nbar_names = h.nbar.basis_names();
  json imf = json::array();
  for (const auto& m : h.imf_basis) imf.push_back(mat(m));
  json brackets = json::array();
  for (std::size_t i = 0; i < h.nbar.dim(); ++i)
    for (std::size_t j = i + 1; j < h.nbar.dim(); ++j) {
      const Vec v = h.nbar.bracket_basis(i, j);
      if (!is_zero(v)) brackets.push_back({nbar_names[i], nbar_names[j], lincomb(v, nbar_names)});
    }
  json j{{"dim_im_f", h.imf_basis.size()},
         {"im_f_basis", imf},
         {"nilradical", subspace(h.nilradical, names)},
         {"cartan", subspace(h.cartan, names)},
         {"nbar_dim", h.nbar.dim()},
         {"nbar_brackets", brackets},
         {"nbar_abelian", ab.abelian},
         {"gbar_dim", h.gbar.dim()}};
  text << "dim Im f: " << h.imf_basis.size() << "\n";
  text << "Cartan subalgebra: " << bracketed(subspace_strings(h.cartan, names)) << "\n";
  text << "unipotent hull: " << (ab.abelian ? "abelian" : "not abelian") << "\n";
  if (ab.witness) {
    const auto [a, b] = *ab.witness;
    j["nbar_witness"] = {{"pair", {nbar_names[a], nbar_names[b]}}, {"bracket", lincomb(ab.witness_bracket, nbar_names)}};
    text << "  witness: [" << nbar_names[a] << ", " << nbar_names[b] << "] = " << lincomb(ab.witness_bracket, nbar_names)
         << "\n";
  }
  for (std::size_t i = 0; i < h.imf_basis.size(); ++i) {
    text << "  f(" << names[h.complement[i]] << "):\n" << matrix_text(h.imf_basis[i], "    ");
  }
  if (split) {
    json action = json::array();
    for (const auto& m : split->action) action.push_back(mat(m));
    j["split_form"] = {{"complement", subspace(split->complement, names)},
                       {"ideal", subspace(split->ideal, names)},
                       {"action", action},
                       {"verified", verify_split_form(h.g, *split)}};
    text << "split form: " << bracketed(subspace_strings(split->complement, names)) << " acting semisimply on "
         << bracketed(subspace_strings(split->ideal, names)) << "\n";
  } else {
    j["split_form"] = nullptr;
    text << "split form: none\n";
  }
  return j;
}

void cmd_validate(const InputDocument& doc, Output& out) {
  const ValidationReport r = validate(doc.algebra);
  out.result()["dim"] = doc.algebra.dim();
  out.result()["basis"] = doc.algebra.basis_names();
  if (!r.ok()) throw ValidationError(r.describe(doc.algebra));
  out.text() << "algebra: dimension " << doc.algebra.dim() << ", Lie algebra axioms hold\n";
  if (doc.hull_override) {
    validate_hull_data(*doc.hull_override, doc.options.finite_bound);
    out.result()["hull_override"] = "valid";
    out.text() << "hull_override: valid\n";
  }
  out.result()["valid"] = true;
}

void cmd_nilradical(const InputDocument& doc, Output& out) {
  const LieAlgebra& g = doc.algebra;
  require_valid(g);
  const Names& names = g.basis_names();
  std::vector<std::size_t> derived, lower;
  for (const auto& s : derived_series(g)) derived.push_back(s.dim());
  for (const auto& s : lower_central_series(g)) lower.push_back(s.dim());
  const bool solvable = is_solvable(g);
  const bool nilpotent = is_nilpotent(g);
  out.text() << "solvable: " << (solvable ? "yes" : "no") << "\nnilpotent: " << (nilpotent ? "yes" : "no") << "\n";
  out.text() << "derived series dimensions: " << sizes(derived) << "\n";
  out.text() << "lower central series dimensions: " << sizes(lower) << "\n";
  auto& r = out.result();
  r["solvable"] = solvable;
  r["nilpotent"] = nilpotent;
  r["derived_series_dims"] = derived;
  r["lower_central_series_dims"] = lower;
  const Subspace n = nilradical(g);
  r["nilradical"] = subspace(n, names);
  r["nilradical_dim"] = n.dim();
  out.text() << "nilradical (dim " << n.dim() << "): " << bracketed(subspace_strings(n, names)) << "\n";
}

void cmd_hull(const InputDocument& doc, Output& out) {
  require_valid(doc.algebra);
  const SplittableHull h = build_splittable_hull(doc.algebra);
  out.result() = hull_json(h, unipotent_hull_abelian(h), recognize_split_form(doc.algebra), out.text());
}

void cmd_cohomology(const InputDocument& doc, Output& out) {
  require_valid(doc.algebra);
  const CochainComplex cx = ce_complex(doc.algebra);
  const CohomologyRing ring(cx.model());
  out.result() = cohomology_json(ring, doc.algebra.basis_names(), out.text());
  std::vector<std::string> diffs;
  json d1 = json::object();
  for (std::size_t i = 0; i < doc.algebra.dim(); ++i) {
    const std::string& name = doc.algebra.basis_names()[i];
    const std::string dx = to_string(cx.differential(ExteriorForm::basis(doc.algebra.dim(), {i})), doc.algebra.basis_names());
    d1[name] = dx;
    out.text() << "d " << name << " = " << dx << "\n";
  }
  out.result()["differentials"] = d1;
}

void cmd_invariants(const InputDocument& doc, Output& out) {
  require_valid(doc.algebra);
  const HullData h = hull_data_for(doc);
  const InvariantComplex ic = invariant_subcomplex(h, doc.options.finite_bound);
  const Names& names = h.u.basis_names();
  out.result() = model_json(ic, names, out.text());
  out.result()["cohomology"] = cohomology_json(CohomologyRing(ic.model), names, out.text());
}

void cmd_formality(const InputDocument& doc, Output& out) {
  require_valid(doc.algebra);
  const HullData h = hull_data_for(doc);
  const InvariantComplex ic = invariant_subcomplex(h, doc.options.finite_bound);
  const FormalityVerdict v = formality_verdict(ic, doc.options.massey_depth);
  out.result() = formality_json(ic, v, h.u.basis_names(), out.text());
}

void cmd_lefschetz(const InputDocument& doc, Output& out) {
  require_valid(doc.algebra);
  if (!doc.omega) throw PreconditionError("lefschetz needs omega");
  const HullData h = hull_data_for(doc);
  const InvariantComplex ic = invariant_subcomplex(h, doc.options.finite_bound);
  const Names& names = h.u.basis_names();
  const SymplecticCheck s = verify_symplectic(ic, *doc.omega);
  out.result()["symplectic"] = symplectic_json(s, names, out.text());
  const LefschetzReport r = hard_lefschetz(ic, *doc.omega);
  out.result()["lefschetz"] = lefschetz_json(r, out.text());
  const PoincarePairing p = poincare_pairing(ic);
  out.result()["poincare_pairing_perfect"] = p.all_perfect();
  out.text() << "Poincaré pairing: " << (p.all_perfect() ? "perfect" : "not perfect") << "\n";
}

void cmd_analyze(const InputDocument& doc, Output& out) {
  const AnalysisReport r = analyze(doc.analysis_input());
  auto& j = out.result();
  auto& text = out.text();
  j["input"] = {{"document", render_document(doc)}, {"dim", doc.algebra.dim()}, {"basis", doc.algebra.basis_names()}};
  json stages = json::array();
  for (const auto& s : r.stages) {
    stages.push_back({{"name", s.name}, {"status", to_string(s.status)}, {"message", s.message}});
    text << "[" << to_string(s.status) << "] " << s.name << (s.message.empty() ? "" : ": " + s.message) << "\n";
  }
  j["stages"] = stages;
  const Names& names = doc.algebra.basis_names();
  if (const auto* st = r.stage("structure"); st && st->status == StageStatus::ok) {
    j["solvable"] = r.solvable;
    j["nilpotent"] = r.nilpotent;
    text << "solvable: " << (r.solvable ? "yes" : "no") << ", nilpotent: " << (r.nilpotent ? "yes" : "no") << "\n";
  }
  if (r.nilradical) {
    j["nilradical"] = {{"dim", r.nilradical->dim()}, {"basis", subspace(*r.nilradical, names)}};
    text << "nilradical (dim " << r.nilradical->dim() << "): " << bracketed(subspace_strings(*r.nilradical, names))
         << "\n";
  }
  if (r.hull) j["hull"] = hull_json(*r.hull, *r.hull_abelian, r.split, text);
  if (r.invariants) {
    const Names& u_names = r.hull_data->u.basis_names();
    j["invariant_model"] = model_json(*r.invariants, u_names, text);
    j["betti"] = r.betti;
    text << "betti: " << sizes(r.betti) << "\n";
    if (r.formality) j["formality"] = formality_json(*r.invariants, *r.formality, u_names, text);
    if (r.symplectic) j["symplectic"] = symplectic_json(*r.symplectic, u_names, text);
    if (r.lefschetz) j["lefschetz"] = lefschetz_json(*r.lefschetz, text);
  }
  if (r.type_one) j["type_one"] = type_one_json(*r.type_one, text);
  if (r.kahler) j["kahler"] = kahler_json(*r.kahler, text);
}

}  // namespace

CommandResult run(const std::string& command, const InputDocument& doc) {
  Output out(command);
  try {
    if (command == "validate") cmd_validate(doc, out);
    else if (command == "nilradical") cmd_nilradical(doc, out);
    else if (command == "hull") cmd_hull(doc, out);
    else if (command == "cohomology") cmd_cohomology(doc, out);
    else if (command == "invariants") cmd_invariants(doc, out);
    else if (command == "formality") cmd_formality(doc, out);
    else if (command == "lefschetz") cmd_lefschetz(doc, out);
    else if (command == "analyze") cmd_analyze(doc, out);
    else return out.finish(kExitUsage, "usage", "unknown command '" + command + "'");
  } catch (const ValidationError& e) {
    return out.finish(kExitValidation, "validation", e.what());
  } catch (const PreconditionError& e) {
    return out.finish(kExitPrecondition, "precondition", e.what());
  }
  return out.finish(kExitOk);
}

CommandResult parse_failure(const std::string& command, const std::string& message) {
  return Output(command).finish(kExitParse, "parse", message);
}

}  // namespace hullkit
