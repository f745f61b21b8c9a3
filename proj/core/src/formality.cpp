#include "hullkit/formality.hpp"

#include "hullkit/errors.hpp"

namespace hullkit {

std::optional<ZeroDifferentialCertificate> certify_formal_if_zero_differential(const InvariantComplex& ic) {
  if (!ic.model.has_zero_differential()) return std::nullopt;
  ZeroDifferentialCertificate cert;
  for (std::size_t k = 0; k <= ic.model.top_degree(); ++k) cert.model_dims.push_back(ic.model.dim(k));
  return cert;
}

namespace {

std::vector<Vec> coords_of(const std::vector<CohomologyClass>& classes) {
  std::vector<Vec> out;
  for (const auto& c : classes) out.push_back(c.coords);
  return out;
}

std::vector<CohomologyClass> indeterminacy_span(const CohomologyRing& ring, const CohomologyClass& a,
                                                const CohomologyClass& c, std::size_t deg_b) {
  std::vector<CohomologyClass> out;
  const std::size_t left = deg_b + c.degree - 1;
  const std::size_t right = a.degree + deg_b - 1;
  const std::size_t top = ring.top_degree();
  if (left <= top)
    for (std::size_t i = 0; i < ring.basis(left).size(); ++i) out.push_back(ring.cup(a, ring.basis_class(left, i)));
  if (right <= top)
    for (std::size_t i = 0; i < ring.basis(right).size(); ++i) out.push_back(ring.cup(ring.basis_class(right, i), c));
  return out;
}

}  // namespace

MasseyResult massey_triple(const CohomologyRing& ring, const CohomologyClass& a, const CohomologyClass& b,
                           const CohomologyClass& c) {
  MasseyResult result;
  MasseyWitness& w = result.witness;
  w.a = a;
  w.b = b;
  w.c = c;
  const std::size_t n = ring.model().ambient_dim;
  if (a.degree == 0 || b.degree == 0 || c.degree == 0) {
    result.reason = "Massey products need classes of positive degree";
    return result;
  }
  const std::size_t total = a.degree + b.degree + c.degree - 1;
  w.A = ring.representative(a);
  w.B = ring.representative(b);
  w.C = ring.representative(c);
  const ExteriorForm ab = wedge(w.A, w.B);
  const ExteriorForm bc = wedge(w.B, w.C);
  auto x = ring.primitive(ab);
  if (!x) {
    result.reason = "a·b is nonzero in cohomology";
    return result;
  }
  auto y = ring.primitive(bc);
  if (!y) {
    result.reason = "b·c is nonzero in cohomology";
    return result;
  }
  w.x = *x;
  w.y = *y;
  const Rational sign = (a.degree % 2 == 0) ? -1 : 1;  // (-1)^{|a|+1}
  w.r = wedge(w.A, w.y) + sign * wedge(w.x, w.C);
  if (total > ring.top_degree()) {
    w.r = ExteriorForm(n, total);
    w.r_class = {total, {}};
    result.status = MasseyStatus::vanishes;
    return result;
  }
  w.r_class = ring.class_of(w.r);
  w.indeterminacy = indeterminacy_span(ring, a, c, b.degree);
  const std::size_t h = ring.basis(total).size();
  const auto span = span_basis(coords_of(w.indeterminacy), h);
  w.indeterminacy_rank = span.size();
  result.status = in_span(span, w.r_class.coords, h) ? MasseyStatus::vanishes : MasseyStatus::nonvanishing;
  return result;
}

bool verify_massey_witness(const InvariantComplex& ic, const MasseyWitness& w) {
  const CochainComplex& cx = ic.ambient;
  // Closedness and primitives through the ambient differential.
  for (const auto* f : {&w.A, &w.B, &w.C})
    if (!cx.differential(*f).is_zero() || !ic.model.coords(*f)) return false;
  if (cx.differential(w.x) != wedge(w.A, w.B)) return false;
  if (cx.differential(w.y) != wedge(w.B, w.C)) return false;
  if (!ic.model.coords(w.x) || !ic.model.coords(w.y)) return false;
  const Rational sign = (w.a.degree % 2 == 0) ? -1 : 1;
  const ExteriorForm r = wedge(w.A, w.y) + sign * wedge(w.x, w.C);
  if (r != w.r || !cx.differential(r).is_zero()) return false;

  // Fresh cohomology computation in the top degree of the product.
  const std::size_t k = r.degree();
  if (k > ic.model.top_degree()) return false;
  auto r_coords = ic.model.coords(r);
  if (!r_coords) return false;
  // r is nonzero modulo exact forms plus the indeterminacy representatives.
  const CohomologyRing ring(ic.model);
  std::vector<Vec> blockers;
  for (const auto& cls : indeterminacy_span(ring, w.a, w.c, w.b.degree)) {
    auto c = ic.model.coords(ring.representative(cls));
    if (!c) return false;
    blockers.push_back(*c);
  }
  const std::size_t m = ic.model.dim(k);
  if (k > 0)
    for (const auto& v : column_space_basis(ic.model.diff[k - 1])) blockers.push_back(v);
  return !in_span(span_basis(blockers, m), *r_coords, m);
}

FormalityVerdict formality_verdict(const InvariantComplex& ic, std::size_t depth) {
  FormalityVerdict verdict;
  const std::size_t n = ic.model.top_degree();
  verdict.depth = depth == 0 ? n : depth;
  if ((verdict.certificate = certify_formal_if_zero_differential(ic))) {
    verdict.status = FormalityStatus::certified_formal;
    return verdict;
  }
  const CohomologyRing ring(ic.model);
  for (std::size_t total = 3; total <= verdict.depth; ++total)
    for (std::size_t p = 1; p + 2 <= total; ++p)
      for (std::size_t q = 1; p + q + 1 <= total; ++q) {
        const std::size_t r = total - p - q;
        if (p > n || q > n || r > n) continue;
        for (std::size_t i = 0; i < ring.basis(p).size(); ++i)
          for (std::size_t j = 0; j < ring.basis(q).size(); ++j)
            for (std::size_t l = 0; l < ring.basis(r).size(); ++l) {
              ++verdict.triples_scanned;
              auto m = massey_triple(ring, ring.basis_class(p, i), ring.basis_class(q, j), ring.basis_class(r, l));
              if (m.status != MasseyStatus::nonvanishing) continue;
              verdict.status = FormalityStatus::obstructed_nonformal;
              verdict.witness = std::move(m.witness);
              return verdict;
            }
      }
  verdict.status = FormalityStatus::undecided;
  return verdict;
}

bool verify_formality_verdict(const InvariantComplex& ic, const FormalityVerdict& verdict) {
  switch (verdict.status) {
    case FormalityStatus::certified_formal: {
      if (!verdict.certificate) return false;
      // Every invariant basis form is closed under the ambient differential.
      for (std::size_t k = 0; k <= ic.model.top_degree(); ++k)
        for (std::size_t i = 0; i < ic.model.dim(k); ++i)
          if (!ic.ambient.differential(ic.model.form(k, unit_vec(ic.model.dim(k), i))).is_zero()) return false;
      return true;
    }
    case FormalityStatus::obstructed_nonformal:
      return verdict.witness && verify_massey_witness(ic, *verdict.witness);
    case FormalityStatus::undecided:
      return !verdict.certificate && !verdict.witness;
  }
  return false;
}

std::string to_string(FormalityStatus s) {
  switch (s) {
    case FormalityStatus::certified_formal: return "certified_formal";
    case FormalityStatus::obstructed_nonformal: return "obstructed_nonformal";
    case FormalityStatus::undecided: return "undecided";
  }
  return {};
}

std::string to_string(MasseyStatus s) {
  switch (s) {
    case MasseyStatus::vanishes: return "vanishes";
    case MasseyStatus::nonvanishing: return "nonvanishing";
    case MasseyStatus::undefined: return "undefined";
  }
  return {};
}

}  // namespace hullkit
