#include "hullkit/hull.hpp"

#include <bit>
#include <random>
#include <set>

#include "hullkit/errors.hpp"

namespace hullkit {

JordanPair jordan_chevalley(const Mat& m) {
  if (!m.is_square()) throw std::invalid_argument("jordan_chevalley: matrix must be square");
  const std::size_t n = m.rows();
  if (n == 0) return {};
  const Poly q = squarefree_part(char_poly(m));
  // u = (q')^{-1} mod q; q is squarefree so gcd(q, q') = 1.
  const auto bezout = extended_gcd(q.derivative(), q);
  if (bezout.g != Poly::constant(1)) throw InternalError("jordan_chevalley: q and q' not coprime");
  const Poly& u = bezout.s;

  const std::size_t rounds = static_cast<std::size_t>(std::bit_width(n - 1)) + 1;
  Mat s = m;
  for (std::size_t r = 0; r <= rounds; ++r) {
    Mat qs = eval_poly_at_matrix(q, s);
    if (qs.is_zero()) break;
    s -= qs * eval_poly_at_matrix(u, s);
  }
  JordanPair out{s, m - s};
  if (!eval_poly_at_matrix(q, out.semisimple).is_zero())
    throw InternalError("jordan_chevalley: Newton iteration did not converge");
  if (!commutator(out.semisimple, out.nilpotent).is_zero())
    throw InternalError("jordan_chevalley: parts do not commute");
  if (!is_nilpotent(out.nilpotent)) throw InternalError("jordan_chevalley: nilpotent part is not nilpotent");
  return out;
}

bool is_semisimple(const Mat& m) {
  if (m.rows() == 0) return true;
  return eval_poly_at_matrix(squarefree_part(char_poly(m)), m).is_zero();
}

Mat semisimple_derivation(const LieAlgebra& g, const Vec& x) {
  Mat s = jordan_chevalley(ad_matrix(g, x)).semisimple;
  if (!is_derivation(g, s))
    throw InternalError("semisimple part of ad_x is not a derivation (arithmetic bug)");
  return s;
}

namespace {

// Multiplicity of 0 as a root of the characteristic polynomial.
std::size_t zero_multiplicity(const Poly& p) {
  std::size_t k = 0;
  while (k < p.coeffs().size() && sgn(p.coeffs()[k]) == 0) ++k;
  return k;
}

Mat from_coords(const std::vector<Mat>& basis, const Vec& coords, std::size_t rows, std::size_t cols) {
  Mat out(rows, cols);
  for (std::size_t k = 0; k < basis.size(); ++k)
    if (sgn(coords[k]) != 0) out += coords[k] * basis[k];
  return out;
}

}  // namespace

Subspace cartan_subalgebra(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  if (n == 0) return Subspace::zero(0);
  std::vector<Vec> candidates;
  for (std::size_t i = 0; i < n; ++i) candidates.push_back(unit_vec(n, i));
  std::mt19937 rng(0x5eed);
  std::uniform_int_distribution<int> coeff(-9, 9);
  for (int t = 0; t < 16; ++t) {
    Vec v(n);
    for (auto& x : v) x = coeff(rng);
    candidates.push_back(std::move(v));
  }
  const Vec* best = nullptr;
  std::size_t best_nullity = n + 1;
  for (const auto& v : candidates) {
    std::size_t k = zero_multiplicity(char_poly(ad_matrix(g, v)));
    if (k < best_nullity) {
      best_nullity = k;
      best = &v;
    }
  }
  Subspace h(n, kernel_basis(power(ad_matrix(g, *best), n)));
  std::vector<std::string> names(h.dim(), "h");
  if (!is_subalgebra(g, h) || !is_nilpotent(restrict_to(g, h.basis(), names)))
    throw InternalError("cartan_subalgebra: generalized null space is not a nilpotent subalgebra");
  return h;
}

Mat shadow_via_cartan(const SplittableHull& hull, const Vec& x) {
  const std::size_t n = hull.g.dim();
  const Mat decomposition =
      hstack(Mat::from_columns(n, hull.cartan.basis()), Mat::from_columns(n, hull.nilradical.basis()));
  auto z = solve(decomposition, x);
  if (!z) throw InternalError("shadow_via_cartan: Cartan subalgebra and nilradical do not span g");
  return from_coords(hull.cartan_semisimple, *z, n, n);
}

namespace {

Mat complement_decomposition(const SplittableHull& hull) {
  const std::size_t n = hull.g.dim();
  std::vector<Vec> cols;
  for (auto c : hull.complement) cols.push_back(unit_vec(n, c));
  for (const auto& v : hull.nilradical.basis()) cols.push_back(v);
  return Mat::from_columns(n, cols);
}

Vec imf_coordinates(const SplittableHull& hull, const Vec& x) {
  auto z = solve(complement_decomposition(hull), x);
  if (!z) throw InternalError("complement and nilradical do not span g");
  return Vec(z->begin(), z->begin() + static_cast<std::ptrdiff_t>(hull.complement.size()));
}

}  // namespace

Mat shadow_via_complement(const SplittableHull& hull, const Vec& x) {
  const std::size_t n = hull.g.dim();
  return from_coords(hull.imf_basis, imf_coordinates(hull, x), n, n);
}

SplittableHull build_splittable_hull(const LieAlgebra& g) {
  if (!is_solvable(g)) throw PreconditionError("splittable hull requires a solvable Lie algebra");
  const std::size_t n = g.dim();
  SplittableHull hull;
  hull.g = g;
  hull.nilradical = nilradical(g);
  hull.cartan = cartan_subalgebra(g);
  for (const auto& h : hull.cartan.basis()) hull.cartan_semisimple.push_back(semisimple_derivation(g, h));
  hull.complement = hull.nilradical.complement_directions();
  for (auto c : hull.complement) hull.imf_basis.push_back(shadow_via_cartan(hull, unit_vec(n, c)));
  for (std::size_t i = 0; i < n; ++i) hull.shadow.push_back(shadow_via_complement(hull, unit_vec(n, i)));

  const std::size_t r = hull.imf_basis.size();
  std::vector<std::string> names;
  for (auto c : hull.complement) names.push_back("d_" + g.basis_names()[c]);
  for (const auto& name : g.basis_names()) names.push_back(name);
  hull.gbar = LieAlgebra(std::move(names));
  auto lift = [&](const Vec& v) {
    Vec out = zero_vec(r + n);
    for (std::size_t k = 0; k < n; ++k) out[r + k] = v[k];
    return out;
  };
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t j = 0; j < n; ++j) hull.gbar.set_bracket(a, r + j, lift(hull.imf_basis[a].column(j)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) hull.gbar.set_bracket(r + i, r + j, lift(g.bracket_basis(i, j)));

  // [e_i - f(e_i), e_j - f(e_j)] = [e_i, e_j] - f(e_i) e_j + f(e_j) e_i, an element of the nilradical,
  // whose nbar coordinates coincide with its g coordinates.
  hull.nbar = LieAlgebra(g.basis_names());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vec v = g.bracket_basis(i, j) - hull.shadow[i].column(j) + hull.shadow[j].column(i);
      if (!hull.nilradical.contains(v)) throw InternalError("nilshadow bracket leaves the nilradical");
      hull.nbar.set_bracket(i, j, v);
    }

  hull.embed = Mat(r + n, n);
  hull.nbar_inclusion = Mat(r + n, n);
  for (std::size_t j = 0; j < n; ++j) {
    hull.embed(r + j, j) = 1;
    Vec coords = imf_coordinates(hull, unit_vec(n, j));
    for (std::size_t a = 0; a < r; ++a) hull.nbar_inclusion(a, j) = -coords[a];
    hull.nbar_inclusion(r + j, j) = 1;
  }

  if (auto failure = check_hull_invariants(hull)) throw InternalError("splittable hull: " + *failure);
  return hull;
}

std::optional<std::string> check_hull_invariants(const SplittableHull& hull) {
  const LieAlgebra& g = hull.g;
  const std::size_t n = g.dim();
  const std::size_t r = hull.imf_basis.size();
  if (r != n - hull.nilradical.dim()) return "dim Im f != dim g - dim nilradical";
  if (rank(hstack(Mat::from_columns(n, hull.cartan.basis()), Mat::from_columns(n, hull.nilradical.basis()))) != n)
    return "Cartan subalgebra + nilradical != g";
  for (std::size_t a = 0; a < r; ++a) {
    if (!is_derivation(g, hull.imf_basis[a])) return "Im f element is not a derivation";
    if (!is_semisimple(hull.imf_basis[a])) return "Im f element is not semisimple";
    for (std::size_t b = a + 1; b < r; ++b)
      if (!commutator(hull.imf_basis[a], hull.imf_basis[b]).is_zero()) return "Im f is not abelian";
  }
  if (!validate(hull.gbar).ok()) return "gbar fails the Lie algebra axioms";
  if (!validate(hull.nbar).ok()) return "nbar fails the Lie algebra axioms";
  if (!is_nilpotent(hull.nbar)) return "nbar is not nilpotent";

  std::vector<Vec> incl;
  for (std::size_t j = 0; j < n; ++j) incl.push_back(hull.nbar_inclusion.column(j));
  const Subspace nbar_in_gbar(r + n, incl);
  if (nbar_in_gbar.dim() != n) return "nbar inclusion is not injective";
  if (!is_ideal(hull.gbar, nbar_in_gbar)) return "nbar is not an ideal of gbar";
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (hull.nbar_inclusion.apply(hull.nbar.bracket_basis(i, j)) != hull.gbar.bracket(incl[i], incl[j]))
        return "nbar inclusion is not a Lie homomorphism";

  std::vector<Vec> nil_in_gbar;
  for (const auto& v : hull.nilradical.basis()) nil_in_gbar.push_back(hull.embed.apply(v));
  if (!Subspace(r + n, nil_in_gbar).contains(derived_subalgebra(hull.gbar)))
    return "[gbar, gbar] is not inside the nilradical";

  std::vector<Vec> split = incl;
  for (std::size_t a = 0; a < r; ++a) split.push_back(unit_vec(r + n, a));
  if (Subspace(r + n, split).dim() != r + n) return "gbar != Im f ⋉ nbar";

  if (rank(hull.embed) != n) return "embedding is not injective";
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (hull.embed.apply(g.bracket_basis(i, j)) !=
          hull.gbar.bracket(hull.embed.column(i), hull.embed.column(j)))
        return "embedding is not a Lie homomorphism";
  return std::nullopt;
}

std::optional<std::string> check_shadow_additivity(const SplittableHull& hull) {
  const LieAlgebra& g = hull.g;
  const std::size_t n = g.dim();
  const auto& hb = hull.cartan.basis();
  for (std::size_t a = 0; a < hb.size(); ++a)
    for (std::size_t b = a + 1; b < hb.size(); ++b)
      if (semisimple_derivation(g, hb[a] + hb[b]) != hull.cartan_semisimple[a] + hull.cartan_semisimple[b])
        return "(ad h)_s is not additive on Cartan basis pair (" + std::to_string(a) + ", " +
               std::to_string(b) + ")";
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      const Vec x = unit_vec(n, i) + unit_vec(n, j);
      const std::string pair = " on (" + g.basis_names()[i] + ", " + g.basis_names()[j] + ")";
      const Mat f = shadow_via_complement(hull, x);
      if (f != hull.shadow[i] + hull.shadow[j]) return "f is not additive" + pair;
      if (f != shadow_via_cartan(hull, x)) return "Cartan and complement routes disagree" + pair;
      if (!is_derivation(g, f)) return "f(x) is not a derivation" + pair;
      if (!is_nilpotent(ad_matrix(g, x) - f)) return "ad_x - f(x) is not nilpotent" + pair;
    }
  return std::nullopt;
}

AbelianHullResult unipotent_hull_abelian(const SplittableHull& hull) {
  const LieAlgebra& u = hull.nbar;
  for (std::size_t i = 0; i < u.dim(); ++i)
    for (std::size_t j = i + 1; j < u.dim(); ++j) {
      Vec v = u.bracket_basis(i, j);
      if (!is_zero(v)) return {false, std::make_pair(i, j), std::move(v)};
    }
  return {true, std::nullopt, {}};
}

AbelianHullResult unipotent_hull_abelian(const LieAlgebra& g) {
  return unipotent_hull_abelian(build_splittable_hull(g));
}

namespace {

Subspace intersect(const Subspace& a, const Subspace& b) {
  const std::size_t n = a.ambient_dim();
  if (a.dim() == 0 || b.dim() == 0) return Subspace::zero(n);
  const Mat A = Mat::from_columns(n, a.basis());
  const Mat AB = hstack(A, Mat::from_columns(n, b.basis()));
  std::vector<Vec> out;
  for (const auto& z : kernel_basis(AB)) {
    Vec alpha(z.begin(), z.begin() + static_cast<std::ptrdiff_t>(a.dim()));
    out.push_back(A.apply(alpha));
  }
  return Subspace(n, out);
}

// Matrix of ad_x restricted to an invariant subspace, in that subspace's basis.
std::optional<Mat> restricted_action(const LieAlgebra& g, const Vec& x, const Subspace& s) {
  const Mat coords = Mat::from_columns(g.dim(), s.basis());
  Mat out(s.dim(), s.dim());
  for (std::size_t j = 0; j < s.dim(); ++j) {
    auto c = solve(coords, g.bracket(x, s.basis()[j]));
    if (!c) return std::nullopt;
    out.set_column(j, *c);
  }
  return out;
}

}  // namespace

std::optional<SplitForm> recognize_split_form(const LieAlgebra& g) {
  const SplittableHull hull = build_splittable_hull(g);
  if (!unipotent_hull_abelian(hull).abelian) return std::nullopt;
  const std::size_t n = g.dim();
  // The zero-weight part of the nilradical inside the Cartan subalgebra; any
  // complement of it in the Cartan subalgebra is an abelian complement of the nilradical.
  const Subspace v0 = intersect(hull.cartan, hull.nilradical);
  std::vector<Vec> chosen = v0.basis();
  std::vector<Vec> a;
  for (const auto& h : hull.cartan.basis()) {
    if (in_span(chosen, h, n)) continue;
    chosen.push_back(h);
    a.push_back(h);
  }
  SplitForm split{Subspace(n, a), hull.nilradical, {}};
  for (const auto& x : split.complement.basis()) {
    auto m = restricted_action(g, x, split.ideal);
    if (!m) throw InternalError("recognize_split_form: nilradical is not ad-invariant");
    split.action.push_back(std::move(*m));
  }
  if (!verify_split_form(g, split)) throw InternalError("recognize_split_form: decomposition failed verification");
  return split;
}

bool verify_split_form(const LieAlgebra& g, const SplitForm& split) {
  const std::size_t n = g.dim();
  if (split.complement.dim() + split.ideal.dim() != n) return false;
  std::vector<Vec> both = split.complement.basis();
  both.insert(both.end(), split.ideal.basis().begin(), split.ideal.basis().end());
  if (Subspace(n, both).dim() != n) return false;
  for (const auto& x : split.complement.basis())
    for (const auto& y : split.complement.basis())
      if (!is_zero(g.bracket(x, y))) return false;
  for (const auto& x : split.ideal.basis())
    for (const auto& y : split.ideal.basis())
      if (!is_zero(g.bracket(x, y))) return false;
  if (!is_ideal(g, split.ideal)) return false;
  if (split.action.size() != split.complement.dim()) return false;
  for (std::size_t i = 0; i < split.action.size(); ++i) {
    auto m = restricted_action(g, split.complement.basis()[i], split.ideal);
    if (!m || *m != split.action[i] || !is_semisimple(*m)) return false;
    for (std::size_t j = i + 1; j < split.action.size(); ++j)
      if (!commutator(split.action[i], split.action[j]).is_zero()) return false;
  }
  return true;
}

std::vector<Mat> enumerate_group(const std::vector<Mat>& generators, std::size_t dim, std::size_t bound) {
  std::vector<Mat> elements{Mat::identity(dim)};
  std::set<Vec> seen{flatten(elements[0])};
  for (std::size_t next = 0; next < elements.size(); ++next)
    for (const auto& s : generators) {
      Mat m = s * elements[next];
      if (!seen.insert(flatten(m)).second) continue;
      elements.push_back(std::move(m));
      if (elements.size() > bound)
        throw PreconditionError("finite group enumeration exceeded the bound of " + std::to_string(bound) +
                                " elements");
    }
  return elements;
}

void validate_hull_data(const HullData& h, std::size_t finite_bound) {
  const std::size_t n = h.u.dim();
  if (auto report = validate(h.u); !report.ok()) throw ValidationError("hull algebra: " + report.describe(h.u));
  if (!is_nilpotent(h.u)) throw ValidationError("hull algebra u is not nilpotent");
  for (std::size_t a = 0; a < h.torus_derivations.size(); ++a) {
    const Mat& d = h.torus_derivations[a];
    const std::string which = "torus derivation " + std::to_string(a + 1);
    if (d.rows() != n || d.cols() != n) throw ValidationError(which + " has the wrong shape");
    if (!is_derivation(h.u, d)) throw ValidationError(which + " is not a derivation of u");
    if (!is_semisimple(d)) throw ValidationError(which + " is not semisimple");
    for (std::size_t b = a + 1; b < h.torus_derivations.size(); ++b)
      if (!commutator(d, h.torus_derivations[b]).is_zero())
        throw ValidationError("torus derivations " + std::to_string(a + 1) + " and " + std::to_string(b + 1) +
                              " do not commute");
  }
  for (std::size_t a = 0; a < h.finite_generators.size(); ++a) {
    const Mat& s = h.finite_generators[a];
    const std::string which = "finite generator " + std::to_string(a + 1);
    if (s.rows() != n || s.cols() != n) throw ValidationError(which + " has the wrong shape");
    if (!inverse(s)) throw ValidationError(which + " is not invertible");
    if (!preserves_bracket(h.u, s)) throw ValidationError(which + " is not an automorphism of u");
  }
  enumerate_group(h.finite_generators, n, finite_bound);
}

HullData hull_action_data(const SplittableHull& hull) {
  HullData h{hull.nbar, hull.imf_basis, {}};
  validate_hull_data(h);
  return h;
}

HullData hull_action_data(const LieAlgebra& g) { return hull_action_data(build_splittable_hull(g)); }

}  // namespace hullkit
