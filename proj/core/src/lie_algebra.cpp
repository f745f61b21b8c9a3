#include "hullkit/lie_algebra.hpp"

#include <sstream>

#include "hullkit/errors.hpp"

namespace hullkit {

LieAlgebra::LieAlgebra(std::vector<std::string> basis_names) : names_(std::move(basis_names)) {
  if (names_.size() > kHardDimensionCap)
    throw PreconditionError("dimension " + std::to_string(names_.size()) +
                            " exceeds the hard cap of " + std::to_string(kHardDimensionCap));
  c_.assign(dim() * dim() * dim(), Rational(0));
}

LieAlgebra LieAlgebra::abelian(std::size_t dim) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < dim; ++i) names.push_back("e" + std::to_string(i + 1));
  return LieAlgebra(std::move(names));
}

std::optional<std::size_t> LieAlgebra::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

void LieAlgebra::set_bracket(std::size_t i, std::size_t j, const Vec& v) {
  if (i >= dim() || j >= dim() || v.size() != dim())
    throw std::invalid_argument("set_bracket: index or length out of range");
  for (std::size_t k = 0; k < dim(); ++k) {
    c(i, j, k) = v[k];
    c(j, i, k) = -v[k];
  }
}

Vec LieAlgebra::bracket_basis(std::size_t i, std::size_t j) const {
  Vec v(dim());
  for (std::size_t k = 0; k < dim(); ++k) v[k] = c(i, j, k);
  return v;
}

Vec LieAlgebra::bracket(const Vec& x, const Vec& y) const {
  if (x.size() != dim() || y.size() != dim()) throw std::invalid_argument("bracket: dimension mismatch");
  Vec out = zero_vec(dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < dim(); ++j) {
      if (sgn(y[j]) == 0) continue;
      const Rational w = x[i] * y[j];
      for (std::size_t k = 0; k < dim(); ++k)
        if (sgn(c(i, j, k)) != 0) out[k] += w * c(i, j, k);
    }
  }
  return out;
}

bool LieAlgebra::is_abelian() const {
  for (const auto& x : c_)
    if (sgn(x) != 0) return false;
  return true;
}

Subspace::Subspace(std::size_t ambient_dim, const std::vector<Vec>& spanning)
    : ambient_(ambient_dim), basis_(span_basis(spanning, ambient_dim)) {}

Subspace Subspace::whole(std::size_t dim) {
  std::vector<Vec> e;
  for (std::size_t i = 0; i < dim; ++i) e.push_back(unit_vec(dim, i));
  return Subspace(dim, e);
}

bool Subspace::contains(const Vec& v) const { return in_span(basis_, v, ambient_); }

bool Subspace::contains(const Subspace& other) const {
  for (const auto& v : other.basis())
    if (!contains(v)) return false;
  return true;
}

std::vector<std::size_t> Subspace::pivots() const {
  std::vector<std::size_t> out;
  for (const auto& v : basis_)
    for (std::size_t i = 0; i < v.size(); ++i)
      if (sgn(v[i]) != 0) {
        out.push_back(i);
        break;
      }
  return out;
}

std::vector<std::size_t> Subspace::complement_directions() const {
  std::vector<bool> pivot(ambient_, false);
  for (auto p : pivots()) pivot[p] = true;
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < ambient_; ++i)
    if (!pivot[i]) out.push_back(i);
  return out;
}

std::string ValidationReport::describe(const LieAlgebra& g) const {
  std::ostringstream os;
  auto name = [&](std::size_t i) { return i < g.dim() ? g.basis_names()[i] : std::to_string(i); };
  switch (kind) {
    case Kind::ok:
      return "ok";
    case Kind::antisymmetry:
      os << "antisymmetry violated at (" << name(triple[0]) << ", " << name(triple[1]) << ", "
         << name(triple[2]) << "): c[i][j][k] + c[j][i][k] = " << to_string(residual[triple[2]]);
      return os.str();
    case Kind::jacobi:
      os << "Jacobi identity violated at (" << name(triple[0]) << ", " << name(triple[1]) << ", "
         << name(triple[2]) << "), residual (";
      for (std::size_t k = 0; k < residual.size(); ++k) os << (k ? ", " : "") << to_string(residual[k]);
      os << ")";
      return os.str();
  }
  return {};
}

ValidationReport validate(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Vec residual(n);
      bool bad = false;
      for (std::size_t k = 0; k < n; ++k) {
        residual[k] = g.c(i, j, k) + g.c(j, i, k);
        if (sgn(residual[k]) != 0) bad = true;
      }
      if (!bad) continue;
      for (std::size_t k = 0; k < n; ++k)
        if (sgn(residual[k]) != 0)
          return {ValidationReport::Kind::antisymmetry, {i, j, k}, residual};
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        const Vec ei = unit_vec(n, i), ej = unit_vec(n, j), ek = unit_vec(n, k);
        Vec r = g.bracket(ei, g.bracket_basis(j, k)) + g.bracket(ej, g.bracket_basis(k, i)) +
                g.bracket(ek, g.bracket_basis(i, j));
        if (!is_zero(r)) return {ValidationReport::Kind::jacobi, {i, j, k}, r};
      }
  return {};
}

Mat ad_matrix(const LieAlgebra& g, const Vec& x) {
  if (x.size() != g.dim()) throw std::invalid_argument("ad_matrix: dimension mismatch");
  Mat m(g.dim(), g.dim());
  for (std::size_t j = 0; j < g.dim(); ++j) m.set_column(j, g.bracket(x, unit_vec(g.dim(), j)));
  return m;
}

Subspace bracket_span(const LieAlgebra& g, const Subspace& a, const Subspace& b) {
  std::vector<Vec> out;
  for (const auto& x : a.basis())
    for (const auto& y : b.basis()) {
      Vec v = g.bracket(x, y);
      if (!is_zero(v)) out.push_back(std::move(v));
    }
  return Subspace(g.dim(), out);
}

Subspace derived_subalgebra(const LieAlgebra& g) {
  const auto all = Subspace::whole(g.dim());
  return bracket_span(g, all, all);
}

std::vector<Subspace> derived_series(const LieAlgebra& g) {
  std::vector<Subspace> series{Subspace::whole(g.dim())};
  while (true) {
    Subspace next = bracket_span(g, series.back(), series.back());
    if (next.dim() == series.back().dim()) break;
    series.push_back(std::move(next));
  }
  return series;
}

std::vector<Subspace> lower_central_series(const LieAlgebra& g) {
  const auto all = Subspace::whole(g.dim());
  std::vector<Subspace> series{all};
  while (true) {
    Subspace next = bracket_span(g, all, series.back());
    if (next.dim() == series.back().dim()) break;
    series.push_back(std::move(next));
  }
  return series;
}

bool is_solvable(const LieAlgebra& g) { return derived_series(g).back().dim() == 0; }
bool is_nilpotent(const LieAlgebra& g) { return lower_central_series(g).back().dim() == 0; }

bool is_subalgebra(const LieAlgebra& g, const Subspace& s) {
  return s.contains(bracket_span(g, s, s));
}

bool is_ideal(const LieAlgebra& g, const Subspace& s) {
  return s.contains(bracket_span(g, Subspace::whole(g.dim()), s));
}

Subspace center(const LieAlgebra& g) {
  Mat stacked;
  for (std::size_t i = 0; i < g.dim(); ++i) stacked = vstack(stacked, ad_matrix(g, unit_vec(g.dim(), i)));
  if (stacked.rows() == 0) return Subspace::whole(g.dim());
  return Subspace(g.dim(), kernel_basis(stacked));
}

Subspace nilradical(const LieAlgebra& g) {
  if (!is_solvable(g)) throw PreconditionError("nilradical: the algebra is not solvable");
  const std::size_t n = g.dim();
  if (n == 0) return Subspace::zero(0);
  std::vector<Mat> ads;
  for (std::size_t i = 0; i < n; ++i) ads.push_back(ad_matrix(g, unit_vec(n, i)));

  // Associative envelope: close span{ad_i} under left multiplication by the ad_i.
  std::vector<Mat> envelope;
  std::vector<Vec> flat;
  auto try_add = [&](const Mat& m) {
    if (m.is_zero()) return false;
    Vec v = flatten(m);
    if (in_span(flat, v, n * n)) return false;
    flat.push_back(std::move(v));
    envelope.push_back(m);
    return true;
  };
  for (const auto& a : ads) try_add(a);
  for (std::size_t next = 0; next < envelope.size(); ++next)
    for (const auto& a : ads) try_add(a * envelope[next]);

  // x is in the nilradical iff tr(ad_x * b) = 0 for every b in the envelope.
  Mat conditions(envelope.size(), n);
  for (std::size_t b = 0; b < envelope.size(); ++b)
    for (std::size_t i = 0; i < n; ++i) conditions(b, i) = (ads[i] * envelope[b]).trace();
  if (conditions.rows() == 0) return Subspace::whole(n);
  return Subspace(n, kernel_basis(conditions));
}

LieAlgebra restrict_to(const LieAlgebra& g, const std::vector<Vec>& basis,
                       std::vector<std::string> names) {
  if (names.empty())
    for (std::size_t i = 0; i < basis.size(); ++i) names.push_back("b" + std::to_string(i + 1));
  if (names.size() != basis.size()) throw std::invalid_argument("restrict_to: names/basis mismatch");
  LieAlgebra h(std::move(names));
  if (basis.empty()) return h;
  const Mat coords = Mat::from_columns(g.dim(), basis);
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      auto x = solve(coords, g.bracket(basis[i], basis[j]));
      if (!x) throw PreconditionError("restrict_to: span is not closed under the bracket");
      h.set_bracket(i, j, *x);
    }
  return h;
}

bool is_derivation(const LieAlgebra& g, const Mat& d) {
  const std::size_t n = g.dim();
  if (d.rows() != n || d.cols() != n) return false;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vec lhs = d.apply(g.bracket_basis(i, j));
      const Vec rhs = g.bracket(d.column(i), unit_vec(n, j)) + g.bracket(unit_vec(n, i), d.column(j));
      if (lhs != rhs) return false;
    }
  return true;
}

bool preserves_bracket(const LieAlgebra& g, const Mat& a) {
  const std::size_t n = g.dim();
  if (a.rows() != n || a.cols() != n) return false;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (a.apply(g.bracket_basis(i, j)) != g.bracket(a.column(i), a.column(j))) return false;
  return true;
}

}  // namespace hullkit
