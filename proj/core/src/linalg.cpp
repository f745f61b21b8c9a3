#include "hullkit/linalg.hpp"

#include "hullkit/errors.hpp"

namespace hullkit {

namespace {

using IntRow = std::vector<mpz_class>;

// Clears denominators, then divides out the content.
IntRow integer_row(const Mat& m, std::size_t r) {
  IntRow out(m.cols());
  mpz_class l = 1;
  for (std::size_t c = 0; c < m.cols(); ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).get_den_mpz_t());
  for (std::size_t c = 0; c < m.cols(); ++c) out[c] = m(r, c).get_num() * (l / m(r, c).get_den());
  return out;
}

void remove_content(IntRow& row) {
  mpz_class g = 0;
  for (const auto& x : row)
    if (x != 0) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
      if (g == 1) return;
    }
  if (g > 1)
    for (auto& x : row)
      if (x != 0) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

}  // namespace

Echelon row_echelon(const Mat& m) {
  std::vector<IntRow> a;
  a.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) a.push_back(integer_row(m, r));
  const std::size_t cols = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < a.size(); ++col) {
    // Smallest pivot keeps intermediate entries short.
    std::size_t p = a.size();
    for (std::size_t r = row; r < a.size(); ++r)
      if (a[r][col] != 0 && (p == a.size() || mpz_cmpabs(a[r][col].get_mpz_t(), a[p][col].get_mpz_t()) < 0)) p = r;
    if (p == a.size()) continue;
    std::swap(a[p], a[row]);
    const IntRow& piv = a[row];
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == row || a[r][col] == 0) continue;
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), piv[col].get_mpz_t(), a[r][col].get_mpz_t());
      const mpz_class s = piv[col] / g, f = a[r][col] / g;
      for (std::size_t c = 0; c < cols; ++c) {
        if (s != 1) a[r][c] *= s;
        if (piv[c] != 0) a[r][c] -= f * piv[c];
      }
      remove_content(a[r]);
    }
    pivots.push_back(col);
    ++row;
  }
  Mat reduced(m.rows(), cols);
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    const mpz_class& lead = a[r][pivots[r]];
    for (std::size_t c = 0; c < cols; ++c)
      if (a[r][c] != 0) {
        reduced(r, c) = Rational(a[r][c], lead);
        reduced(r, c).canonicalize();
      }
  }
  return {std::move(reduced), std::move(pivots)};
}

std::size_t rank(const Mat& m) { return row_echelon(m).pivots.size(); }

std::vector<Vec> kernel_basis(const Mat& m) {
  const auto e = row_echelon(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec v = zero_vec(m.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vec> solve(const Mat& m, const Vec& b) {
  if (b.size() != m.rows()) throw std::invalid_argument("solve: right-hand side length mismatch");
  Mat aug = hstack(m, Mat::from_columns(m.rows(), {b}));
  const auto e = row_echelon(aug);
  if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;
  Vec x = zero_vec(m.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = e.reduced(r, m.cols());
  return x;
}

std::vector<Vec> column_space_basis(const Mat& m) {
  std::vector<Vec> out;
  for (auto p : row_echelon(m).pivots) out.push_back(m.column(p));
  return out;
}

std::vector<Vec> span_basis(const std::vector<Vec>& vectors, std::size_t dim) {
  if (vectors.empty()) return {};
  const auto e = row_echelon(Mat::from_rows(dim, vectors));
  std::vector<Vec> out;
  for (std::size_t r = 0; r < e.pivots.size(); ++r) out.push_back(e.reduced.row(r));
  return out;
}

bool in_span(const std::vector<Vec>& basis, const Vec& v, std::size_t dim) {
  if (is_zero(v)) return true;
  if (basis.empty()) return false;
  return solve(Mat::from_columns(dim, basis), v).has_value();
}

std::optional<Mat> inverse(const Mat& m) {
  if (!m.is_square()) throw std::invalid_argument("inverse of non-square matrix");
  const std::size_t n = m.rows();
  const auto e = row_echelon(hstack(m, Mat::identity(n)));
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  Mat inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = e.reduced(r, n + c);
  return inv;
}

Rational determinant(const Mat& m) {
  if (!m.is_square()) throw std::invalid_argument("determinant of non-square matrix");
  Mat a = m;
  const std::size_t n = a.rows();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && sgn(a(p, col)) == 0) ++p;
    if (p == n) return 0;
    if (p != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a(p, c), a(col, c));
      det = -det;
    }
    det *= a(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (sgn(a(r, col)) == 0) continue;
      const Rational f = a(r, col) / a(col, col);
      for (std::size_t c = col; c < n; ++c) a(r, c) -= f * a(col, c);
    }
  }
  return det;
}

Poly char_poly(const Mat& m) {
  if (!m.is_square()) throw std::invalid_argument("char_poly of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return Poly::constant(1);
  // Berkowitz: vect holds coefficients of the leading principal minors'
  // characteristic polynomials, highest degree first.
  std::vector<Rational> vect{Rational(1), Rational(-m(0, 0))};
  for (std::size_t r = 1; r < n; ++r) {
    // q = (1, -a_rr, -R C, -R M C, ..., -R M^{r-1} C)
    std::vector<Rational> q(r + 2, Rational(0));
    q[0] = 1;
    q[1] = -m(r, r);
    Vec c(r);
    for (std::size_t i = 0; i < r; ++i) c[i] = m(i, r);
    for (std::size_t k = 0; k < r; ++k) {
      Rational rc = 0;
      for (std::size_t i = 0; i < r; ++i) rc += m(r, i) * c[i];
      q[k + 2] = -rc;
      if (k + 1 < r) {
        Vec next(r, Rational(0));
        for (std::size_t i = 0; i < r; ++i)
          for (std::size_t j = 0; j < r; ++j)
            if (sgn(m(i, j)) != 0) next[i] += m(i, j) * c[j];
        c = std::move(next);
      }
    }
    std::vector<Rational> out(r + 2, Rational(0));
    for (std::size_t i = 0; i < r + 2; ++i)
      for (std::size_t j = 0; j <= std::min(i, r); ++j) out[i] += q[i - j] * vect[j];
    vect = std::move(out);
  }
  std::vector<Rational> low_first(vect.rbegin(), vect.rend());
  return Poly(std::move(low_first));
}

Mat eval_poly_at_matrix(const Poly& p, const Mat& m) {
  if (!m.is_square()) throw std::invalid_argument("eval_poly_at_matrix needs a square matrix");
  Mat acc(m.rows(), m.cols());
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc = acc * m;
    for (std::size_t i = 0; i < m.rows(); ++i) acc(i, i) += *it;
  }
  return acc;
}

bool is_nilpotent(const Mat& m) { return power(m, m.rows()).is_zero(); }

}  // namespace hullkit
