#pragma once

#include <optional>
#include <vector>

#include "hullkit/matrix.hpp"
#include "hullkit/poly.hpp"

namespace hullkit {

/// Reduced row echelon form. Pivots are leftmost nonzero entries, rescaled to 1;
/// pivot columns are listed in ascending order.
struct Echelon {
  Mat reduced;
  std::vector<std::size_t> pivots;
};

Echelon row_echelon(const Mat& m);

std::size_t rank(const Mat& m);

/// Basis of {v : m v = 0}, one vector per free column in ascending order,
/// with a 1 in that free column.
std::vector<Vec> kernel_basis(const Mat& m);

/// Some x with m x = b (free variables set to zero), or nullopt if inconsistent.
std::optional<Vec> solve(const Mat& m, const Vec& b);

/// Independent columns of m, echelon-selected (pivot columns of m).
std::vector<Vec> column_space_basis(const Mat& m);

/// Echelonized basis of span(vectors) (the nonzero rows of the RREF).
std::vector<Vec> span_basis(const std::vector<Vec>& vectors, std::size_t dim);

/// Whether v lies in span(basis).
bool in_span(const std::vector<Vec>& basis, const Vec& v, std::size_t dim);

std::optional<Mat> inverse(const Mat& m);
Rational determinant(const Mat& m);

/// det(tI - m), monic, computed division-free (Berkowitz).
Poly char_poly(const Mat& m);

/// p(m) by Horner's rule.
Mat eval_poly_at_matrix(const Poly& p, const Mat& m);

/// m^dim == 0.
bool is_nilpotent(const Mat& m);

}  // namespace hullkit
