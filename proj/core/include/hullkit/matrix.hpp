#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "hullkit/rational.hpp"

namespace hullkit {

/// Dense row-major rational matrix.
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols);
  Mat(std::initializer_list<std::initializer_list<Rational>> rows);

  static Mat identity(std::size_t n);
  static Mat zero(std::size_t rows, std::size_t cols) { return Mat(rows, cols); }
  static Mat from_columns(std::size_t rows, const std::vector<Vec>& columns);
  static Mat from_rows(std::size_t cols, const std::vector<Vec>& rows);
  static Mat diagonal(const Vec& d);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Rational> data() const { return data_; }
  Vec row(std::size_t r) const;
  Vec column(std::size_t c) const;
  void set_column(std::size_t c, const Vec& v);

  Mat transpose() const;
  bool is_zero() const;
  Rational trace() const;

  Vec apply(const Vec& v) const;

  Mat& operator+=(const Mat& o);
  Mat& operator-=(const Mat& o);
  Mat& operator*=(const Rational& s);

  friend bool operator==(const Mat& a, const Mat& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

Mat operator+(Mat a, const Mat& b);
Mat operator-(Mat a, const Mat& b);
Mat operator-(const Mat& a);
Mat operator*(const Mat& a, const Mat& b);
Mat operator*(const Rational& s, Mat a);

/// Commutator ab - ba.
Mat commutator(const Mat& a, const Mat& b);

Mat power(const Mat& m, std::size_t e);

/// Horizontal concatenation [a | b].
Mat hstack(const Mat& a, const Mat& b);
/// Vertical concatenation.
Mat vstack(const Mat& a, const Mat& b);

/// Flattens row-major into a vector (used to treat operator spaces as vector spaces).
Vec flatten(const Mat& m);
Mat unflatten(const Vec& v, std::size_t rows, std::size_t cols);

std::string to_string(const Mat& m);

}  // namespace hullkit
