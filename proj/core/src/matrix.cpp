#include "hullkit/matrix.hpp"

#include <sstream>

#include "hullkit/errors.hpp"

namespace hullkit {

Mat::Mat(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

Mat::Mat(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Mat Mat::identity(std::size_t n) {
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Mat Mat::from_columns(std::size_t rows, const std::vector<Vec>& columns) {
  Mat m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) m.set_column(c, columns[c]);
  return m;
}

Mat Mat::from_rows(std::size_t cols, const std::vector<Vec>& rows) {
  Mat m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("row length mismatch");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Mat Mat::diagonal(const Vec& d) {
  Mat m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

Vec Mat::row(std::size_t r) const {
  return Vec(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
             data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vec Mat::column(std::size_t c) const {
  Vec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

void Mat::set_column(std::size_t c, const Vec& v) {
  if (v.size() != rows_) throw std::invalid_argument("column length mismatch");
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

Mat Mat::transpose() const {
  Mat t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool Mat::is_zero() const {
  for (const auto& x : data_)
    if (sgn(x) != 0) return false;
  return true;
}

Rational Mat::trace() const {
  Rational t = 0;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

Vec Mat::apply(const Vec& v) const {
  if (v.size() != cols_) throw std::invalid_argument("dimension mismatch in Mat::apply");
  Vec out(rows_, Rational(0));
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (sgn(v[c]) != 0 && sgn((*this)(r, c)) != 0) out[r] += (*this)(r, c) * v[c];
  return out;
}

Mat& Mat::operator+=(const Mat& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("shape mismatch in +");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

Mat& Mat::operator-=(const Mat& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("shape mismatch in -");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

Mat& Mat::operator*=(const Rational& s) {
  for (auto& x : data_) x *= s;
  return *this;
}

Mat operator+(Mat a, const Mat& b) { return a += b; }
Mat operator-(Mat a, const Mat& b) { return a -= b; }
Mat operator-(const Mat& a) { return Rational(-1) * a; }

Mat operator*(const Mat& a, const Mat& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("shape mismatch in *");
  Mat out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rational& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (sgn(b(k, j)) != 0) out(i, j) += aik * b(k, j);
    }
  return out;
}

Mat operator*(const Rational& s, Mat a) { return a *= s; }

Mat commutator(const Mat& a, const Mat& b) { return a * b - b * a; }

Mat power(const Mat& m, std::size_t e) {
  Mat result = Mat::identity(m.rows());
  Mat base = m;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

Mat hstack(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("row mismatch in hstack");
  Mat out(a.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c);
    for (std::size_t c = 0; c < b.cols(); ++c) out(r, a.cols() + c) = b(r, c);
  }
  return out;
}

Mat vstack(const Mat& a, const Mat& b) {
  if (a.rows() == 0) return b;
  if (b.rows() == 0) return a;
  if (a.cols() != b.cols()) throw std::invalid_argument("column mismatch in vstack");
  Mat out(a.rows() + b.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c);
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(a.rows() + r, c) = b(r, c);
  return out;
}

Vec flatten(const Mat& m) { return Vec(m.data().begin(), m.data().end()); }

Mat unflatten(const Vec& v, std::size_t rows, std::size_t cols) {
  if (v.size() != rows * cols) throw std::invalid_argument("unflatten size mismatch");
  Mat m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = v[r * cols + c];
  return m;
}

std::string to_string(const Mat& m) {
  std::ostringstream os;
  os << "[";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << (r ? ", [" : "[");
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? ", " : "") << m(r, c).get_str();
    os << "]";
  }
  os << "]";
  return os.str();
}

}  // namespace hullkit
