#include "hullkit/exterior.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "hullkit/errors.hpp"

namespace hullkit {

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

namespace {

void enumerate(std::size_t n, std::size_t k, std::size_t start, Mask acc, std::vector<Mask>& out) {
  if (k == 0) {
    out.push_back(acc);
    return;
  }
  for (std::size_t i = start; i + k <= n; ++i) enumerate(n, k - 1, i + 1, acc | (Mask{1} << i), out);
}

}  // namespace

ExteriorBasis::ExteriorBasis(std::size_t n, std::size_t k) : n_(n), k_(k) {
  masks_.reserve(binomial(n, k));
  enumerate(n, k, 0, 0, masks_);
  for (std::size_t i = 0; i < masks_.size(); ++i) index_.emplace(masks_[i], i);
}

std::size_t ExteriorBasis::index(Mask m) const {
  auto it = index_.find(m);
  if (it == index_.end()) throw std::out_of_range("mask is not a basis subset of this degree");
  return it->second;
}

ExteriorForm ExteriorForm::one(std::size_t dim) {
  ExteriorForm f(dim, 0);
  f.add(0, 1);
  return f;
}

ExteriorForm ExteriorForm::basis(std::size_t dim, std::vector<std::size_t> indices) {
  ExteriorForm f = one(dim);
  for (auto i : indices) {
    if (i >= dim) throw std::out_of_range("form index out of range");
    ExteriorForm x(dim, 1);
    x.add(Mask{1} << i, 1);
    f = wedge(f, x);
  }
  return f;
}

ExteriorForm ExteriorForm::from_coords(std::size_t dim, std::size_t degree, const Vec& coords) {
  const ExteriorBasis b(dim, degree);
  if (coords.size() != b.size()) throw std::invalid_argument("from_coords: length mismatch");
  ExteriorForm f(dim, degree);
  for (std::size_t i = 0; i < coords.size(); ++i) f.add(b.mask(i), coords[i]);
  return f;
}

Rational ExteriorForm::coeff(Mask m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void ExteriorForm::add(Mask m, const Rational& c) {
  if (sgn(c) == 0) return;
  if (static_cast<std::size_t>(std::popcount(m)) != degree_)
    throw std::invalid_argument("term degree does not match form degree");
  auto [it, inserted] = terms_.emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (sgn(it->second) == 0) terms_.erase(it);
}

Vec ExteriorForm::coords() const {
  const ExteriorBasis b(dim_, degree_);
  Vec v = zero_vec(b.size());
  for (const auto& [m, c] : terms_) v[b.index(m)] = c;
  return v;
}

ExteriorForm& ExteriorForm::operator+=(const ExteriorForm& o) {
  if (o.is_zero()) return *this;
  if (is_zero() && degree_ != o.degree_) {
    *this = o;
    return *this;
  }
  if (o.degree_ != degree_) throw std::invalid_argument("adding forms of different degrees");
  for (const auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

ExteriorForm& ExteriorForm::operator-=(const ExteriorForm& o) { return *this += Rational(-1) * o; }

ExteriorForm operator+(ExteriorForm a, const ExteriorForm& b) { return a += b; }
ExteriorForm operator-(ExteriorForm a, const ExteriorForm& b) { return a -= b; }

ExteriorForm operator*(const Rational& s, const ExteriorForm& f) {
  ExteriorForm out(f.dim(), f.degree());
  if (sgn(s) == 0) return out;
  for (const auto& [m, c] : f.terms()) out.add(m, s * c);
  return out;
}

int shuffle_sign(Mask a, Mask b) {
  int inversions = 0;
  while (b) {
    const int j = std::countr_zero(b);
    b &= b - 1;
    const Mask above = j >= 31 ? Mask{0} : ~((Mask{1} << (j + 1)) - 1);
    inversions += std::popcount(a & above);
  }
  return inversions % 2 ? -1 : 1;
}

ExteriorForm wedge(const ExteriorForm& a, const ExteriorForm& b) {
  ExteriorForm out(std::max(a.dim(), b.dim()), a.degree() + b.degree());
  if (out.degree() > out.dim()) return out;
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      if (ma & mb) continue;
      Rational c = ca * cb;
      if (shuffle_sign(ma, mb) < 0) c = -c;
      out.add(ma | mb, c);
    }
  return out;
}

ExteriorForm wedge_power(const ExteriorForm& a, std::size_t k) {
  ExteriorForm out = ExteriorForm::one(a.dim());
  for (std::size_t i = 0; i < k; ++i) out = wedge(out, a);
  return out;
}

std::string mask_name(Mask m, const std::vector<std::string>& names) {
  if (m == 0) return "1";
  std::string s;
  for (std::size_t i = 0; i < 32; ++i)
    if (m & (Mask{1} << i)) {
      if (!s.empty()) s += "^";
      s += i < names.size() ? names[i] : "e" + std::to_string(i + 1);
    }
  return s;
}

std::string to_string(const ExteriorForm& f, const std::vector<std::string>& names) {
  if (f.is_zero()) return "0";
  // Lexicographic subset order, same as ExteriorBasis.
  std::vector<std::pair<Mask, Rational>> terms(f.terms().begin(), f.terms().end());
  auto lex_key = [](Mask m) {
    std::vector<int> idx;
    for (int i = 0; i < 32; ++i)
      if (m & (Mask{1} << i)) idx.push_back(i);
    return idx;
  };
  std::sort(terms.begin(), terms.end(), [&](const auto& x, const auto& y) { return lex_key(x.first) < lex_key(y.first); });
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms) {
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    Rational mag = abs(c);
    if (m == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << " ";
    os << mask_name(m, names);
  }
  return os.str();
}

}  // namespace hullkit
