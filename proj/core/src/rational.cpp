#include "hullkit/rational.hpp"

#include <cctype>

#include "hullkit/errors.hpp"

namespace hullkit {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s)
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  Rational out;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    auto num = s.substr(0, slash);
    auto den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
      throw ParseError("malformed rational '" + std::string(text) + "'");
    mpz_class d{std::string(den), 10};
    if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    out = Rational(mpz_class(std::string(num), 10), d);
    out.canonicalize();
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    auto whole = s.substr(0, dot);
    auto frac = s.substr(dot + 1);
    if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole)) ||
        (!frac.empty() && !all_digits(frac)))
      throw ParseError("malformed decimal '" + std::string(text) + "'");
    mpz_class num(std::string(whole.empty() ? "0" : whole) + std::string(frac), 10);
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
    out = Rational(num, den);
    out.canonicalize();
  } else {
    if (!all_digits(s)) throw ParseError("malformed rational '" + std::string(text) + "'");
    out = Rational(mpz_class(std::string(s), 10));
  }
  return negative ? Rational(-out) : out;
}

std::string to_string(const Rational& r) { return r.get_str(); }

bool is_zero(const Vec& v) {
  for (const auto& x : v)
    if (!is_zero(x)) return false;
  return true;
}

Vec zero_vec(std::size_t n) { return Vec(n, Rational(0)); }

Vec unit_vec(std::size_t n, std::size_t i) {
  Vec v(n, Rational(0));
  v[i] = 1;
  return v;
}

Vec operator+(const Vec& a, const Vec& b) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Vec operator-(const Vec& a, const Vec& b) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

Vec operator*(const Rational& s, const Vec& v) {
  Vec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = s * v[i];
  return out;
}

}  // namespace hullkit
