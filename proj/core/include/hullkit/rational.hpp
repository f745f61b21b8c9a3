#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace hullkit {

/// Exact rational number. GMP keeps it canonical (reduced, positive
/// denominator) after every arithmetic operation.
using Rational = mpq_class;

/// A coordinate vector over the rationals.
using Vec = std::vector<Rational>;

/// Parses "p", "p/q" or a decimal "d.ddd" exactly. Throws ParseError.
Rational parse_rational(std::string_view text);

/// Serializes as "p" or "p/q".
std::string to_string(const Rational& r);

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

bool is_zero(const Vec& v);
Vec zero_vec(std::size_t n);
Vec unit_vec(std::size_t n, std::size_t i);
Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator*(const Rational& s, const Vec& v);

}  // namespace hullkit
