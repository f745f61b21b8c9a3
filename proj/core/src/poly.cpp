#include "hullkit/poly.hpp"

#include <sstream>

#include "hullkit/errors.hpp"

namespace hullkit {

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { normalize(); }

Poly Poly::monomial(const Rational& c, std::size_t degree) {
  std::vector<Rational> v(degree + 1, Rational(0));
  v[degree] = c;
  return Poly(std::move(v));
}

void Poly::normalize() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

Rational Poly::operator()(const Rational& t) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long>(i);
  return Poly(std::move(d));
}

Poly Poly::monic() const {
  if (is_zero()) return {};
  Rational inv = 1 / lead();
  std::vector<Rational> v(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) v[i] = c_[i] * inv;
  return Poly(std::move(v));
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  normalize();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  normalize();
  return *this;
}

Poly operator+(Poly a, const Poly& b) { return a += b; }
Poly operator-(Poly a, const Poly& b) { return a -= b; }
Poly operator-(const Poly& a) { return Rational(-1) * a; }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> v(a.coeffs().size() + b.coeffs().size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs().size(); ++i)
    for (std::size_t j = 0; j < b.coeffs().size(); ++j) v[i + j] += a.coeffs()[i] * b.coeffs()[j];
  return Poly(std::move(v));
}

Poly operator*(const Rational& s, const Poly& p) {
  std::vector<Rational> v(p.coeffs());
  for (auto& x : v) x *= s;
  return Poly(std::move(v));
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw PreconditionError("polynomial division by zero");
  Poly rem = a;
  if (a.degree() < b.degree()) return {Poly{}, rem};
  std::vector<Rational> q(static_cast<std::size_t>(a.degree() - b.degree() + 1), Rational(0));
  const Rational inv = 1 / b.lead();
  while (!rem.is_zero() && rem.degree() >= b.degree()) {
    auto shift = static_cast<std::size_t>(rem.degree() - b.degree());
    Rational f = rem.lead() * inv;
    q[shift] = f;
    rem -= Poly::monomial(f, shift) * b;
  }
  return {Poly(std::move(q)), rem};
}

Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

ExtendedGcd extended_gcd(const Poly& a, const Poly& b) {
  Poly r0 = a, r1 = b;
  Poly s0 = Poly::constant(1), s1;
  Poly t0, t1 = Poly::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::exchange(r1, r);
    s0 = std::exchange(s1, s0 - q * s1);
    t0 = std::exchange(t1, t0 - q * t1);
  }
  if (r0.is_zero()) return {};
  Rational inv = 1 / r0.lead();
  return {inv * r0, inv * s0, inv * t0};
}

Poly squarefree_part(const Poly& p) {
  if (p.is_zero()) throw PreconditionError("squarefree_part of the zero polynomial");
  Poly g = gcd(p, p.derivative());
  return divmod(p, g).first.monic();
}

std::vector<Poly> sturm_chain(const Poly& p) {
  std::vector<Poly> chain{p};
  Poly next = p.derivative();
  while (!next.is_zero()) {
    chain.push_back(next);
    next = -(chain[chain.size() - 2] % chain.back());
  }
  return chain;
}

namespace {

// Sign changes along the chain, zeros dropped.
std::size_t variations(const std::vector<int>& signs) {
  std::size_t count = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

std::size_t variations_at(const std::vector<Poly>& chain, const Rational& x) {
  std::vector<int> signs;
  for (const auto& q : chain) signs.push_back(sgn(q(x)));
  return variations(signs);
}

std::size_t variations_at_infinity(const std::vector<Poly>& chain, bool positive) {
  std::vector<int> signs;
  for (const auto& q : chain) {
    int s = sgn(q.lead());
    if (!positive && q.degree() % 2 == 1) s = -s;
    signs.push_back(s);
  }
  return variations(signs);
}

}  // namespace

std::size_t sturm_real_roots_in(const Poly& p, const Interval& interval) {
  if (p.is_zero()) throw PreconditionError("Sturm count of the zero polynomial");
  if (gcd(p, p.derivative()).degree() > 0)
    throw PreconditionError("Sturm count requires a squarefree polynomial");
  if (interval.lo && interval.hi && *interval.hi < *interval.lo) return 0;
  const auto chain = sturm_chain(p);
  // For squarefree p, V(a) - V(b) counts roots in the half-open (a, b].
  const std::size_t v_lo =
      interval.lo ? variations_at(chain, *interval.lo) : variations_at_infinity(chain, false);
  const std::size_t v_hi =
      interval.hi ? variations_at(chain, *interval.hi) : variations_at_infinity(chain, true);
  std::size_t count = v_lo - v_hi;
  if (interval.lo && sgn(p(*interval.lo)) == 0) ++count;
  return count;
}

std::string to_string(const Poly& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    const Rational& c = p.coeffs()[static_cast<std::size_t>(i)];
    if (sgn(c) == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != 1) os << mag.get_str();
    if (i > 0) {
      if (mag != 1) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

}  // namespace hullkit
