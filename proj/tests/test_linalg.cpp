#include <doctest.h>

#include <random>

#include <hullkit/errors.hpp>
#include <hullkit/hull.hpp>
#include <hullkit/linalg.hpp>

#include "support/oracles.hpp"
#include "support/random.hpp"

using namespace hullkit;

TEST_CASE("rational literals parse exactly") {
  CHECK(parse_rational("0.5") == Rational(1, 2));
  CHECK(parse_rational("-3/6") == Rational(-1, 2));
  CHECK(parse_rational("12") == 12);
  CHECK(parse_rational(".25") == Rational(1, 4));
  CHECK(parse_rational("+7/1") == 7);
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("1/x"), ParseError);
  CHECK_THROWS_AS(parse_rational("1.2.3"), ParseError);
  CHECK_THROWS_AS(parse_rational(""), ParseError);
  CHECK(to_string(Rational(-3, 4)) == "-3/4");
}

TEST_CASE("polynomial arithmetic") {
  const Poly p{-1, 0, 1};  // t^2 - 1
  const Poly q{1, 1};      // t + 1
  auto [quot, rem] = divmod(p, q);
  CHECK(quot == Poly{-1, 1});
  CHECK(rem.is_zero());
  CHECK(gcd(p, Poly{1, 2, 1}) == q);
  const Poly cube = q * q * q * Poly{-2, 0, 1};
  CHECK(squarefree_part(cube) == q * Poly{-2, 0, 1});
  const auto eg = extended_gcd(Poly{-2, 0, 1}, Poly{0, 1});
  CHECK(eg.s * Poly{-2, 0, 1} + eg.t * Poly{0, 1} == eg.g);
  CHECK_THROWS_AS(squarefree_part(Poly{}), PreconditionError);
}

TEST_CASE("squarefree part divides and is squarefree on random products") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    Poly p = Poly::constant(testing_support::random_rational(rng) + 5);
    std::uniform_int_distribution<int> root(-3, 3), mult(1, 3);
    for (int f = 0; f < 3; ++f) {
      const Poly lin{Rational(root(rng)), 1};
      for (int m = mult(rng); m > 0; --m) p = p * lin;
    }
    const Poly s = squarefree_part(p);
    CHECK((p % s).is_zero());
    CHECK(gcd(s, s.derivative()).degree() == 0);
  }
}

TEST_CASE("Sturm counts match polynomials with known real roots") {
  // (t - 1)(t + 2)(t - 1/2)(t^2 + 1)
  const Poly p = Poly{-1, 1} * Poly{2, 1} * Poly{Rational(-1, 2), 1} * Poly{1, 0, 1};
  CHECK(sturm_real_roots_in(p, Interval::all()) == 3);
  CHECK(sturm_real_roots_in(p, Interval::at_most(0)) == 1);
  CHECK(sturm_real_roots_in(p, Interval::at_least(0)) == 2);
  CHECK(sturm_real_roots_in(p, Interval::closed(Rational(1, 2), 1)) == 2);
  CHECK(sturm_real_roots_in(p, Interval::closed(-2, -2)) == 1);
  CHECK(sturm_real_roots_in(Poly{1, 0, 1}, Interval::all()) == 0);
  CHECK(sturm_real_roots_in(Poly{-2, 0, 1}, Interval::at_most(0)) == 1);
  CHECK_THROWS_AS(sturm_real_roots_in(Poly{1, 2, 1}, Interval::all()), PreconditionError);
}

TEST_CASE("random Sturm counts agree with planted roots") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> pick(-6, 6);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<int> roots;
    Poly p = Poly{3, 0, 1};  // no real roots
    for (int k = 0; k < 4; ++k) {
      const int r = pick(rng);
      if (std::find(roots.begin(), roots.end(), r) != roots.end()) continue;
      roots.push_back(r);
      p = p * Poly{Rational(-r), 1};
    }
    const int lo = pick(rng), hi = lo + 4;
    const auto expected = std::count_if(roots.begin(), roots.end(), [&](int r) { return lo <= r && r <= hi; });
    CHECK(sturm_real_roots_in(p, Interval::closed(lo, hi)) == static_cast<std::size_t>(expected));
  }
}

TEST_CASE("echelon, kernel and solve round-trip on random matrices") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t rows = 1 + trial % 6, cols = 1 + (trial * 7) % 6;
    Mat m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j)
        if (rng() % 3) m(i, j) = testing_support::random_rational(rng, 2);
    const auto kernel = kernel_basis(m);
    CHECK(rank(m) + kernel.size() == cols);
    CHECK(rank(m) == oracle::rank(m));
    for (const auto& v : kernel) CHECK(is_zero(m.apply(v)));
    Vec x(cols);
    for (auto& e : x) e = testing_support::random_rational(rng);
    const Vec b = m.apply(x);
    auto sol = solve(m, b);
    REQUIRE(sol);
    CHECK(m.apply(*sol) == b);
    if (m.is_square()) {
      CHECK(determinant(m) == oracle::determinant(m));
      if (auto inv = inverse(m)) CHECK(m * *inv == Mat::identity(rows));
      else CHECK(determinant(m) == 0);
    }
  }
}

TEST_CASE("inconsistent systems have no solution") {
  const Mat m{{1, 1}, {2, 2}};
  CHECK_FALSE(solve(m, {1, 3}));
  CHECK(solve(m, {1, 2}));
}

TEST_CASE("characteristic polynomial agrees with interpolation and satisfies Cayley-Hamilton") {
  std::mt19937 rng(7);
  for (std::size_t n = 1; n <= 8; ++n)
    for (int trial = 0; trial < 4; ++trial) {
      const Mat m = trial % 2 ? testing_support::random_matrix(rng, n) : testing_support::random_structured_matrix(rng, n);
      const Poly p = char_poly(m);
      CHECK(p == oracle::char_poly(m));
      CHECK(eval_poly_at_matrix(p, m).is_zero());
      CHECK(p.coeff(n - 1) == -m.trace());
    }
}

TEST_CASE("Jordan-Chevalley on small examples") {
  const Mat jordan{{2, 1}, {0, 2}};
  const auto jc = jordan_chevalley(jordan);
  CHECK(jc.semisimple == Mat{{2, 0}, {0, 2}});
  CHECK(jc.nilpotent == Mat{{0, 1}, {0, 0}});

  // Rotation: already semisimple over C, no rational eigenvalues.
  const Mat rot{{0, -1}, {1, 0}};
  CHECK(jordan_chevalley(rot).nilpotent.is_zero());
  CHECK(is_semisimple(rot));
  CHECK_FALSE(is_semisimple(jordan));

  // Block diag(C, C) + coupling, C the companion of t^2 - 2.
  const Mat c2{{0, 2, 1, 0}, {1, 0, 0, 1}, {0, 0, 0, 2}, {0, 0, 1, 0}};
  const auto jc2 = jordan_chevalley(c2);
  CHECK(jc2.semisimple + jc2.nilpotent == c2);
  CHECK(oracle::nilpotent(jc2.nilpotent));
  CHECK_FALSE(jc2.nilpotent.is_zero());
}

TEST_CASE("Jordan-Chevalley properties on random structured matrices") {
  std::mt19937 rng(19);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + trial % 7;
    const Mat m = testing_support::random_structured_matrix(rng, n);
    const auto jc = jordan_chevalley(m);
    CHECK(jc.semisimple + jc.nilpotent == m);
    CHECK(commutator(jc.semisimple, jc.nilpotent).is_zero());
    CHECK(oracle::nilpotent(jc.nilpotent));
    const Poly p = char_poly(jc.semisimple);
    CHECK(eval_poly_at_matrix(squarefree_part(p), jc.semisimple).is_zero());
  }
}

TEST_CASE("decomposition is deterministic") {
  std::mt19937 rng(23);
  const Mat m = testing_support::random_structured_matrix(rng, 6);
  CHECK(jordan_chevalley(m).semisimple == jordan_chevalley(m).semisimple);
}
