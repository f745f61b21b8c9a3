#include "random.hpp"

#include <hullkit/linalg.hpp>

namespace testing_support {

Rational random_rational(std::mt19937& rng, int height) {
  std::uniform_int_distribution<int> num(-height, height);
  std::uniform_int_distribution<int> den(1, 3);
  Rational r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

Mat random_matrix(std::mt19937& rng, std::size_t n, int height) {
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = random_rational(rng, height);
  return m;
}

Mat random_unimodular(std::mt19937& rng, std::size_t n) {
  std::uniform_int_distribution<int> entry(-2, 2);
  Mat l = Mat::identity(n), u = Mat::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) {
      l(i, j) = entry(rng);
      u(j, i) = entry(rng);
    }
  return l * u;
}

Mat random_structured_matrix(std::mt19937& rng, std::size_t n) {
  std::uniform_int_distribution<int> coin(0, 3);
  std::uniform_int_distribution<int> small(-2, 2);
  Mat j(n, n);
  std::size_t i = 0;
  const Rational shared = small(rng);
  while (i < n) {
    const int kind = coin(rng);
    if (kind == 0 && i + 2 <= n) {
      // Companion block of t^2 - c with c not a square: 2, 3, 5 or -1.
      static const int cs[] = {2, 3, 5, -1};
      j(i, i + 1) = 1;
      j(i + 1, i) = cs[std::uniform_int_distribution<int>(0, 3)(rng)];
      i += 2;
    } else {
      const std::size_t len = std::min<std::size_t>(n - i, std::uniform_int_distribution<std::size_t>(1, 3)(rng));
      const Rational lambda = kind == 1 ? shared : Rational(small(rng));
      for (std::size_t k = 0; k < len; ++k) {
        j(i + k, i + k) = lambda;
        if (k + 1 < len) j(i + k, i + k + 1) = 1;
      }
      i += len;
    }
  }
  const Mat p = random_unimodular(rng, n);
  return p * j * *hullkit::inverse(p);
}

}  // namespace testing_support
