#pragma once

#include <random>

#include <hullkit/lie_algebra.hpp>

namespace testing_support {

using hullkit::Mat;
using hullkit::Rational;

/// Small rationals p/q with |p| <= height, 1 <= q <= 3.
Rational random_rational(std::mt19937& rng, int height = 4);
Mat random_matrix(std::mt19937& rng, std::size_t n, int height = 4);
Mat random_unimodular(std::mt19937& rng, std::size_t n);

/// P J P^{-1} with Jordan blocks, repeated eigenvalues and companion blocks
/// of irreducible quadratics, so both parts of the decomposition are nontrivial.
Mat random_structured_matrix(std::mt19937& rng, std::size_t n);

}  // namespace testing_support
