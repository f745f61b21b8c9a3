#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hullkit/invariants.hpp"

namespace hullkit {

struct SymplecticCheck {
  ExteriorForm omega;
  std::size_t half_dim = 0;
  bool closed = false;
  bool top_power_nonzero = false;
  ExteriorForm top_power;

  bool symplectic() const { return closed && top_power_nonzero; }
};

/// Throws PreconditionError if dim u is odd, omega is not a 2-form, or omega
/// does not lie in the invariant model.
SymplecticCheck verify_symplectic(const InvariantComplex& ic, const ExteriorForm& omega);

struct LefschetzReport {
  std::size_t half_dim = 0;
  /// maps[i]: [ω^{n-i}]∧ : H^i -> H^{2n-i} in the cohomology bases.
  std::vector<Mat> maps;
  std::vector<bool> iso;
  bool holds = false;
  /// Injectivity of ω^{n-i}∧ on the model plus Poincaré duality, available
  /// only when the model differential vanishes.
  std::optional<std::vector<bool>> duality_route;
  bool routes_agree = true;
};

/// Throws PreconditionError unless omega passes verify_symplectic.
LefschetzReport hard_lefschetz(const InvariantComplex& ic, const ExteriorForm& omega);

struct PoincarePairing {
  bool top_one_dimensional = false;
  /// pairing[k]: b_k x b_{n-k}, entry (i, j) = coefficient of rep_i ∧ rep_j in H^n.
  std::vector<Mat> pairing;
  std::vector<bool> perfect;

  bool all_perfect() const;
};

PoincarePairing poincare_pairing(const CohomologyRing& ring);
PoincarePairing poincare_pairing(const InvariantComplex& ic);

/// Heuristic: random closed invariant 2-forms with integer coefficients in
/// [-height, height], returning the first with nonzero top power. A miss
/// proves nothing.
std::optional<ExteriorForm> search_symplectic(const InvariantComplex& ic, std::uint32_t seed = 1,
                                              std::size_t tries = 64, int height = 3);

}  // namespace hullkit
