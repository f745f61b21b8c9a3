#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hullkit/invariants.hpp"

namespace hullkit {

/// The invariant model has identically zero differential, so it is its own
/// cohomology and the inclusion into forms is a quasi-isomorphism from the
/// cohomology algebra.
struct ZeroDifferentialCertificate {
  std::vector<std::size_t> model_dims;
};

std::optional<ZeroDifferentialCertificate> certify_formal_if_zero_differential(const InvariantComplex& ic);

/// Everything needed to re-check a triple Massey product <a, b, c>:
/// dx = A∧B, dy = B∧C, r = A∧y + (-1)^{|a|+1} x∧C.
struct MasseyWitness {
  CohomologyClass a, b, c;
  ExteriorForm A, B, C;
  ExteriorForm x, y;
  ExteriorForm r;
  CohomologyClass r_class;
  /// Spanning set of a·H^{|b|+|c|-1} + H^{|a|+|b|-1}·c.
  std::vector<CohomologyClass> indeterminacy;
  std::size_t indeterminacy_rank = 0;
};

enum class MasseyStatus { vanishes, nonvanishing, undefined };

struct MasseyResult {
  MasseyStatus status = MasseyStatus::undefined;
  MasseyWitness witness;
  /// Set when undefined: which product is nonzero in cohomology.
  std::string reason;
};

MasseyResult massey_triple(const CohomologyRing& ring, const CohomologyClass& a, const CohomologyClass& b,
                           const CohomologyClass& c);

/// Recomputes the witness through the ambient Chevalley-Eilenberg differential
/// and a fresh cohomology computation; true iff it is a nonvanishing product.
bool verify_massey_witness(const InvariantComplex& ic, const MasseyWitness& w);

enum class FormalityStatus { certified_formal, obstructed_nonformal, undecided };

struct FormalityVerdict {
  FormalityStatus status = FormalityStatus::undecided;
  std::optional<ZeroDifferentialCertificate> certificate;
  std::optional<MasseyWitness> witness;
  std::size_t triples_scanned = 0;
  std::size_t depth = 0;
};

/// depth = maximum total degree |a|+|b|+|c| of scanned basis triples; 0 means dim u.
FormalityVerdict formality_verdict(const InvariantComplex& ic, std::size_t depth = 0);

/// Independent re-check of a verdict's certificate.
bool verify_formality_verdict(const InvariantComplex& ic, const FormalityVerdict& verdict);

std::string to_string(FormalityStatus s);
std::string to_string(MasseyStatus s);

}  // namespace hullkit
