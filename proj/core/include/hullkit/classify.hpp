#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hullkit/formality.hpp"
#include "hullkit/hull.hpp"
#include "hullkit/lefschetz.hpp"
#include "hullkit/poly.hpp"

namespace hullkit {

enum class TypeOneStatus { type_I, not_type_I, not_certified };

/// Imaginary-axis test for one derivation D:
/// char_poly(D) = t^e · p(t), p even, p(t) = q(t²), squarefree part of q has
/// all its real roots in (-inf, 0] and no others.
struct DerivationSpectrum {
  std::size_t index = 0;
  Poly char_poly;
  std::size_t zero_multiplicity = 0;
  Poly stripped;
  bool even = false;
  Poly q;
  Poly q_squarefree;
  std::size_t nonpositive_roots = 0;
  bool compatible = false;
};

struct TypeOneVerdict {
  TypeOneStatus status = TypeOneStatus::not_certified;
  std::vector<DerivationSpectrum> spectra;
  /// Index into spectra of the failing derivation when not_type_I.
  std::optional<std::size_t> witness;
  /// A pair of derivations that do not commute.
  std::optional<std::pair<std::size_t, std::size_t>> noncommuting;
  std::string reason;
};

DerivationSpectrum derivation_spectrum(const Mat& d, std::size_t index = 0);
TypeOneVerdict type_one_check(const HullData& h);
/// Recomputes the spectrum of d and confirms it fails the imaginary-axis test.
bool verify_not_type_one_witness(const Mat& d, const DerivationSpectrum& s);

enum class KahlerConclusion { not_kahler, no_obstruction, inapplicable };

struct KahlerObstruction {
  KahlerConclusion conclusion = KahlerConclusion::inapplicable;
  std::string statement;
  std::vector<std::string> assumptions;
  /// Which computed results the conclusion rests on.
  std::vector<std::string> certificates;
};

inline constexpr const char* kLatticeAssumption = "a lattice exists";

KahlerObstruction kahler_obstruction(bool nbar_abelian, const TypeOneVerdict& type_one);

struct AnalysisOptions {
  std::size_t massey_depth = 0;
  std::size_t finite_bound = kDefaultFiniteBound;
};

struct AnalysisInput {
  LieAlgebra algebra;
  std::optional<HullData> hull_override;
  std::optional<ExteriorForm> omega;
  AnalysisOptions options;
};

enum class StageStatus { ok, failed, skipped };

struct StageRecord {
  std::string name;
  StageStatus status = StageStatus::skipped;
  std::string message;
};

struct AnalysisReport {
  AnalysisInput input;
  ValidationReport validation;
  bool solvable = false;
  bool nilpotent = false;
  std::optional<Subspace> nilradical;
  std::optional<SplittableHull> hull;
  std::optional<AbelianHullResult> hull_abelian;
  std::optional<SplitForm> split;
  std::optional<HullData> hull_data;
  std::optional<InvariantComplex> invariants;
  std::vector<std::size_t> betti;
  std::optional<FormalityVerdict> formality;
  std::optional<SymplecticCheck> symplectic;
  std::optional<LefschetzReport> lefschetz;
  std::optional<TypeOneVerdict> type_one;
  std::optional<KahlerObstruction> kahler;
  std::vector<StageRecord> stages;

  const StageRecord* stage(const std::string& name) const;
};

/// Runs every stage in order. A failing stage is recorded and the stages that
/// depend on it are marked skipped; nothing throws except InternalError.
AnalysisReport analyze(const AnalysisInput& input);

std::string to_string(TypeOneStatus s);
std::string to_string(KahlerConclusion c);
std::string to_string(StageStatus s);

}  // namespace hullkit
