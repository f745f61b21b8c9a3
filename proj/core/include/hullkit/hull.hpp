#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "hullkit/lie_algebra.hpp"

namespace hullkit {

/// Additive Jordan-Chevalley decomposition m = semisimple + nilpotent.
struct JordanPair {
  Mat semisimple;
  Mat nilpotent;
};

/// Exact decomposition over Q by Newton iteration on the squarefree part of
/// the characteristic polynomial. Every JordanPair invariant is checked
/// before returning; a failure throws InternalError.
JordanPair jordan_chevalley(const Mat& m);

/// Whether m has a squarefree minimal polynomial (semisimple over any extension).
bool is_semisimple(const Mat& m);

/// Semisimple part of ad_x, verified to be a derivation of g.
Mat semisimple_derivation(const LieAlgebra& g, const Vec& x);

/// A Cartan subalgebra: the generalized 0-eigenspace of ad at a regular element.
Subspace cartan_subalgebra(const LieAlgebra& g);

/// The splittable hull gbar = Im f ⋉ g together with the nilshadow nbar.
///
/// gbar coordinates: the first imf_basis.size() entries are Im f, the rest are g.
/// nbar has the same basis names as g; nbar_i corresponds to e_i - f(e_i).
struct SplittableHull {
  LieAlgebra g;
  Subspace nilradical;
  Subspace cartan;
  /// (ad h)_s for each Cartan basis vector h.
  std::vector<Mat> cartan_semisimple;
  /// Basis directions of g spanning the deterministic complement of the nilradical.
  std::vector<std::size_t> complement;
  /// f(e_c) for c in `complement`; a basis of Im f.
  std::vector<Mat> imf_basis;
  /// f(e_i) for every basis vector of g.
  std::vector<Mat> shadow;
  LieAlgebra gbar;
  LieAlgebra nbar;
  Mat embed;
  Mat nbar_inclusion;
};

/// f(x) computed through the Cartan decomposition x = h + n (h in the Cartan
/// subalgebra, n in the nilradical), f(x) = (ad h)_s.
Mat shadow_via_cartan(const SplittableHull& hull, const Vec& x);
/// f(x) computed through the complement decomposition and the Im f basis.
Mat shadow_via_complement(const SplittableHull& hull, const Vec& x);

/// Throws PreconditionError for non-solvable g. All SplittableHull invariants
/// are verified before returning (InternalError otherwise).
SplittableHull build_splittable_hull(const LieAlgebra& g);

/// Runs every structural check on a hull; returns the first failure, if any.
std::optional<std::string> check_hull_invariants(const SplittableHull& hull);

/// Additivity of f on all basis pairs, cross-checked between the Cartan and
/// complement routes; (ad h)_s additive on Cartan basis pairs; and
/// ad_x - f(x) nilpotent for x = e_i + e_j. Returns the first failure.
std::optional<std::string> check_shadow_additivity(const SplittableHull& hull);

struct AbelianHullResult {
  bool abelian = false;
  /// A pair (i, j) with [nbar_i, nbar_j] != 0 when not abelian.
  std::optional<std::pair<std::size_t, std::size_t>> witness;
  Vec witness_bracket;
};

AbelianHullResult unipotent_hull_abelian(const SplittableHull& hull);
AbelianHullResult unipotent_hull_abelian(const LieAlgebra& g);

/// g = a ⋉ m with a abelian, m the (abelian) nilradical and ad(a) acting
/// semisimply on m.
struct SplitForm {
  Subspace complement;
  Subspace ideal;
  /// ad(a_i) restricted to the ideal, in the ideal's basis coordinates.
  std::vector<Mat> action;
};

std::optional<SplitForm> recognize_split_form(const LieAlgebra& g);
/// Re-verifies a split form against g from scratch.
bool verify_split_form(const LieAlgebra& g, const SplitForm& split);

/// Nilpotent algebra u with a commuting semisimple torus action and a finite
/// group of automorphisms.
struct HullData {
  LieAlgebra u;
  std::vector<Mat> torus_derivations;
  std::vector<Mat> finite_generators;
};

inline constexpr std::size_t kDefaultFiniteBound = 10000;

/// All elements of the group generated by `generators` (identity first, then
/// breadth-first). Throws PreconditionError if more than `bound` elements appear.
std::vector<Mat> enumerate_group(const std::vector<Mat>& generators, std::size_t dim,
                                 std::size_t bound = kDefaultFiniteBound);

/// Throws ValidationError if a HullData invariant fails (u not nilpotent, a
/// torus element not a semisimple derivation, derivations not commuting, a
/// generator not an automorphism) and PreconditionError if the generated group
/// exceeds the bound.
void validate_hull_data(const HullData& h, std::size_t finite_bound = kDefaultFiniteBound);

/// u = nbar, torus = Im f acting on nbar, no finite part.
HullData hull_action_data(const LieAlgebra& g);
HullData hull_action_data(const SplittableHull& hull);

}  // namespace hullkit
