#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hullkit/classify.hpp"

namespace hullkit {

inline constexpr int kSchemaVersion = 1;

/// A line-oriented input document:
///
///   schema_version 1
///   algebra
///     dim 3
///     basis t x y
///     bracket t x = x
///     bracket t y = -y
///   end
///   hull_override            # optional
///     algebra ... end
///     torus_derivation <rows> end
///     finite_generator <rows> end
///   end
///   omega x^y + ...          # optional, over the hull_override algebra if any
///   options                  # optional
///     massey_depth 3
///     finite_bound 10000
///   end
///
/// '#' starts a comment. Bracket operands are basis names or 1-based indices.
struct InputDocument {
  int schema_version = kSchemaVersion;
  LieAlgebra algebra;
  std::optional<HullData> hull_override;
  std::optional<ExteriorForm> omega;
  AnalysisOptions options;

  /// The algebra omega lives on.
  const LieAlgebra& form_algebra() const { return hull_override ? hull_override->u : algebra; }
  AnalysisInput analysis_input() const;
};

bool operator==(const InputDocument& a, const InputDocument& b);

/// Throws ParseError carrying the line and column of the offending token.
InputDocument parse_document(std::string_view text);
std::string render_document(const InputDocument& doc);

/// A homogeneous form such as "x1^y + 1/2 x2^x3" over the given basis names.
ExteriorForm parse_form(std::string_view text, const std::vector<std::string>& names);

}  // namespace hullkit
