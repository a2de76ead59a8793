#pragma once

#include <filesystem>
#include <json.hpp>

#include "skeinalg/algebra/bimodule.hpp"
#include "skeinalg/skein/tangle.hpp"
#include "skeinalg/tqft/tqft.hpp"

namespace skeinalg::io {

using Json = nlohmann::ordered_json;

// Readers throw ParseError on schema problems; axiom failures surface as ValidationError.

Json read_json_file(const std::filesystem::path& path);

Json to_json(const Rational& x);
Rational rational_from_json(const Json& j);
Json to_json(const QVec& v);
QVec vector_from_json(const Json& j, std::size_t expected_size);
Json to_json(const QMatrix& m);
QMatrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols);
/// Rows inferred from the JSON itself; all rows must have equal length.
QMatrix matrix_from_json(const Json& j);

/// {"dim": n, "mult": [n][n][n], "unit": [n]}
Json to_json(const Algebra& a);
/// An inline object, a builtin name ("K", "M<n>", "D<n>", "P<n>", "T2") or a path to a JSON
/// file, resolved against `base_dir`.
AlgebraPtr algebra_from_json(const Json& j, const std::filesystem::path& base_dir = {});
/// Null when `name` is not a builtin.
AlgebraPtr builtin_algebra(std::string_view name);

/// {"source": algebra-ref, "target": algebra-ref, "matrix": [dim target][dim source]}
Json to_json(const AlgebraHom& f);
AlgebraHom hom_from_json(const Json& j, const std::filesystem::path& base_dir = {});

/// {"left", "right", "dim", "left_action", "right_action", "point"}
Json to_json(const PointedBimodule& m);
PointedBimodule bimodule_from_json(const Json& j, const std::filesystem::path& base_dir = {});

/// {"dim", "step", "states", "costates", "observables"}
Json to_json(const tqft::System& s);
tqft::System system_from_json(const Json& j);

/// {"exp": coeff}; coefficients are integers, or decimal strings when they exceed 64 bits.
Json to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const Json& j);

/// {"n_bottom", "n_top", "terms": [{"matching": [...], "coeff": {...}}]}
Json to_json(const skein::TLMorphism& m);
skein::TLMorphism tl_morphism_from_json(const Json& j);

/// {"0": poly, "2": poly} keyed by the power of z.
Json to_json(const skein::AnnularClass& c);

/// {"strands_in": n, "slices": [...]}. A slice is either a single padded event
///   ["cup"], ["cross+", {"at": 1}], ["coupon", {"at": 0, "morphism": {...}}]
/// or the full list of its events
///   {"events": ["id", "cross-", {"coupon": {...}}]}.
Json to_json(const skein::SliceTangle& t);
skein::SliceTangle tangle_from_json(const Json& j);

}  // namespace skeinalg::io
