#pragma once

#include <string>

#include "json.hpp"
#include "kform.hpp"
#include "matrix.hpp"

namespace g2forge {

using OrderedJson = nlohmann::ordered_json;

/// Scalars serialise as strings so exact values survive the round trip:
/// "3/8" for rationals, shortest-exact decimal for binary64.
std::string scalar_str(const Scalar& s);
OrderedJson scalar_json(const Scalar& s);
Scalar scalar_from_json(const nlohmann::json& v);  // number or "p/q" string

/// Forms serialise as { "degree": k, "coefficients": { "127": "-11/8", ... } }
/// with blade labels in increasing-index notation, keys sorted.
OrderedJson form_json(const KForm& f);
KForm form_from_json(const nlohmann::json& v);

OrderedJson matrix_json(const Matrix& m);
Matrix matrix_from_json(const nlohmann::json& v, std::size_t rows, std::size_t cols);

/// Fixed-format decimal for CSV cells: deterministic shortest round-trip.
std::string csv_double(double v);

}  // namespace g2forge
