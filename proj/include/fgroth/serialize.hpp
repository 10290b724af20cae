#pragma once

#include <string>
#include <string_view>

#include "json.hpp"

#include "fgroth/groth.hpp"

namespace fgroth {

/// Polynomial schema:
///   { "n_vars": N, "beta_cap": B, "x_cap": D,
///     "terms": [ { "coeff": c, "beta": e0, "x": [e1, ..., eN] }, ... ] }
/// Terms are in graded-lex order (b exponent first). Unbounded caps are null.
/// Coefficients are JSON integers, or decimal strings when beyond 64 bits.
nlohmann::json to_json(const Poly& p);
Poly poly_from_json(const nlohmann::json& j);

nlohmann::json to_json(const SkewFlagged& inst);
/// With `deterministic`, per-method timings are left out.
nlohmann::json to_json(const MethodReport& r, bool deterministic);

std::string dump(const nlohmann::json& j);

}  // namespace fgroth
