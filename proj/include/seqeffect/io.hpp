#pragma once

#include "json.hpp"

#include "seqeffect/effect.hpp"
#include "seqeffect/matrix.hpp"

namespace seqeffect {

using Json = nlohmann::json;

/// {"dim": n, "re": [n*n], "im": [n*n]}, row-major.
Json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const Json& j);

/// Matrix literal plus {"kind": "effect"}.
Json effect_to_json(const Effect& e);
/// Accepts a matrix literal with or without the effect tag.
Effect effect_from_json(const Json& j, const Tolerance& tol);

}  // namespace seqeffect
