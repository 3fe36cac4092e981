#pragma once

// JSON encodings shared by the CLI and reports. Rationals are always strings
// ("p" or "p/q" in lowest terms); matrices are arrays of row arrays.

#include "parinv/generators.hpp"
#include "parinv/shape.hpp"

#include "json.hpp"

namespace parinv {

using Json = nlohmann::ordered_json;

Json to_json(const RationalMatrix& m);
/// Throws std::invalid_argument on ragged rows, non-string entries or malformed rationals.
RationalMatrix matrix_from_json(const Json& j);

Json to_json(const FlagShape& shape);
FlagShape shape_from_json(const Json& j);

/// {pair:[i,j], kind:"minor"|"stacked"|"ratio", x_rows, adj_rows, cols} with
/// numerator/denominator objects for ratios and a "role" tag for M₀/M_ij/P_ij.
Json to_json(const GeneratorDescriptor& d);
GeneratorDescriptor descriptor_from_json(const Json& j);

}  // namespace parinv
