#pragma once

// single-header nlohmann/json from vendor/
#include <json.hpp>

#include "exalg/qubits.hpp"

namespace exalg {
namespace io {

using json = nlohmann::json;

/// {"field": {"type":"rational"} | {"type":"quadratic","d":N},
///  "rows": m, "cols": n, "entries": [[scalar-string, ...], ...]}
json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const json& j);

/// {"qubits": n, "field": ..., "amps": [scalar-string, ...]}
json state_to_json(const PureState& s);
PureState state_from_json(const json& j);

/// Generator-set file: JSON array of matrices.
json gens_to_json(const std::vector<Matrix>& gens);
std::vector<Matrix> gens_from_json(const json& j);

/// Basis file: array of matrices, either bare or {"name": ..., "matrix": ...}.
struct NamedBasis {
    std::vector<std::string> names;  // empty string when unnamed
    std::vector<Matrix> matrices;
};
json basis_to_json(const NamedBasis& b);
NamedBasis basis_from_json(const json& j);

json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const json& j);

}  // namespace io
}  // namespace exalg
