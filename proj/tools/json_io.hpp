#pragma once

#include <json.hpp>
#include <string>

#include "teich/kz/matrix.hpp"
#include "teich/kz/monodromy.hpp"
#include "teich/kz/transport.hpp"

namespace teich::cli {

using nlohmann::json;

/// Reads a JSON file; Error(io) when unreadable, Error(parse) when malformed.
json read_json_file(const std::string& path);

/// [[a, b], [c, d]] with integer or "p/q" string entries.
kz::RationalMatrix rational_matrix_from_json(const json& j);
json to_json(const kz::RationalMatrix& m);
/// Rows of [re, im] pairs.
json to_json(const kz::ComplexMatrix& m);

/// Number or [re, im].
kz::Complex complex_from_json(const json& j);

/// [{"type": "line", "from": z, "to": z, "warp": p} | {"type": "arc", "center": z,
///   "radius": r, "theta0": t0, "theta1": t1}] or {"segments": [...], "margin": m}.
kz::FormPath path_from_json(const json& path, const json& forms);
/// [{"poles": [{"at": z, "residue": z}]}].
std::vector<kz::RationalForm> forms_from_json(const json& j);

}  // namespace teich::cli
