#pragma once

#include <string>

#include <json.hpp>

#include "varpi/norms.hpp"

namespace varpi {

// A malformed norm description; the message names the offending key.
struct ParseError : Error {
    using Error::Error;
};

// Parses the self-describing norm object:
//   {"type": "polygon",      "vertices": [[x, y], ...]}
//   {"type": "lp",           "p": number | "inf"}
//   {"type": "linear_image", "matrix": [[a, b], [c, d]], "inner": {...}}
//   {"type": "xt",           "t": number in [0, 1]}
// Throws ParseError for schema problems; construction errors (DegenerateBody,
// SingularMap, DomainError) propagate.
NormSpec parse_norm(const nlohmann::json& doc);
NormSpec parse_norm_text(const std::string& text);
NormSpec load_norm_file(const std::string& path);

nlohmann::json norm_to_json(const NormSpec& norm);

nlohmann::json point_to_json(Point2 p);
nlohmann::json map_to_json(const LinearMap2& m);

}  // namespace varpi
