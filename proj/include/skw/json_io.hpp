#pragma once

#include <json.hpp>
#include <string>

#include "skw/hodge.hpp"

namespace skw {

using Json = nlohmann::ordered_json;

/// Pretty-printed JSON with insertion-ordered keys and doubles at 17 significant digits.
std::string write_json(const Json& value);

/// Parses text; throws Errc::parse_error on malformed input.
Json parse_json_text(const std::string& text);

/// ["1", "1/2-3*i", ...] or integers.
ExactVector vector_from_json(const Json& j, std::size_t dim);
Json vector_to_json(const ExactVector& v);

/// {"dim": n, "steps": [[vec, ...], ...]}; steps[0] must span V, a final zero step is implied.
Filtration filtration_from_json(const Json& j);
Json filtration_to_json(const Filtration& f);

/// 2m x 2m matrix of rational strings or integers.
RealStructure real_structure_from_json(const Json& j, std::size_t m);

struct FiltrationPair {
  Filtration f;
  Filtration fbar;
};

/// F from "steps"; Fbar from "bar_steps", or from "conjugate": true with an optional
/// "real_structure" (coordinatewise conjugation by default).
FiltrationPair filtration_pair_from_json(const Json& j);

}  // namespace skw
