#pragma once

#include <string>

#include <json.hpp>

#include "superroot/rootdata.hpp"
#include "superroot/steinberg.hpp"

namespace superroot {

using Json = nlohmann::ordered_json;

/// A JSON number when |x| <= 2^53, a decimal string otherwise.
Json integer_to_json(const Integer& x);
/// Accepts integral numbers and decimal strings. `path` prefixes error messages.
Integer integer_from_json(const Json& j, const std::string& path);

Json weight_to_json(const Weight& w);
Weight weight_from_json(const Json& j, const std::string& path);
Coweight coweight_from_json(const Json& j, const std::string& path);

/// {"rank", "label", "even_roots": [{"root", "coroot"}], "odd_roots": [{"root", "mult"}], "h_odd_dim"}.
Json datum_to_json(const SuperRootDatum& d);
/// Unknown keys are ignored. A label naming a built-in family attaches its
/// Lie superalgebra, provided the data match the family exactly.
SuperRootDatum datum_from_json(const Json& j);
SuperRootDatum load_datum_file(const std::string& path);

/// {"terms": [{"weight", "mult"}]}, sorted by weight.
Json character_to_json(const CharacterElement& c);
CharacterElement character_from_json(const Json& j);

}  // namespace superroot
