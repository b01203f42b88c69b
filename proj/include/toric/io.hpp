#pragma once

#include "toric/mazur.hpp"

#include <json.hpp>

#include <memory>
#include <stdexcept>
#include <string>

namespace toric {

using Json = nlohmann::ordered_json;

/// Bad user input: malformed files, unknown cones, invalid divisors.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Integers as numbers, everything else as "p/q".
Json to_json(const Rational& r);
Json to_json(const Character& c);
Json to_json(const Cocharacter& c);
Json to_json(const LatticePointSet& s);
Json to_json(const Fan& fan);
/// {"datum": "SL:3", "chars": {"<cone id>": [...], ...}}
Json to_json(const OrthogonalSet& os);
Json to_json(const CohomologyReport& r);
Json to_json(const ProjectionReport& r);

Rational rational_from_json(const Json& j);
Character character_from_json(const RootDatum& datum, const Json& j);

/// Reads a divisor (or an object holding one under "divisor"). A datum
/// given here must match the file's. Throws InputError naming the cone.
OrthogonalSet orthogonal_set_from_json(const Json& j, const std::string& datum_override = "");

/// Comma separated integers or rationals, "1,-1,0".
Character parse_character(const RootDatum& datum, const std::string& text);
std::vector<int> parse_int_list(const std::string& text);

}  // namespace toric
