#include "toric/io.hpp"

#include <sstream>

namespace toric {

Json to_json(const Rational& r) {
  if (is_integer(r) && r.get_num().fits_slong_p()) return Json(r.get_num().get_si());
  return Json(to_string(r));
}

Json to_json(const Character& c) {
  Json a = Json::array();
  for (const auto& x : c.coords) a.push_back(to_json(x));
  return a;
}

Json to_json(const Cocharacter& c) {
  Json a = Json::array();
  for (auto x : c.coords) a.push_back(x);
  return a;
}

Json to_json(const LatticePointSet& s) {
  Json a = Json::array();
  for (const auto& p : s.points) a.push_back(to_json(p));
  return a;
}

Json to_json(const Fan& fan) {
  Json j;
  j["datum"] = fan.datum().name();
  j["dimension"] = fan.dimension();
  j["rays"] = Json::array();
  for (const auto& r : fan.rays()) j["rays"].push_back(to_json(r));
  j["cones"] = Json::array();
  for (const auto& c : fan.cones()) {
    Json rays = Json::array();
    for (auto r : c.rays) rays.push_back(to_json(fan.rays()[r]));
    j["cones"].push_back({{"id", c.id}, {"rays", rays}});
  }
  j["walls"] = Json::array();
  for (const auto& a : fan.adjacency())
    j["walls"].push_back(
        {{"cones", {fan.cones()[a.first].id, fan.cones()[a.second].id}}, {"root", to_json(a.wall)}});
  return j;
}

Json to_json(const OrthogonalSet& os) {
  Json chars = Json::object();
  for (std::size_t i = 0; i < os.chars().size(); ++i) chars[os.fan().cones()[i].id] = to_json(os.at(i));
  return {{"datum", os.datum().name()}, {"chars", chars}};
}

Json to_json(const CohomologyReport& r) {
  Json j;
  j["h0_dim"] = r.h0_dim;
  j["h0_divisor_dim"] = r.h0_divisor_dim;
  j["coker_dim"] = r.coker_dim;
  j["missing"] = Json::array();
  for (const auto& m : r.missing) j["missing"].push_back(to_json(m));
  if (!r.per_eigenweight.empty()) {
    j["per_eigenweight"] = Json::array();
    for (const auto& [u, h] : r.per_eigenweight) j["per_eigenweight"].push_back({{"weight", to_json(u)}, {"h1", h}});
  }
  return j;
}

Json to_json(const ProjectionReport& r) {
  Json j;
  j["equal"] = r.equal;
  j["routes_agree"] = r.routes_agree;
  j["lhs"] = to_json(r.lhs);
  j["rhs"] = to_json(r.rhs);
  j["witnesses"] = Json::array();
  for (const auto& w : r.witnesses) j["witnesses"].push_back(to_json(w));
  return j;
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw std::invalid_argument("expected an integer or a \"p/q\" string, got " + j.dump());
}

Character character_from_json(const RootDatum& datum, const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected an array of coordinates, got " + j.dump());
  std::vector<Rational> coords;
  for (const auto& x : j) coords.push_back(rational_from_json(x));
  return datum.character(std::move(coords));
}

OrthogonalSet orthogonal_set_from_json(const Json& input, const std::string& datum_override) {
  const Json& j = input.contains("divisor") ? input.at("divisor") : input;
  if (!j.is_object() || !j.contains("chars") || !j.at("chars").is_object())
    throw InputError("divisor JSON needs a \"chars\" object keyed by cone id");
  std::string name = datum_override;
  if (j.contains("datum")) {
    if (!j.at("datum").is_string()) throw InputError("\"datum\" must be a string like \"SL:3\"");
    const auto file_datum = j.at("datum").get<std::string>();
    if (!name.empty() && RootDatum::parse(name).name() != RootDatum::parse(file_datum).name())
      throw InputError("datum " + name + " does not match the file's " + file_datum);
    name = file_datum;
  }
  if (name.empty()) throw InputError("no datum given: pass --datum or put \"datum\" in the file");
  std::shared_ptr<const Fan> fan;
  try {
    fan = make_weyl_fan(RootDatum::parse(name));
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  const auto& chars = j.at("chars");
  for (const auto& [id, value] : chars.items())
    if (!fan->find_cone(id)) throw InputError("unknown cone id '" + id + "' for " + fan->datum().name());
  std::vector<Character> out;
  for (const auto& cone : fan->cones()) {
    if (!chars.contains(cone.id)) throw InputError("cone " + cone.id + ": missing character");
    try {
      out.push_back(character_from_json(fan->datum(), chars.at(cone.id)));
    } catch (const std::invalid_argument& e) {
      throw InputError("cone " + cone.id + ": " + e.what());
    }
  }
  return {fan, std::move(out)};
}

Character parse_character(const RootDatum& datum, const std::string& text) {
  std::vector<Rational> coords;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) coords.push_back(parse_rational(item));
  return datum.character(std::move(coords));
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("not an integer: '" + item + "'");
    }
    if (used != item.size()) throw std::invalid_argument("not an integer: '" + item + "'");
    out.push_back(v);
  }
  return out;
}

}  // namespace toric
