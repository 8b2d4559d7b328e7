#include "ncgdih/ring_io.hpp"

#include <json.hpp>

namespace ncgdih {

namespace {

using nlohmann::json;

json term_scalar(const CRat& c) {
  return {{"re", rational_to_string(c.re)}, {"im", rational_to_string(c.im)}};
}

CRat scalar_from(const json& t) {
  return CRat{rational_from_string(t.at("re").get<std::string>()),
              rational_from_string(t.at("im").get<std::string>())};
}

}  // namespace

std::string to_json(const DihedralRing& a) {
  json terms = json::array();
  for (const auto& [g, c] : a.terms()) {
    json t = term_scalar(c);
    t["elem"] = {g.power, g.flip};
    terms.push_back(std::move(t));
  }
  return json{{"group", "dihedral"}, {"terms", std::move(terms)}}.dump();
}

std::string to_json(const SemidirectRing& a) {
  json terms = json::array();
  for (const auto& [g, c] : a.terms()) {
    json t = term_scalar(c);
    t["elem"] = {g.m, g.n};
    terms.push_back(std::move(t));
  }
  return json{{"group", "semidirect"}, {"terms", std::move(terms)}}.dump();
}

namespace {

json parse_checked(const std::string& text, const std::string& want_group) {
  json j = json::parse(text);
  const auto group = j.at("group").get<std::string>();
  if (group != want_group)
    throw TagMismatch("expected group tag \"" + want_group + "\", got \"" +
                      group + "\"");
  return j;
}

}  // namespace

DihedralRing dihedral_ring_from_json(const std::string& text) {
  json j = parse_checked(text, "dihedral");
  DihedralRing out;
  for (const auto& t : j.at("terms")) {
    const auto& e = t.at("elem");
    out.add_term(DihedralWord{e.at(0).get<long>(), e.at(1).get<int>()},
                 scalar_from(t));
  }
  return out;
}

SemidirectRing semidirect_ring_from_json(const std::string& text) {
  json j = parse_checked(text, "semidirect");
  SemidirectRing out;
  for (const auto& t : j.at("terms")) {
    const auto& e = t.at("elem");
    out.add_term(SemidirectPair{e.at(0).get<long>(), e.at(1).get<long>()},
                 scalar_from(t));
  }
  return out;
}

}  // namespace ncgdih
