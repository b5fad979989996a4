/* SPDX-FileCopyrightText: 2026 partwarp contributors
 *
 * SPDX-License-Identifier: Apache-2.0 */

#include "partwarp/state.hpp"

#include "partwarp/errors.hpp"

namespace partwarp {

namespace {

const Vec3 kTurnYellow{1.0, 0.85, 0.0};
const Vec3 kBrakeRed{1.0, 0.0, 0.0};

StateDef motion(const char *name, const char *part) {
  return {name, StateKind::kMotion, {part}, {}};
}

StateDef light(const char *name, std::vector<std::string> parts, Vec3 color) {
  return {name, StateKind::kLight, std::move(parts), color};
}

}  // namespace

StateTaxonomy default_taxonomy() {
  StateTaxonomy t;
  t.version = "vehicle-12.v1";
  t.states = {
      motion("bonnet-lifted", "bonnet"),
      motion("trunk-lifted", "trunk"),
      motion("front-left-door-open", "door_front_left"),
      motion("front-right-door-open", "door_front_right"),
      motion("back-left-door-open", "door_back_left"),
      motion("back-right-door-open", "door_back_right"),
      light("headlight-turn-left", {"headlight_left"}, kTurnYellow),
      light("headlight-turn-right", {"headlight_right"}, kTurnYellow),
      light("taillight-turn-left", {"taillight_left"}, kTurnYellow),
      light("taillight-turn-right", {"taillight_right"}, kTurnYellow),
      light("stop", {"taillight_left", "taillight_right"}, kBrakeRed),
      light("alarm", {"taillight_left", "taillight_right",
                      "headlight_left", "headlight_right"}, kBrakeRed),
  };
  return t;
}

StateTaxonomy parse_taxonomy(const Json &doc, const std::string &origin) {
  if (!doc.is_object())
    throw parse_error(origin + ": document must be an object");
  reject_unknown_keys(doc, {"version", "states"}, origin);

  StateTaxonomy t;
  t.version = require_string(doc, "version", origin);
  const Json &list = require_field(doc, "states", origin);
  if (!list.is_array())
    throw parse_error(origin + ": 'states' must be an array");

  for (const auto &entry : list) {
    const std::string where =
        origin + " state #" + std::to_string(t.states.size());
    reject_unknown_keys(entry, {"name", "kind", "parts", "color"}, where);
    StateDef def;
    def.name = require_string(entry, "name", where);
    if (t.index_of(def.name) >= 0)
      throw parse_error(origin + ": duplicate state '" + def.name + "'");
    const std::string kind = require_string(entry, "kind", where);
    if (kind == "motion") {
      def.kind = StateKind::kMotion;
    } else if (kind == "light") {
      def.kind = StateKind::kLight;
    } else {
      throw parse_error(where + ": kind must be 'motion' or 'light'");
    }
    const Json &parts = require_field(entry, "parts", where);
    if (!parts.is_array() || parts.empty())
      throw parse_error(where + ": 'parts' must be a non-empty array");
    for (const auto &p : parts) {
      if (!p.is_string()) throw parse_error(where + ": part ids are strings");
      def.parts.push_back(p.get<std::string>());
    }
    if (def.kind == StateKind::kLight)
      def.color = require_vec3(entry, "color", where);
    else if (entry.contains("color"))
      throw parse_error(where + ": motion states take no color");
    t.states.push_back(std::move(def));
  }
  return t;
}

Json taxonomy_to_json(const StateTaxonomy &t) {
  Json doc;
  doc["version"] = t.version;
  Json list = Json::array();
  for (const auto &s : t.states) {
    Json entry;
    entry["name"] = s.name;
    entry["kind"] = s.kind == StateKind::kMotion ? "motion" : "light";
    entry["parts"] = s.parts;
    if (s.kind == StateKind::kLight)
      entry["color"] = {s.color.x, s.color.y, s.color.z};
    list.push_back(entry);
  }
  doc["states"] = list;
  return doc;
}

StateVector encode_state(const std::set<std::string> &active,
                         const StateTaxonomy &taxonomy) {
  StateVector v;
  v.bits.assign(taxonomy.states.size(), 0);
  for (const auto &name : active) {
    const int idx = taxonomy.index_of(name);
    if (idx < 0) throw config_error("unknown state name: " + name);
    v.bits[idx] = 1;
  }
  return v;
}

std::set<std::string> decode_state(const StateVector &v,
                                   const StateTaxonomy &taxonomy) {
  if (v.bits.size() != taxonomy.states.size())
    throw config_error("state vector length does not match taxonomy");
  std::set<std::string> out;
  for (size_t i = 0; i < v.bits.size(); ++i)
    if (v.bits[i]) out.insert(taxonomy.states[i].name);
  return out;
}

}  // namespace partwarp
