/* SPDX-FileCopyrightText: 2026 partwarp contributors
 *
 * SPDX-License-Identifier: Apache-2.0 */

#include "partwarp/parts.hpp"

#include <cmath>
#include <fstream>
#include <set>

#include "partwarp/errors.hpp"
#include "partwarp/log.hpp"
#include "partwarp/mesh.hpp"

namespace partwarp {

Json load_json_file(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw config_error("cannot open file: " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception &e) {
    throw parse_error(path + ": " + e.what());
  }
}

void reject_unknown_keys(const Json &j,
                         const std::vector<std::string> &allowed,
                         const std::string &where) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool ok = false;
    for (const auto &k : allowed)
      if (it.key() == k) {
        ok = true;
        break;
      }
    if (!ok) throw parse_error(where + ": unknown field '" + it.key() + "'");
  }
}

namespace {

bool contains(const std::string &haystack, const char *needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

PartCatalog parse_part_spec(const Json &doc, const AngleDefaults &defaults,
                            const std::string &origin) {
  if (!doc.is_object())
    throw parse_error(origin + ": document must be an object");
  reject_unknown_keys(doc, {"parts"}, origin);
  const Json &list = require_field(doc, "parts", origin);
  if (!list.is_array())
    throw parse_error(origin + ": 'parts' must be an array");

  PartCatalog catalog;
  std::set<std::string> seen;
  for (const auto &entry : list) {
    const std::string where = origin + " part #" +
                              std::to_string(catalog.parts.size());
    if (!entry.is_object())
      throw parse_error(where + ": entry must be an object");
    reject_unknown_keys(entry,
                        {"id", "kind", "axis_point", "axis_dir", "angle_range",
                         "reverse_albedo"},
                        where);

    PartSpec p;
    p.id = require_string(entry, "id", where);
    if (p.id.empty()) throw parse_error(where + ": empty part id");
    if (p.id == kBodyLabel)
      throw parse_error(where + ": '" + p.id + "' is reserved");
    if (!seen.insert(p.id).second)
      throw parse_error(origin + ": duplicate part id '" + p.id + "'");

    const std::string kind = require_string(entry, "kind", where);
    if (kind == "movable") {
      p.kind = PartKind::kMovable;
    } else if (kind == "semantic") {
      p.kind = PartKind::kSemantic;
    } else {
      throw parse_error(where + ": kind must be 'movable' or 'semantic'");
    }

    if (p.kind == PartKind::kMovable) {
      p.axis_point = require_vec3(entry, "axis_point", where);
      p.axis_dir = require_vec3(entry, "axis_dir", where);
      const double n = p.axis_dir.norm();
      if (std::abs(n - 1.0) > 1e-3)
        throw parse_error(where + ": axis_dir is not unit length (|a| = " +
                          std::to_string(n) + ")");
      if (std::abs(n - 1.0) > 1e-9) {
        warn(where + " (" + p.id + "): renormalizing near-unit axis_dir");
      }
      p.axis_dir = p.axis_dir / n;

      if (entry.contains("angle_range")) {
        const auto r = require_number_array(entry, "angle_range", 2, where);
        // the rest pose must always be reachable
        if (!(r[0] <= 0.0 && 0.0 <= r[1]))
          throw parse_error(where + ": angle_range must contain 0");
        p.angle_min = r[0];
        p.angle_max = r[1];
      } else if (contains(p.id, "trunk") || contains(p.id, "bonnet")) {
        p.angle_min = 0.0;
        p.angle_max = defaults.lid_max;
      } else {
        if (!contains(p.id, "door"))
          warn(where + " (" + p.id + "): no angle_range; using door default");
        p.angle_min = 0.0;
        p.angle_max = defaults.door_max;
      }

      p.reverse_albedo = require_vec3(entry, "reverse_albedo", where);
      for (double c : {p.reverse_albedo.x, p.reverse_albedo.y,
                       p.reverse_albedo.z})
        if (!(c >= 0.0 && c <= 1.0))
          throw parse_error(where + ": reverse_albedo outside [0,1]");
    } else {
      // semantic parts only carry an identity
      for (const char *k : {"axis_point", "axis_dir", "angle_range",
                            "reverse_albedo"})
        if (entry.contains(k))
          throw parse_error(where + ": field '" + std::string(k) +
                            "' is not valid for a semantic part");
    }

    catalog.parts.push_back(std::move(p));
  }
  return catalog;
}

MeshLabels parse_labels(const Json &doc, size_t triangle_count,
                        const std::string &origin) {
  if (!doc.is_object())
    throw parse_error(origin + ": document must be an object");
  reject_unknown_keys(doc, {"mesh_id", "default", "parts"}, origin);

  MeshLabels out;
  out.mesh_id = doc.contains("mesh_id")
                    ? require_string(doc, "mesh_id", origin)
                    : "default";
  const std::string fallback = doc.contains("default")
                                   ? require_string(doc, "default", origin)
                                   : std::string(kBodyLabel);
  out.triangle_part.assign(triangle_count, fallback);

  if (!doc.contains("parts")) return out;
  const Json &parts = doc.at("parts");
  if (!parts.is_object())
    throw parse_error(origin + ": 'parts' must be an object");

  std::vector<bool> claimed(triangle_count, false);
  for (auto it = parts.begin(); it != parts.end(); ++it) {
    if (!it.value().is_array())
      throw parse_error(origin + ": label '" + it.key() +
                        "' must map to an index array");
    for (const auto &v : it.value()) {
      if (!v.is_number_integer())
        throw parse_error(origin + ": label '" + it.key() +
                          "' has a non-integer index");
      const long idx = v.get<long>();
      if (idx < 0 || idx >= static_cast<long>(triangle_count))
        throw parse_error(origin + ": triangle index " + std::to_string(idx) +
                          " out of range for label '" + it.key() + "'");
      if (claimed[idx])
        throw parse_error(origin + ": triangle " + std::to_string(idx) +
                          " labeled twice");
      claimed[idx] = true;
      out.triangle_part[idx] = it.key();
    }
  }
  return out;
}

}  // namespace partwarp
