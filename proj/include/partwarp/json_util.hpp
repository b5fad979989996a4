/* SPDX-FileCopyrightText: 2026 partwarp contributors
 *
 * SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "partwarp/errors.hpp"
#include "partwarp/vec3.hpp"

namespace partwarp {

using Json = nlohmann::ordered_json;

/* Parse a JSON document from disk; I/O and syntax problems surface as
 * parse_error (a config_error). */
Json load_json_file(const std::string &path);

inline const Json &require_field(const Json &j, const std::string &key,
                                 const std::string &where) {
  const auto it = j.find(key);
  if (it == j.end())
    throw parse_error(where + ": missing required field '" + key + "'");
  return *it;
}

inline double require_number(const Json &j, const std::string &key,
                             const std::string &where) {
  const Json &f = require_field(j, key, where);
  if (!f.is_number())
    throw parse_error(where + ": field '" + key + "' must be a number");
  return f.get<double>();
}

inline std::string require_string(const Json &j, const std::string &key,
                                  const std::string &where) {
  const Json &f = require_field(j, key, where);
  if (!f.is_string())
    throw parse_error(where + ": field '" + key + "' must be a string");
  return f.get<std::string>();
}

inline std::vector<double> require_number_array(const Json &j,
                                                const std::string &key,
                                                size_t n,
                                                const std::string &where) {
  const Json &f = require_field(j, key, where);
  if (!f.is_array() || f.size() != n)
    throw parse_error(where + ": field '" + key + "' must be an array of " +
                      std::to_string(n) + " numbers");
  std::vector<double> out;
  for (const auto &v : f) {
    if (!v.is_number())
      throw parse_error(where + ": field '" + key + "' must contain numbers");
    out.push_back(v.get<double>());
  }
  return out;
}

inline Vec3 require_vec3(const Json &j, const std::string &key,
                         const std::string &where) {
  const auto a = require_number_array(j, key, 3, where);
  return {a[0], a[1], a[2]};
}

/* Strict-schema helper: every key must be recognized. */
void reject_unknown_keys(const Json &j,
                         const std::vector<std::string> &allowed,
                         const std::string &where);

}  // namespace partwarp
