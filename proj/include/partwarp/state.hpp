/* SPDX-FileCopyrightText: 2026 partwarp contributors
 *
 * SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "partwarp/json_util.hpp"
#include "partwarp/vec3.hpp"

namespace partwarp {

enum class StateKind { kMotion, kLight };

/* One nameable uncommon state.  Motion states are realized by swinging the
 * listed part; light states recolor the listed lamp surfaces. */
struct StateDef {
  std::string name;
  StateKind kind = StateKind::kMotion;
  std::vector<std::string> parts;  // part ids this state touches
  Vec3 color;                      // light states: emitted tint
};

/* Ordered state vocabulary.  Annotation vectors index into `states`, so
 * the order is part of the format and guarded by `version`. */
struct StateTaxonomy {
  std::string version;
  std::vector<StateDef> states;

  int index_of(const std::string &name) const {
    for (size_t i = 0; i < states.size(); ++i)
      if (states[i].name == name) return static_cast<int>(i);
    return -1;
  }
};

/* The stock 12-state vehicle vocabulary: six hinge motions, four turn
 * signals, brake, and hazard lights. */
StateTaxonomy default_taxonomy();

StateTaxonomy parse_taxonomy(const Json &doc,
                             const std::string &origin = "taxonomy");
Json taxonomy_to_json(const StateTaxonomy &t);

/* Dense binary annotation aligned with a taxonomy. */
struct StateVector {
  std::vector<uint8_t> bits;

  bool operator==(const StateVector &o) const { return bits == o.bits; }
};

/* Set-of-names <-> bit-vector conversions.  Unknown names throw
 * config_error. */
StateVector encode_state(const std::set<std::string> &active,
                         const StateTaxonomy &taxonomy);
std::set<std::string> decode_state(const StateVector &v,
                                   const StateTaxonomy &taxonomy);

}  // namespace partwarp
