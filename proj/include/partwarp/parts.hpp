/* SPDX-FileCopyrightText: 2026 partwarp contributors
 *
 * SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "partwarp/json_util.hpp"
#include "partwarp/vec3.hpp"

namespace partwarp {

enum class PartKind { kMovable, kSemantic };

/* Catalog entry describing one articulable or light-emitting part. */
struct PartSpec {
  std::string id;
  PartKind kind = PartKind::kMovable;
  // hinge, model space; meaningful for movable parts only
  Vec3 axis_point;
  Vec3 axis_dir{0, 1, 0};
  double angle_min = 0.0;
  double angle_max = 0.0;
  // diffuse color of the surface revealed when the part swings open
  Vec3 reverse_albedo{0.5, 0.5, 0.5};
};

/* Fallback opening ranges (radians) applied when a movable part declares
 * no angle_range.  Door-like parts swing wider than lids. */
struct AngleDefaults {
  double door_max = 1.22;
  double lid_max = 0.96;
};

struct PartCatalog {
  std::vector<PartSpec> parts;

  const PartSpec *find(const std::string &id) const {
    for (const auto &p : parts)
      if (p.id == id) return &p;
    return nullptr;
  }
};

/* Parse a parts document: {"parts": [{id, kind, axis_point, axis_dir,
 * angle_range?, reverse_albedo?}, ...]}.  Near-unit axes (within 1e-3) are
 * renormalized with a warning; anything further off is rejected. */
PartCatalog parse_part_spec(const Json &doc, const AngleDefaults &defaults,
                            const std::string &origin = "parts");

/* Triangle labels for one mesh: {"mesh_id": ..., "default": "body",
 * "parts": {"<label>": [tri indices...]}}. */
struct MeshLabels {
  std::string mesh_id;
  std::vector<std::string> triangle_part;
};

MeshLabels parse_labels(const Json &doc, size_t triangle_count,
                        const std::string &origin = "labels");

}  // namespace partwarp
