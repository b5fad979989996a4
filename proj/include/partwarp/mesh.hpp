/* SPDX-FileCopyrightText: 2026 partwarp contributors
 *
 * SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "partwarp/vec3.hpp"

namespace partwarp {

struct Tri {
  uint32_t a = 0;
  uint32_t b = 0;
  uint32_t c = 0;
};

/* Triangle mesh with a part label per triangle.  Label "body" marks the
 * static shell; any other label must name a declared part. */
struct ArticulatedMesh {
  std::vector<Vec3> vertices;
  std::vector<Tri> triangles;
  std::vector<std::string> triangle_part;  // one label per triangle

  /* indices of triangles whose label satisfies the predicate */
  std::vector<uint32_t> triangles_where(
      const std::function<bool(const std::string &)> &pred) const {
    std::vector<uint32_t> out;
    for (uint32_t i = 0; i < triangles.size(); ++i)
      if (pred(triangle_part[i])) out.push_back(i);
    return out;
  }
};

inline constexpr const char *kBodyLabel = "body";

}  // namespace partwarp
