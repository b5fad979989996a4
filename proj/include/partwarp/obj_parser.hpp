/* SPDX-FileCopyrightText: 2026 partwarp contributors
 *
 * SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "partwarp/mesh.hpp"

namespace partwarp {

/* Wavefront subset: `v` and `f` statements only, everything else is
 * ignored.  Faces with more than three vertices are fan-triangulated in
 * declaration order.  Indices may be 1-based or negative (relative);
 * `v/vt/vn` suffixes are accepted and discarded.  Malformed statements
 * raise parse_error with the line number. */
struct ObjContents {
  std::vector<Vec3> vertices;
  std::vector<Tri> triangles;
};

ObjContents parse_obj(std::istream &in, const std::string &origin = "obj");
ObjContents parse_obj_file(const std::string &path);

}  // namespace partwarp
