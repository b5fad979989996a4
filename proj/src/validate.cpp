/* SPDX-FileCopyrightText: 2026 partwarp contributors
 *
 * SPDX-License-Identifier: Apache-2.0 */

#include "partwarp/validate.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace partwarp {

ValidationReport validate_assets(const ArticulatedMesh &mesh,
                                 const PartCatalog &parts,
                                 const VehicleInstance &instance) {
  ValidationReport report;

  // labels nobody declared
  std::set<std::string> flagged;
  for (size_t i = 0; i < mesh.triangle_part.size(); ++i) {
    const std::string &label = mesh.triangle_part[i];
    if (label == kBodyLabel || parts.find(label)) continue;
    if (flagged.insert(label).second)
      report.findings.push_back(
          {"unknown-label", "triangle " + std::to_string(i) +
                                " labeled '" + label +
                                "' which no part declares"});
  }

  // declared parts with no triangles
  for (const auto &p : parts.parts) {
    const bool used = std::any_of(mesh.triangle_part.begin(),
                                  mesh.triangle_part.end(),
                                  [&](const std::string &l) { return l == p.id; });
    if (!used)
      report.findings.push_back(
          {"unreferenced-part", "part '" + p.id + "' labels no triangle"});
  }

  // zero-area triangles
  for (size_t i = 0; i < mesh.triangles.size(); ++i) {
    const Tri &t = mesh.triangles[i];
    if (t.a >= mesh.vertices.size() || t.b >= mesh.vertices.size() ||
        t.c >= mesh.vertices.size()) {
      report.findings.push_back(
          {"bad-index", "triangle " + std::to_string(i) +
                            " references a missing vertex"});
      continue;
    }
    const Vec3 &a = mesh.vertices[t.a];
    const Vec3 ab = mesh.vertices[t.b] - a;
    const Vec3 ac = mesh.vertices[t.c] - a;
    if (ab.cross(ac).norm() < 1e-12)
      report.findings.push_back(
          {"degenerate-triangle",
           "triangle " + std::to_string(i) + " has (near-)zero area"});
  }

  // can the posed mesh appear in the frame at all?
  bool any_in_front = false;
  double min_u = 1e300, max_u = -1e300, min_v = 1e300, max_v = -1e300;
  for (const Vec3 &v : mesh.vertices) {
    const Vec3 cam = instance.pose.r.apply(v) + instance.pose.t;
    if (cam.z <= 0.0) continue;
    any_in_front = true;
    const double u = instance.intrinsics.fx * cam.x / cam.z + instance.intrinsics.cx;
    const double vv = instance.intrinsics.fy * cam.y / cam.z + instance.intrinsics.cy;
    min_u = std::min(min_u, u);
    max_u = std::max(max_u, u);
    min_v = std::min(min_v, vv);
    max_v = std::max(max_v, vv);
  }
  const bool bbox_misses_frame =
      !any_in_front || max_u < 0 || min_u > instance.width || max_v < 0 ||
      min_v > instance.height;
  if (!mesh.vertices.empty() && bbox_misses_frame)
    report.findings.push_back(
        {"out-of-frustum",
         "posed mesh projects entirely outside the image frame"});

  return report;
}

}  // namespace partwarp
