/* SPDX-FileCopyrightText: 2026 partwarp contributors
 *
 * SPDX-License-Identifier: Apache-2.0 */

#include "partwarp/raycast.hpp"

#include <cmath>

namespace partwarp {

namespace {

/* Moller-Trumbore with the ray parameterized so that t equals camera z:
 * direction ((u-cx)/fx, (v-cy)/fy, 1), origin at the camera center. */
std::optional<double> intersect(const Vec3 &dir, const Vec3 &a, const Vec3 &b,
                                const Vec3 &c) {
  const Vec3 e1 = b - a;
  const Vec3 e2 = c - a;
  const Vec3 pvec = dir.cross(e2);
  const double det = e1.dot(pvec);
  if (std::abs(det) < 1e-300) return std::nullopt;  // parallel or degenerate
  const double inv = 1.0 / det;
  const Vec3 tvec = -a;  // origin - a
  const double u = tvec.dot(pvec) * inv;
  if (u < 0.0 || u > 1.0) return std::nullopt;
  const Vec3 qvec = tvec.cross(e1);
  const double v = dir.dot(qvec) * inv;
  if (v < 0.0 || u + v > 1.0) return std::nullopt;
  const double t = e2.dot(qvec) * inv;
  if (t < kNearPlane) return std::nullopt;
  return t;
}

}  // namespace

std::optional<double> raycast_soup(const CameraSoup &soup,
                                   const CameraIntrinsics &k,
                                   const Pixel &pixel) {
  const Vec3 dir{(pixel.x + 0.5 - k.cx) / k.fx, (pixel.y + 0.5 - k.cy) / k.fy,
                 1.0};
  std::optional<double> best;
  for (const Tri &t : soup.tris) {
    const auto hit =
        intersect(dir, soup.verts[t.a], soup.verts[t.b], soup.verts[t.c]);
    if (hit && (!best || *hit < *best)) best = hit;
  }
  return best;
}

std::optional<double> raycast_depth_oracle(const ArticulatedMesh &mesh,
                                           const std::set<std::string> &part_filter,
                                           const RigidPose &pose,
                                           const CameraIntrinsics &k,
                                           const Pixel &pixel) {
  const CameraSoup soup = build_camera_soup(
      mesh,
      [&](const std::string &label) { return part_filter.count(label) > 0; },
      pose);
  return raycast_soup(soup, k, pixel);
}

}  // namespace partwarp
