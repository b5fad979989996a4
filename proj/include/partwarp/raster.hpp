/* SPDX-FileCopyrightText: 2026 partwarp contributors
 *
 * SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "partwarp/camera.hpp"
#include "partwarp/depth_map.hpp"
#include "partwarp/mesh.hpp"
#include "partwarp/motion.hpp"

namespace partwarp {

/* Camera-space triangle soup ready for rasterization or ray casting.
 * `source` maps each soup triangle back to its index in the originating
 * mesh so callers can look up labels or facing. */
struct CameraSoup {
  std::vector<Vec3> verts;
  std::vector<Tri> tris;
  std::vector<uint32_t> source;
};

/* Gather the triangles whose label satisfies `pred`, optionally swing the
 * part `moved_part` by `motion` (model space), then transform to camera
 * space.  A motion with a null `moved_part` articulates every selected
 * triangle.  Vertices are deduplicated separately for moved and static
 * triangles, so shared vertices never drag static geometry along. */
CameraSoup build_camera_soup(
    const ArticulatedMesh &mesh,
    const std::function<bool(const std::string &)> &pred,
    const RigidPose &pose, const PartMotion *motion = nullptr,
    const std::string *moved_part = nullptr);

/* Z-buffer rasterization with top-left fill rule, pixel-center sampling,
 * perspective-correct 1/z interpolation, and near-plane clipping at
 * kNearPlane.  No backface culling: parts are open shells and must
 * occlude from both sides.  Bit-deterministic for identical input. */
IndexedDepthMap rasterize_soup(const CameraSoup &soup,
                               const CameraIntrinsics &k, int width,
                               int height);

inline constexpr double kNearPlane = 1e-4;

/* Depth of every triangle whose part label is in `part_filter`.  An empty
 * filter matches nothing and yields an all-invalid map. */
DepthMap rasterize_depth(const ArticulatedMesh &mesh,
                         const std::set<std::string> &part_filter,
                         const RigidPose &pose, const CameraIntrinsics &k,
                         int width, int height);

/* camera-space facing: true when the triangle's geometric normal points
 * toward the camera */
bool triangle_front_facing(const Vec3 &a, const Vec3 &b, const Vec3 &c);

}  // namespace partwarp
