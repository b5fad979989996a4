/* SPDX-FileCopyrightText: 2026 partwarp contributors
 *
 * SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include <optional>

#include "partwarp/camera.hpp"
#include "partwarp/rotation.hpp"
#include "partwarp/vec3.hpp"

namespace partwarp {

/* Hinge motion of one part: rotate by `angle` radians about the line
 * through axis_point (model space) with direction axis_dir. */
struct PartMotion {
  Vec3 axis_point;
  Vec3 axis_dir;  // unit length within 1e-6; renormalized on use
  double angle = 0.0;
};

/* Rotate a model-space point about the hinge.  angle == 0.0 returns the
 * input unchanged so that a rest pose stays bit-identical through the
 * whole pipeline. */
Vec3 articulate_point(const Vec3 &p_model, const PartMotion &motion);

enum class PixelRounding { kFloor, kNearest };

/* Map a source pixel with known depth to its articulated position: lift to
 * model space, rotate about the hinge, reproject, round.  Returns nothing
 * when the moved point ends up behind the camera. */
std::optional<Pixel> forward_map_pixel(const PixelCoord &u, double depth,
                                       const CameraIntrinsics &k,
                                       const RigidPose &pose,
                                       const PartMotion &motion,
                                       PixelRounding rounding =
                                           PixelRounding::kFloor);

/* Rounding used by the forward map.  Floor carries a +1e-9 nudge so that
 * values which are integers up to accumulated round-off land on the
 * integer instead of the cell below. */
int round_pixel_axis(double x, PixelRounding rounding);

}  // namespace partwarp
