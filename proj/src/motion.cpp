/* SPDX-FileCopyrightText: 2026 partwarp contributors
 *
 * SPDX-License-Identifier: Apache-2.0 */

#include "partwarp/motion.hpp"

#include <cmath>

#include "partwarp/errors.hpp"

namespace partwarp {

Vec3 articulate_point(const Vec3 &p_model, const PartMotion &motion) {
  if (motion.angle == 0.0) return p_model;
  const Rotation r = Rotation::from_axis_angle(motion.axis_dir, motion.angle);
  return r.apply(p_model - motion.axis_point) + motion.axis_point;
}

int round_pixel_axis(double x, PixelRounding rounding) {
  switch (rounding) {
    case PixelRounding::kNearest:
      return static_cast<int>(std::floor(x + 0.5));
    case PixelRounding::kFloor:
    default:
      return static_cast<int>(std::floor(x + 1e-9));
  }
}

std::optional<Pixel> forward_map_pixel(const PixelCoord &u, double depth,
                                       const CameraIntrinsics &k,
                                       const RigidPose &pose,
                                       const PartMotion &motion,
                                       PixelRounding rounding) {
  const Vec3 p_model = back_project(u, depth, k, pose);
  const Vec3 moved = articulate_point(p_model, motion);
  const Vec3 p_cam = pose.r.apply(moved) + pose.t;
  if (!(p_cam.z > 0.0)) return std::nullopt;
  const PixelCoord uv = project(p_cam, k);
  return Pixel{round_pixel_axis(uv.u, rounding), round_pixel_axis(uv.v, rounding)};
}

}  // namespace partwarp
