/* SPDX-FileCopyrightText: 2026 partwarp contributors
 *
 * SPDX-License-Identifier: Apache-2.0 */

#include "partwarp/camera.hpp"

#include <cmath>

#include "partwarp/errors.hpp"

namespace partwarp {

void CameraIntrinsics::validate() const {
  if (!(fx > 0.0) || !(fy > 0.0))
    throw geometry_error("camera focal lengths must be positive");
  if (!std::isfinite(fx) || !std::isfinite(fy) || !std::isfinite(cx) ||
      !std::isfinite(cy))
    throw geometry_error("camera intrinsics must be finite");
}

PixelCoord project(const Vec3 &p_cam, const CameraIntrinsics &k) {
  if (!(p_cam.z > 0.0)) throw geometry_error("point is behind the camera");
  return {k.fx * p_cam.x / p_cam.z + k.cx, k.fy * p_cam.y / p_cam.z + k.cy};
}

Vec3 back_project(const PixelCoord &u, double depth,
                  const CameraIntrinsics &k, const RigidPose &pose) {
  if (!(depth > 0.0)) throw geometry_error("depth must be positive");
  const Vec3 p_cam{depth * (u.u - k.cx) / k.fx, depth * (u.v - k.cy) / k.fy,
                   depth};
  return pose.r.apply_transposed(p_cam - pose.t);
}

}  // namespace partwarp
