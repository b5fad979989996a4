/* SPDX-FileCopyrightText: 2026 partwarp contributors
 *
 * SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include "partwarp/rotation.hpp"
#include "partwarp/vec3.hpp"

namespace partwarp {

/* Pinhole intrinsics.  Pixel coordinates are (u, v) with u to the right and
 * v down; the camera looks along +z. */
struct CameraIntrinsics {
  double fx = 0.0;
  double fy = 0.0;
  double cx = 0.0;
  double cy = 0.0;

  void validate() const;  // fx, fy > 0 and all finite
};

/* Model-to-camera transform: P_cam = r * P_model + t. */
struct RigidPose {
  Rotation r;
  Vec3 t;
};

/* Continuous image position, in pixels. */
struct PixelCoord {
  double u = 0.0;
  double v = 0.0;
};

/* Discrete pixel. */
struct Pixel {
  int x = 0;
  int y = 0;
  constexpr bool operator==(const Pixel &o) const {
    return x == o.x && y == o.y;
  }
};

/* Perspective projection of a camera-space point.  Throws geometry_error
 * when the point does not lie strictly in front of the camera. */
PixelCoord project(const Vec3 &p_cam, const CameraIntrinsics &k);

/* Lift pixel u with depth d (camera z, in meters) back to model space:
 * invert the intrinsics, scale by depth, then invert the pose.  depth must
 * be > 0. */
Vec3 back_project(const PixelCoord &u, double depth, const CameraIntrinsics &k,
                  const RigidPose &pose);

}  // namespace partwarp
