/* SPDX-FileCopyrightText: 2026 partwarp contributors
 *
 * SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include "partwarp/envmap.hpp"
#include "partwarp/image.hpp"
#include "partwarp/raster.hpp"

namespace partwarp {

struct ShadeResult {
  RgbImage color;  // defined only where mask is on
  Mask mask;
};

/* Lambertian shading for the pixels of `map` whose winning triangle faces
 * away from the camera — the articulated part showing its reverse side,
 * where no photo texture exists.  Per pixel the color is
 * albedo * E(n) / pi with n the outward normal of the visible (back)
 * side and E the environment irradiance; the result is clamped to [0,1].
 * `soup` must be the same soup `map` was rasterized from.  Irradiance is
 * evaluated once per triangle since the geometric normal is constant
 * across it. */
ShadeResult shade_reverse_side(const CameraSoup &soup,
                               const IndexedDepthMap &map, const Vec3 &albedo,
                               const EnvironmentMap &env);

/* Convenience wrapper: articulate every triangle matching `part_filter`,
 * rasterize, and shade as above. */
ShadeResult shade_reverse_side(
    const ArticulatedMesh &mesh,
    const std::function<bool(const std::string &)> &part_filter,
    const PartMotion &motion, const RigidPose &pose,
    const CameraIntrinsics &k, const EnvironmentMap &env, const Vec3 &albedo,
    int width, int height);

}  // namespace partwarp
