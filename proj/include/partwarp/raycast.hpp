/* SPDX-FileCopyrightText: 2026 partwarp contributors
 *
 * SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include <optional>
#include <set>
#include <string>

#include "partwarp/raster.hpp"

namespace partwarp {

/* Exhaustive ray-triangle intersection through the center of one pixel.
 * Deliberately brute force and structured nothing like the z-buffer path:
 * it exists to cross-check rasterize_depth. */
std::optional<double> raycast_depth_oracle(const ArticulatedMesh &mesh,
                                           const std::set<std::string> &part_filter,
                                           const RigidPose &pose,
                                           const CameraIntrinsics &k,
                                           const Pixel &pixel);

/* Same test against an already-built camera-space soup. */
std::optional<double> raycast_soup(const CameraSoup &soup,
                                   const CameraIntrinsics &k,
                                   const Pixel &pixel);

}  // namespace partwarp
