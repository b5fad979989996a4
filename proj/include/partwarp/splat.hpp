/* SPDX-FileCopyrightText: 2026 partwarp contributors
 *
 * SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include <cstdint>
#include <vector>

#include "partwarp/camera.hpp"
#include "partwarp/image.hpp"
#include "partwarp/motion.hpp"

namespace partwarp {

/* Forward-warp target.  Collisions are resolved by nearest articulated
 * camera z; exact z ties fall back to the smaller source pixel index so
 * the result never depends on iteration order. */
struct SplatBuffer {
  int width = 0;
  int height = 0;
  std::vector<double> color;   // 3 per pixel, working space
  std::vector<double> depth;   // articulated camera z
  std::vector<uint8_t> valid;
  std::vector<int64_t> src;    // winning source pixel (row-major index), -1

  SplatBuffer() = default;
  SplatBuffer(int w, int h)
      : width(w),
        height(h),
        color(size_t(3) * w * h, 0.0),
        depth(size_t(w) * h, 0.0),
        valid(size_t(w) * h, 0),
        src(size_t(w) * h, -1) {}

  bool valid_at(int x, int y) const { return valid[size_t(y) * width + x] != 0; }

  Vec3 color_at(int x, int y) const {
    const size_t o = 3 * (size_t(y) * width + x);
    return {color[o], color[o + 1], color[o + 2]};
  }

  void deposit(int x, int y, const Vec3 &c, double z, int64_t source_index);
};

/* Forward-warp every valid pixel of part_depth: lift the pixel center to
 * the surface, swing it, reproject, round.  Out-of-frame and
 * behind-camera targets are dropped. */
SplatBuffer warp_part(const RgbImage &src, const DepthMap &part_depth,
                      const CameraIntrinsics &k, const RigidPose &pose,
                      const PartMotion &motion,
                      PixelRounding rounding = PixelRounding::kFloor);

/* Silhouette pixels the warp left empty, in row-major order. */
std::vector<Pixel> find_holes(const Mask &new_silhouette,
                              const SplatBuffer &buf);

}  // namespace partwarp
