/* SPDX-FileCopyrightText: 2026 partwarp contributors
 *
 * SPDX-License-Identifier: Apache-2.0 */

#include "partwarp/splat.hpp"

#include "partwarp/errors.hpp"

namespace partwarp {

void SplatBuffer::deposit(int x, int y, const Vec3 &c, double z,
                          int64_t source_index) {
  const size_t idx = size_t(y) * width + x;
  if (valid[idx]) {
    if (z > depth[idx]) return;
    if (z == depth[idx] && source_index >= src[idx]) return;
  }
  valid[idx] = 1;
  depth[idx] = z;
  src[idx] = source_index;
  const size_t o = 3 * idx;
  color[o] = c.x;
  color[o + 1] = c.y;
  color[o + 2] = c.z;
}

SplatBuffer warp_part(const RgbImage &src, const DepthMap &part_depth,
                      const CameraIntrinsics &k, const RigidPose &pose,
                      const PartMotion &motion, PixelRounding rounding) {
  if (src.width != part_depth.width || src.height != part_depth.height)
    throw geometry_error("warp: image and depth dimensions differ");

  SplatBuffer buf(src.width, src.height);
  for (int y = 0; y < src.height; ++y) {
    for (int x = 0; x < src.width; ++x) {
      if (!part_depth.valid_at(x, y)) continue;
      const double d = part_depth.depth_at(x, y);
      // the rasterized depth belongs to the pixel center
      const PixelCoord u{x + 0.5, y + 0.5};
      const Vec3 p_model = back_project(u, d, k, pose);
      const Vec3 moved = articulate_point(p_model, motion);
      const Vec3 p_cam = pose.r.apply(moved) + pose.t;
      if (!(p_cam.z > 0.0)) continue;  // swung behind the camera
      const PixelCoord target = project(p_cam, k);
      const int tx = round_pixel_axis(target.u, rounding);
      const int ty = round_pixel_axis(target.v, rounding);
      if (tx < 0 || ty < 0 || tx >= src.width || ty >= src.height) continue;
      buf.deposit(tx, ty, src.get(x, y), p_cam.z,
                  int64_t(y) * src.width + x);
    }
  }
  return buf;
}

std::vector<Pixel> find_holes(const Mask &new_silhouette,
                              const SplatBuffer &buf) {
  if (new_silhouette.width != buf.width ||
      new_silhouette.height != buf.height)
    throw geometry_error("find_holes: mask and buffer dimensions differ");
  std::vector<Pixel> holes;
  for (int y = 0; y < buf.height; ++y)
    for (int x = 0; x < buf.width; ++x)
      if (new_silhouette.get(x, y) && !buf.valid_at(x, y))
        holes.push_back({x, y});
  return holes;
}

}  // namespace partwarp
