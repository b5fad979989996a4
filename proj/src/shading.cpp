/* SPDX-FileCopyrightText: 2026 partwarp contributors
 *
 * SPDX-License-Identifier: Apache-2.0 */

#include "partwarp/shading.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

namespace partwarp {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

ShadeResult shade_reverse_side(const CameraSoup &soup,
                               const IndexedDepthMap &map, const Vec3 &albedo,
                               const EnvironmentMap &env) {
  ShadeResult out;
  out.color = RgbImage(map.width, map.height);
  out.mask = Mask(map.width, map.height);

  // the raster records source-mesh triangle indices; map them back to
  // soup triangles to reach camera-space vertices
  std::unordered_map<int32_t, size_t> soup_index;
  soup_index.reserve(soup.tris.size());
  for (size_t i = 0; i < soup.tris.size(); ++i)
    soup_index.emplace(static_cast<int32_t>(soup.source[i]), i);

  struct TriShade {
    bool back = false;
    Vec3 color;
  };
  std::unordered_map<size_t, TriShade> cache;

  for (int y = 0; y < map.height; ++y)
    for (int x = 0; x < map.width; ++x) {
      const size_t idx = size_t(y) * map.width + x;
      if (!map.valid[idx]) continue;
      const auto found = soup_index.find(map.tri[idx]);
      if (found == soup_index.end()) continue;  // not from this soup
      const size_t si = found->second;

      auto cached = cache.find(si);
      if (cached == cache.end()) {
        const Tri &t = soup.tris[si];
        const Vec3 &a = soup.verts[t.a];
        const Vec3 &b = soup.verts[t.b];
        const Vec3 &c = soup.verts[t.c];
        TriShade ts;
        const Vec3 raw = (b - a).cross(c - a);
        const double len = raw.norm();
        if (len > 0.0 && !triangle_front_facing(a, b, c)) {
          ts.back = true;
          // visible side of a back-facing triangle has the flipped normal
          const Vec3 n = raw / -len;
          const Vec3 e = irradiance(env, n);
          ts.color = {std::clamp(albedo.x * e.x / kPi, 0.0, 1.0),
                      std::clamp(albedo.y * e.y / kPi, 0.0, 1.0),
                      std::clamp(albedo.z * e.z / kPi, 0.0, 1.0)};
        }
        cached = cache.emplace(si, ts).first;
      }

      if (!cached->second.back) continue;
      out.color.set(x, y, cached->second.color);
      out.mask.set(x, y, true);
    }
  return out;
}

ShadeResult shade_reverse_side(
    const ArticulatedMesh &mesh,
    const std::function<bool(const std::string &)> &part_filter,
    const PartMotion &motion, const RigidPose &pose,
    const CameraIntrinsics &k, const EnvironmentMap &env, const Vec3 &albedo,
    int width, int height) {
  const CameraSoup soup =
      build_camera_soup(mesh, part_filter, pose, &motion, nullptr);
  const IndexedDepthMap map = rasterize_soup(soup, k, width, height);
  return shade_reverse_side(soup, map, albedo, env);
}

}  // namespace partwarp
