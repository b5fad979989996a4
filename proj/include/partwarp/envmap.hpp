/* SPDX-FileCopyrightText: 2026 partwarp contributors
 *
 * SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include <string>
#include <vector>

#include "partwarp/vec3.hpp"

namespace partwarp {

/* Equirectangular radiance map, linear radiometry, camera-frame
 * directions.  Row v spans the polar angle top-down ("up" is -y, matching
 * image v pointing down); column u spans azimuth. */
struct EnvironmentMap {
  int width = 0;
  int height = 0;
  std::vector<double> rgb;  // 3 per texel, >= 0

  Vec3 radiance(int x, int y) const {
    const size_t o = 3 * (size_t(y) * width + x);
    return {rgb[o], rgb[o + 1], rgb[o + 2]};
  }
};

/* Direction of the texel center: theta = (y+0.5)/H * pi from straight up,
 * phi = (x+0.5)/W * 2*pi around. */
Vec3 texel_direction(int x, int y, int width, int height);

/* Solid angle subtended by any texel in row y. */
double texel_solid_angle(int y, int width, int height);

/* Cosine-weighted irradiance arriving at a surface with unit normal n:
 * E(n) = sum over texels of L * max(0, n . omega) * d_omega. */
Vec3 irradiance(const EnvironmentMap &env, const Vec3 &n);

/* Box-average radiance down to at most max_w x max_h texels; returns the
 * input untouched when it is already small enough. */
EnvironmentMap downsample_environment(const EnvironmentMap &env, int max_w,
                                      int max_h);

/* Load from PNG (8-bit values read as linear [0,1]) or PFM (32-bit float
 * radiance), keyed by file extension. */
EnvironmentMap load_environment(const std::string &path);

}  // namespace partwarp
