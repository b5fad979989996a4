/* SPDX-FileCopyrightText: 2026 partwarp contributors
 *
 * SPDX-License-Identifier: Apache-2.0 */

#include "partwarp/bilateral.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "partwarp/errors.hpp"

namespace partwarp {

RgbImage bilateral_smooth(const RgbImage &img, const Mask &region,
                          double sigma_s, double sigma_r) {
  if (!(sigma_s > 0.0) || !(sigma_r > 0.0))
    throw config_error("bilateral sigmas must be positive");
  if (region.width != img.width || region.height != img.height)
    throw geometry_error("bilateral: region and image dimensions differ");

  const int radius = static_cast<int>(std::ceil(3.0 * sigma_s));
  const int win = 2 * radius + 1;

  // spatial kernel is fixed per offset
  std::vector<double> spatial(size_t(win) * win);
  const double inv_2ss = 1.0 / (2.0 * sigma_s * sigma_s);
  for (int dy = -radius; dy <= radius; ++dy)
    for (int dx = -radius; dx <= radius; ++dx)
      spatial[size_t(dy + radius) * win + (dx + radius)] =
          std::exp(-(double(dx) * dx + double(dy) * dy) * inv_2ss);

  const double inv_2sr = 1.0 / (2.0 * sigma_r * sigma_r);

  RgbImage out = img;
  for (int y = 0; y < img.height; ++y) {
    for (int x = 0; x < img.width; ++x) {
      if (!region.get(x, y)) continue;

      const size_t co = img.offset(x, y);
      const double c0 = img.px[co], c1 = img.px[co + 1], c2 = img.px[co + 2];

      // accumulate deviations from the center pixel: a constant window
      // then yields an exactly zero correction, making constant images a
      // true fixed point
      double acc0 = 0.0, acc1 = 0.0, acc2 = 0.0, wsum = 0.0;
      double lo0 = c0, hi0 = c0, lo1 = c1, hi1 = c1, lo2 = c2, hi2 = c2;

      const int y_lo = std::max(0, y - radius), y_hi = std::min(img.height - 1, y + radius);
      const int x_lo = std::max(0, x - radius), x_hi = std::min(img.width - 1, x + radius);
      for (int ny = y_lo; ny <= y_hi; ++ny) {
        const double *srow = &spatial[size_t(ny - y + radius) * win];
        const double *prow = &img.px[img.offset(x_lo, ny)];
        for (int nx = x_lo; nx <= x_hi; ++nx, prow += 3) {
          const double d0 = prow[0] - c0;
          const double d1 = prow[1] - c1;
          const double d2 = prow[2] - c2;
          const double range_arg = -(d0 * d0 + d1 * d1 + d2 * d2) * inv_2sr;
          // weights below ~1e-18 cannot move the result at double precision
          if (range_arg < -40.0) continue;
          const double w = srow[nx - x + radius] * std::exp(range_arg);
          acc0 += w * d0;
          acc1 += w * d1;
          acc2 += w * d2;
          wsum += w;
          lo0 = std::min(lo0, prow[0]);
          hi0 = std::max(hi0, prow[0]);
          lo1 = std::min(lo1, prow[1]);
          hi1 = std::max(hi1, prow[1]);
          lo2 = std::min(lo2, prow[2]);
          hi2 = std::max(hi2, prow[2]);
        }
      }

      // wsum >= center weight = 1, so the division is always safe; clamp
      // to the window range to keep the convex-combination guarantee
      // airtight against round-off
      out.px[co] = std::clamp(c0 + acc0 / wsum, lo0, hi0);
      out.px[co + 1] = std::clamp(c1 + acc1 / wsum, lo1, hi1);
      out.px[co + 2] = std::clamp(c2 + acc2 / wsum, lo2, hi2);
    }
  }
  return out;
}

}  // namespace partwarp
