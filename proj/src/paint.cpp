/* SPDX-FileCopyrightText: 2026 partwarp contributors
 *
 * SPDX-License-Identifier: Apache-2.0 */

#include "partwarp/paint.hpp"

#include "partwarp/errors.hpp"

namespace partwarp {

RgbImage fill_interior(const RgbImage &img, const Mask &vacated_region,
                       double gray) {
  if (vacated_region.width != img.width ||
      vacated_region.height != img.height)
    throw geometry_error("fill_interior: dimension mismatch");
  RgbImage out = img;
  for (int y = 0; y < img.height; ++y)
    for (int x = 0; x < img.width; ++x)
      if (vacated_region.get(x, y)) out.set(x, y, {gray, gray, gray});
  return out;
}

RgbImage recolor_semantic(const RgbImage &img, const Mask &region,
                          const Vec3 &color, double alpha) {
  if (region.width != img.width || region.height != img.height)
    throw geometry_error("recolor_semantic: dimension mismatch");
  RgbImage out = img;
  for (int y = 0; y < img.height; ++y)
    for (int x = 0; x < img.width; ++x)
      if (region.get(x, y))
        out.set(x, y, img.get(x, y) * (1.0 - alpha) + color * alpha);
  return out;
}

RgbImage composite(const RgbImage &src, const std::vector<Layer> &layers) {
  RgbImage out = src;
  for (const Layer &layer : layers) {
    if (layer.image.width != src.width || layer.image.height != src.height ||
        layer.mask.width != src.width || layer.mask.height != src.height)
      throw geometry_error("composite: layer dimension mismatch");
    for (int y = 0; y < src.height; ++y)
      for (int x = 0; x < src.width; ++x)
        if (layer.mask.get(x, y)) out.set(x, y, layer.image.get(x, y));
  }
  return out;
}

}  // namespace partwarp
