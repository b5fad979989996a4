/* SPDX-FileCopyrightText: 2026 partwarp contributors
 *
 * SPDX-License-Identifier: Apache-2.0 */

#include "partwarp/image.hpp"

#include <cmath>

namespace partwarp {

RgbImage to_working(const Image8 &img) {
  RgbImage out(img.width, img.height);
  for (size_t i = 0; i < img.px.size(); ++i) out.px[i] = img.px[i] / 255.0;
  return out;
}

uint8_t quantize_channel(double v) {
  if (!(v > 0.0)) return 0;  // also catches NaN
  if (v >= 1.0) return 255;
  return static_cast<uint8_t>(std::floor(v * 255.0 + 0.5));
}

Image8 quantize(const RgbImage &img) {
  Image8 out;
  out.width = img.width;
  out.height = img.height;
  out.px.resize(img.px.size());
  for (size_t i = 0; i < img.px.size(); ++i)
    out.px[i] = quantize_channel(img.px[i]);
  return out;
}

}  // namespace partwarp
