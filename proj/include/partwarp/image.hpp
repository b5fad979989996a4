/* SPDX-FileCopyrightText: 2026 partwarp contributors
 *
 * SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include <cstdint>
#include <vector>

#include "partwarp/depth_map.hpp"
#include "partwarp/vec3.hpp"

namespace partwarp {

/* Working-space image: linear RGB, one double per channel in [0,1].
 * Quantization to 8 bits happens only at I/O boundaries. */
struct RgbImage {
  int width = 0;
  int height = 0;
  std::vector<double> px;  // 3 * width * height, interleaved

  RgbImage() = default;
  RgbImage(int w, int h) : width(w), height(h), px(size_t(3) * w * h, 0.0) {}

  size_t offset(int x, int y) const { return 3 * (size_t(y) * width + x); }

  Vec3 get(int x, int y) const {
    const size_t o = offset(x, y);
    return {px[o], px[o + 1], px[o + 2]};
  }
  void set(int x, int y, const Vec3 &c) {
    const size_t o = offset(x, y);
    px[o] = c.x;
    px[o + 1] = c.y;
    px[o + 2] = c.z;
  }
};

/* 8-bit interleaved RGB as stored on disk. */
struct Image8 {
  int width = 0;
  int height = 0;
  std::vector<uint8_t> px;  // 3 * width * height

  bool operator==(const Image8 &o) const {
    return width == o.width && height == o.height && px == o.px;
  }
};

/* v / 255 per channel; exact in double. */
RgbImage to_working(const Image8 &img);

/* clamp to [0,1], then round half up to 8 bits */
Image8 quantize(const RgbImage &img);

uint8_t quantize_channel(double v);

}  // namespace partwarp
