/* SPDX-FileCopyrightText: 2026 partwarp contributors
 *
 * SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include <cassert>
#include <cstdint>
#include <limits>
#include <vector>

namespace partwarp {

/* Binary pixel set. */
struct Mask {
  int width = 0;
  int height = 0;
  std::vector<uint8_t> on;

  Mask() = default;
  Mask(int w, int h) : width(w), height(h), on(size_t(w) * h, 0) {}

  bool get(int x, int y) const { return on[size_t(y) * width + x] != 0; }
  void set(int x, int y, bool v) { on[size_t(y) * width + x] = v ? 1 : 0; }

  size_t count() const {
    size_t n = 0;
    for (uint8_t v : on) n += v ? 1 : 0;
    return n;
  }

  bool operator==(const Mask &o) const {
    return width == o.width && height == o.height && on == o.on;
  }
};

Mask mask_union(const Mask &a, const Mask &b);
Mask mask_intersect(const Mask &a, const Mask &b);
Mask mask_subtract(const Mask &a, const Mask &b);
/* 8-neighborhood morphology; image border counts as off. */
Mask erode8(const Mask &m);
Mask dilate8(const Mask &m);

/* Per-pixel camera-space depth.  Invalid pixels hold +inf and must be
 * checked before reading. */
struct DepthMap {
  int width = 0;
  int height = 0;
  std::vector<double> z;
  std::vector<uint8_t> valid;

  DepthMap() = default;
  DepthMap(int w, int h)
      : width(w),
        height(h),
        z(size_t(w) * h, std::numeric_limits<double>::infinity()),
        valid(size_t(w) * h, 0) {}

  bool valid_at(int x, int y) const { return valid[size_t(y) * width + x] != 0; }
  double depth_at(int x, int y) const {
    assert(valid_at(x, y));
    return z[size_t(y) * width + x];
  }
};

/* Depth plus the index of the winning triangle (into the caller's
 * triangle list; -1 where empty). */
struct IndexedDepthMap : DepthMap {
  std::vector<int32_t> tri;

  IndexedDepthMap() = default;
  IndexedDepthMap(int w, int h) : DepthMap(w, h), tri(size_t(w) * h, -1) {}
};

Mask silhouette_mask(const DepthMap &d);

}  // namespace partwarp
