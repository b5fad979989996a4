/* SPDX-FileCopyrightText: 2026 partwarp contributors
 *
 * SPDX-License-Identifier: Apache-2.0 */

#include "partwarp/hole_fill.hpp"

#include <algorithm>
#include <cmath>

#include "partwarp/errors.hpp"
#include "partwarp/log.hpp"

namespace partwarp {

namespace {

struct Candidate {
  int64_t d2;  // exact squared pixel distance
  int y;
  int x;

  bool operator<(const Candidate &o) const {
    if (d2 != o.d2) return d2 < o.d2;
    if (y != o.y) return y < o.y;
    return x < o.x;
  }
};

/* The `need` nearest valid pixels around (hx, hy), ordered by squared
 * distance with (y, x) as the tie break.  Expands square rings until no
 * unscanned pixel could still enter the result. */
std::vector<Candidate> nearest_valid(const SplatBuffer &buf, int hx, int hy,
                                     size_t need) {
  std::vector<Candidate> found;
  const int max_r =
      std::max(std::max(hx, buf.width - 1 - hx),
               std::max(hy, buf.height - 1 - hy));

  auto consider = [&](int x, int y) {
    if (x < 0 || y < 0 || x >= buf.width || y >= buf.height) return;
    if (!buf.valid_at(x, y)) return;
    const int64_t dx = x - hx, dy = y - hy;
    found.push_back({dx * dx + dy * dy, y, x});
  };

  for (int r = 0;; ++r) {
    if (r == 0) {
      consider(hx, hy);
    } else {
      for (int x = hx - r; x <= hx + r; ++x) {
        consider(x, hy - r);
        consider(x, hy + r);
      }
      for (int y = hy - r + 1; y <= hy + r - 1; ++y) {
        consider(hx - r, y);
        consider(hx + r, y);
      }
    }

    if (found.size() >= need) {
      std::nth_element(found.begin(), found.begin() + (need - 1), found.end());
      const int64_t kth = found[need - 1].d2;
      // anything beyond ring r sits at squared distance >= (r+1)^2; only
      // stop once even a tie there could not replace the current set
      if (kth < int64_t(r + 1) * (r + 1)) break;
    }
    if (r > max_r) break;  // whole image scanned
  }

  std::sort(found.begin(), found.end());
  if (found.size() > need) found.resize(need);
  return found;
}

}  // namespace

SplatBuffer fill_holes(const SplatBuffer &buf, const std::vector<Pixel> &holes,
                       int neighbor_count, HoleFillVariant variant) {
  if (neighbor_count < 1)
    throw config_error("hole fill neighbor count must be at least 1");

  SplatBuffer out = buf;
  if (holes.empty()) return out;

  size_t n_valid = 0;
  for (uint8_t v : buf.valid) n_valid += v ? 1 : 0;
  if (n_valid == 0)
    throw unfillable_region_error(
        "cannot fill holes: splat buffer has no valid pixel");

  size_t k = static_cast<size_t>(neighbor_count);
  if (n_valid < k + 1) {
    k = n_valid - 1;
    warn("hole fill: only " + std::to_string(n_valid) +
         " valid pixels; reducing neighbor count to " + std::to_string(k));
  }

  for (const Pixel &h : holes) {
    if (buf.valid_at(h.x, h.y))
      throw geometry_error("hole list overlaps valid pixels");

    const auto cand = nearest_valid(buf, h.x, h.y, k + 1);

    const size_t idx = size_t(h.y) * buf.width + h.x;
    double color[3] = {0, 0, 0};
    double depth = 0.0;

    if (k == 0) {
      // single usable pixel: plain copy
      const Vec3 c = buf.color_at(cand[0].x, cand[0].y);
      color[0] = c.x;
      color[1] = c.y;
      color[2] = c.z;
      depth = buf.depth[size_t(cand[0].y) * buf.width + cand[0].x];
    } else {
      const bool squared = variant == HoleFillVariant::kSquaredDistance;
      const double d_max = squared ? static_cast<double>(cand[k].d2)
                                   : std::sqrt(static_cast<double>(cand[k].d2));
      std::vector<double> w(k);
      double sum = 0.0;
      for (size_t i = 0; i < k; ++i) {
        const double d = squared ? static_cast<double>(cand[i].d2)
                                 : std::sqrt(static_cast<double>(cand[i].d2));
        const double base = 1.0 - d / d_max;
        w[i] = base * base;
        sum += w[i];
      }
      for (size_t i = 0; i < k; ++i) {
        // degenerate all-equidistant case: fall back to a uniform blend
        const double wn = sum > 0.0 ? w[i] / sum : 1.0 / static_cast<double>(k);
        const size_t ci = size_t(cand[i].y) * buf.width + cand[i].x;
        color[0] += wn * buf.color[3 * ci];
        color[1] += wn * buf.color[3 * ci + 1];
        color[2] += wn * buf.color[3 * ci + 2];
        depth += wn * buf.depth[ci];
      }
    }

    out.valid[idx] = 1;
    out.depth[idx] = depth;
    out.src[idx] = -1;  // synthesized, no single source pixel
    out.color[3 * idx] = color[0];
    out.color[3 * idx + 1] = color[1];
    out.color[3 * idx + 2] = color[2];
  }
  return out;
}

}  // namespace partwarp
