/* SPDX-FileCopyrightText: 2026 partwarp contributors
 *
 * SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include <vector>

#include "partwarp/image.hpp"

namespace partwarp {

/* Paint a vacated region the flat interior color. */
RgbImage fill_interior(const RgbImage &img, const Mask &vacated_region,
                       double gray);

/* Alpha-blend a signal color over lamp pixels. */
RgbImage recolor_semantic(const RgbImage &img, const Mask &region,
                          const Vec3 &color, double alpha);

struct Layer {
  RgbImage image;
  Mask mask;
};

/* Painter's-order composite: later layers win where masks overlap. */
RgbImage composite(const RgbImage &src, const std::vector<Layer> &layers);

}  // namespace partwarp
