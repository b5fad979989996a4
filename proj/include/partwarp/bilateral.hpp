/* SPDX-FileCopyrightText: 2026 partwarp contributors
 *
 * SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include "partwarp/image.hpp"

namespace partwarp {

/* Classical bilateral filter applied to the pixels of `region` only;
 * everything else passes through untouched.  Window radius is
 * ceil(3*sigma_s); the range kernel is a Gaussian in Euclidean RGB
 * distance.  Window sources are drawn from the whole image so edited
 * regions blend against their surroundings. */
RgbImage bilateral_smooth(const RgbImage &img, const Mask &region,
                          double sigma_s, double sigma_r);

}  // namespace partwarp
