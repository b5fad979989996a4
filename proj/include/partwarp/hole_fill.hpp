/* SPDX-FileCopyrightText: 2026 partwarp contributors
 *
 * SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include <vector>

#include "partwarp/splat.hpp"

namespace partwarp {

/* Distance semantics for the falloff weights.  The default measures both
 * the per-neighbor distance and the cutoff d_max as SQUARED Euclidean
 * pixel distance, which keeps every weight in (0,1]; the plain variant is
 * available for comparison. */
enum class HoleFillVariant { kSquaredDistance, kPlainDistance };

/* Scattered-data interpolation of empty pixels.  Each hole h blends the
 * colors of its K nearest valid pixels with weights
 *     w_i = (1 - dist(h, u_i) / d_max)^2,
 * normalized to sum to one, where d_max is the distance to the (K+1)-th
 * nearest valid pixel.  Neighbors always come from the original valid
 * set, never from freshly filled holes, so fill order cannot matter.
 * Filled pixels become valid with depth = the same blend of neighbor
 * depths.
 *
 * Fewer than K+1 valid pixels in the buffer reduces K to (valid - 1) with
 * a warning; zero valid pixels raises unfillable_region_error. */
SplatBuffer fill_holes(const SplatBuffer &buf, const std::vector<Pixel> &holes,
                       int neighbor_count = 8,
                       HoleFillVariant variant = HoleFillVariant::kSquaredDistance);

}  // namespace partwarp
