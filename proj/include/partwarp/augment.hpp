/* SPDX-FileCopyrightText: 2026 partwarp contributors
 *
 * SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "partwarp/envmap.hpp"
#include "partwarp/hole_fill.hpp"
#include "partwarp/image.hpp"
#include "partwarp/instance.hpp"
#include "partwarp/mesh.hpp"
#include "partwarp/motion.hpp"
#include "partwarp/parts.hpp"
#include "partwarp/plan.hpp"
#include "partwarp/state.hpp"

namespace partwarp {

/* Knobs of the synthesis stage.  Every field has a config key and a CLI
 * flag; the defaults here are the single source of truth. */
struct SynthesisParams {
  bool bilateral = true;
  double sigma_s = 3.0;
  double sigma_r = 0.1;
  int holefill_k = 8;
  HoleFillVariant holefill_variant = HoleFillVariant::kSquaredDistance;
  double gray = 128.0 / 255.0;
  double recolor_alpha = 0.7;
  PixelRounding rounding = PixelRounding::kFloor;
};

/* Integer pixel box, tight around a mask. */
struct PixelBox {
  int x = 0;
  int y = 0;
  int w = 0;
  int h = 0;

  bool operator==(const PixelBox &o) const {
    return x == o.x && y == o.y && w == o.w && h == o.h;
  }
};

/* Smallest box containing every on pixel; empty mask yields nothing. */
std::optional<PixelBox> tight_box(const Mask &m);

struct AugmentedSample {
  Image8 image;
  Mask instance_mask;  // whole vehicle, opened parts and interior included
  Mask part_mask;      // edited parts only (subset of instance_mask)
  PixelBox bbox;       // tight box of instance_mask
  StateVector state;
  // provenance
  std::string source_image;
  size_t instance_index = 0;
  uint64_t seed = 0;
  std::vector<PlanEdit> edits;
};

/* Execute one plan against one photographed instance:
 * rasterize the static scene and each moved part, forward-warp the part's
 * photo pixels, fill the holes, smooth, shade the revealed reverse side,
 * gray the vacated interior, recolor lamps, and derive the annotations.
 *
 * Throws domain_error (sample rejected) when the source image size
 * disagrees with the instance, when the vehicle is entirely out of frame,
 * or when a hole region has no valid pixel to borrow from
 * (unfillable_region_error).  Throws config_error when the plan names
 * parts or states that do not exist — that is a caller bug, not a data
 * problem. */
AugmentedSample augment_instance(const ArticulatedMesh &mesh,
                                 const PartCatalog &parts,
                                 const StateTaxonomy &taxonomy,
                                 const VehicleInstance &instance,
                                 const RgbImage &source,
                                 const AugmentationPlan &plan,
                                 const EnvironmentMap &env,
                                 const SynthesisParams &params);

}  // namespace partwarp
