/* SPDX-FileCopyrightText: 2026 partwarp contributors
 *
 * SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "partwarp/parts.hpp"
#include "partwarp/state.hpp"

namespace partwarp {

enum class EditKind { kMotion, kLight };

/* One requested edit.  Motion edits name a movable part and a hinge angle
 * (state_name carries the matching taxonomy state when one exists); light
 * edits name a taxonomy light state. */
struct PlanEdit {
  EditKind kind = EditKind::kMotion;
  std::string part_id;
  double angle = 0.0;
  std::string state_name;
};

struct AugmentationPlan {
  size_t instance_index = 0;
  uint64_t seed = 0;  // derived per-plan, recorded for provenance
  std::vector<PlanEdit> edits;
};

/* kSinglePart: each plan carries exactly one edit.  kMixed: one to three
 * distinct edits per plan. */
enum class PlanPolicy { kSinglePart, kMixed };

/* Draw `samples` plans, round-robin over instances.  Candidates are the
 * movable parts of the catalog plus every taxonomy light state touching
 * at least one cataloged semantic part; motion angles are uniform over
 * the part's declared range.  Plan i is seeded with
 * derive_seed(master_seed, i), so the list is reproducible and any plan
 * can be regenerated alone.  No candidates at all yields an empty list
 * with a warning. */
std::vector<AugmentationPlan> plan_augmentations(size_t instance_count,
                                                 const PartCatalog &parts,
                                                 const StateTaxonomy &taxonomy,
                                                 PlanPolicy policy,
                                                 size_t samples,
                                                 uint64_t master_seed);

}  // namespace partwarp
