/* SPDX-FileCopyrightText: 2026 partwarp contributors
 *
 * SPDX-License-Identifier: Apache-2.0 */

#include "partwarp/plan.hpp"

#include <algorithm>

#include "partwarp/log.hpp"
#include "partwarp/rng.hpp"

namespace partwarp {

namespace {

struct Candidate {
  EditKind kind;
  const PartSpec *part = nullptr;   // motion
  const StateDef *state = nullptr;  // light
};

std::vector<Candidate> collect_candidates(const PartCatalog &parts,
                                          const StateTaxonomy &taxonomy) {
  std::vector<Candidate> out;
  for (const PartSpec &p : parts.parts)
    if (p.kind == PartKind::kMovable) out.push_back({EditKind::kMotion, &p, nullptr});
  for (const StateDef &s : taxonomy.states) {
    if (s.kind != StateKind::kLight) continue;
    const bool usable = std::any_of(
        s.parts.begin(), s.parts.end(), [&](const std::string &id) {
          const PartSpec *p = parts.find(id);
          return p != nullptr && p->kind == PartKind::kSemantic;
        });
    if (usable) out.push_back({EditKind::kLight, nullptr, &s});
  }
  return out;
}

}  // namespace

std::vector<AugmentationPlan> plan_augmentations(size_t instance_count,
                                                 const PartCatalog &parts,
                                                 const StateTaxonomy &taxonomy,
                                                 PlanPolicy policy,
                                                 size_t samples,
                                                 uint64_t master_seed) {
  const std::vector<Candidate> candidates = collect_candidates(parts, taxonomy);
  if (candidates.empty()) {
    warn("no movable or semantic parts available; planning nothing");
    return {};
  }
  if (instance_count == 0) return {};

  // motion edits annotate the taxonomy state they realize, when one exists
  std::vector<std::string> motion_state(parts.parts.size());
  for (const StateDef &s : taxonomy.states)
    if (s.kind == StateKind::kMotion && s.parts.size() == 1)
      for (size_t pi = 0; pi < parts.parts.size(); ++pi)
        if (parts.parts[pi].id == s.parts[0]) motion_state[pi] = s.name;

  std::vector<AugmentationPlan> plans;
  plans.reserve(samples);
  for (size_t i = 0; i < samples; ++i) {
    AugmentationPlan plan;
    plan.instance_index = i % instance_count;
    plan.seed = derive_seed(master_seed, i);
    Rng rng(plan.seed);

    size_t want = policy == PlanPolicy::kSinglePart ? 1 : 1 + rng.below(3);
    want = std::min(want, candidates.size());

    std::vector<uint8_t> used(candidates.size(), 0);
    while (plan.edits.size() < want) {
      const size_t ci = rng.below(candidates.size());
      if (used[ci]) continue;
      used[ci] = 1;
      const Candidate &c = candidates[ci];
      PlanEdit edit;
      edit.kind = c.kind;
      if (c.kind == EditKind::kMotion) {
        edit.part_id = c.part->id;
        edit.angle = rng.uniform(c.part->angle_min, c.part->angle_max);
        for (size_t pi = 0; pi < parts.parts.size(); ++pi)
          if (&parts.parts[pi] == c.part) edit.state_name = motion_state[pi];
      } else {
        edit.state_name = c.state->name;
      }
      plan.edits.push_back(std::move(edit));
    }
    plans.push_back(std::move(plan));
  }
  return plans;
}

}  // namespace partwarp
