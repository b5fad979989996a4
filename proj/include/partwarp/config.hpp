/* SPDX-FileCopyrightText: 2026 partwarp contributors
 *
 * SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "partwarp/augment.hpp"
#include "partwarp/envmap.hpp"
#include "partwarp/instance.hpp"
#include "partwarp/json_util.hpp"
#include "partwarp/mesh.hpp"
#include "partwarp/parts.hpp"
#include "partwarp/plan.hpp"
#include "partwarp/state.hpp"

namespace partwarp {

/* Every run setting in one place.  File values override the defaults
 * here; command-line flags override the file.  Relative paths inside a
 * config file resolve against the file's own directory. */
struct RunConfig {
  std::string mesh;         // OBJ model
  std::string labels;       // triangle-label document
  std::string parts;        // part catalog document
  std::string instances;    // instance document
  std::string environment;  // equirectangular map, PNG or PFM
  std::string taxonomy;     // empty = built-in 12-state vocabulary
  std::string out = "dataset";
  uint64_t seed = 0;
  uint64_t samples = 8;
  PlanPolicy policy = PlanPolicy::kSinglePart;
  int jobs = 1;
  SynthesisParams synth;
  double map_threshold = 0.5;
  AngleDefaults angles;
};

RunConfig parse_run_config(const Json &doc, const std::string &origin,
                           const std::string &base_dir);
RunConfig load_run_config(const std::string &path);

/* Range checks, applied after flag overrides. */
void validate_run_config(const RunConfig &cfg);

/* Everything a command needs in memory.  Loading enforces that every
 * instance references the labeled mesh. */
struct AssetBundle {
  ArticulatedMesh mesh;
  PartCatalog parts;
  StateTaxonomy taxonomy;
  std::vector<VehicleInstance> instances;
  EnvironmentMap environment;
};

AssetBundle load_assets(const RunConfig &cfg, bool need_environment);

}  // namespace partwarp
