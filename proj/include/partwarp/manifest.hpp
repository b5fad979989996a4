/* SPDX-FileCopyrightText: 2026 partwarp contributors
 *
 * SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "partwarp/augment.hpp"
#include "partwarp/json_util.hpp"
#include "partwarp/metrics.hpp"

namespace partwarp {

inline constexpr const char *kGeneratorVersion = "partwarp-0.1.0";

/* One emitted sample as recorded on disk.  Paths are relative to the
 * dataset root.  `confidence` only appears in prediction manifests. */
struct ManifestSample {
  std::string id;
  std::string image;
  std::string instance_mask;
  std::string part_mask;
  PixelBox bbox;
  std::vector<uint8_t> state;
  bool has_confidence = false;
  double confidence = 1.0;
  std::string source_image;
  uint64_t instance_index = 0;
  uint64_t seed = 0;
  std::vector<PlanEdit> edits;
};

struct RejectionRecord {
  uint64_t plan_index = 0;
  uint64_t instance_index = 0;
  std::string reason;
};

struct DatasetManifest {
  std::string generator = kGeneratorVersion;
  std::string taxonomy_version;
  uint64_t master_seed = 0;
  std::vector<ManifestSample> samples;
  std::vector<RejectionRecord> rejected;
};

/* Sample ids are the plan index, zero-padded: rejected plans leave gaps,
 * which keeps ids stable under any rejection pattern. */
std::string sample_id(size_t plan_index);

/* The three PNGs of one sample, under images/ and masks/. */
void write_sample_files(const AugmentedSample &s, const std::string &id,
                        const std::string &out_dir);

ManifestSample to_manifest_entry(const AugmentedSample &s,
                                 const std::string &id);

Json manifest_to_json(const DatasetManifest &m);
DatasetManifest parse_manifest(const Json &doc,
                               const std::string &origin = "manifest");

void write_manifest(const DatasetManifest &m, const std::string &out_dir);

struct PlannedSample {
  size_t plan_index = 0;
  AugmentedSample sample;
};

/* Serial emission path: write every sample's files, then the manifest.
 * Rerunning with identical inputs reproduces every byte. */
DatasetManifest emit_dataset(const std::vector<PlannedSample> &samples,
                             const std::vector<RejectionRecord> &rejected,
                             const std::string &taxonomy_version,
                             uint64_t master_seed, const std::string &out_dir);

/* Pair a ground-truth and a prediction manifest for scoring: samples are
 * grouped by image path; missing confidence defaults to 1.  Taxonomy
 * version mismatch throws config_error. */
struct EvalInputs {
  std::vector<GroundTruth> gts;
  std::vector<Detection> dets;
};
EvalInputs manifests_to_eval(const DatasetManifest &gt,
                             const DatasetManifest &pred);

}  // namespace partwarp
