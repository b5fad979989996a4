/* SPDX-FileCopyrightText: 2026 partwarp contributors
 *
 * SPDX-License-Identifier: Apache-2.0 */

#include "partwarp/manifest.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>

#include "partwarp/png_io.hpp"

namespace fs = std::filesystem;

namespace partwarp {

std::string sample_id(size_t plan_index) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "s%06zu", plan_index);
  return buf;
}

namespace {

std::string image_rel(const std::string &id) { return "images/" + id + ".png"; }
std::string instance_mask_rel(const std::string &id) {
  return "masks/" + id + "_instance.png";
}
std::string part_mask_rel(const std::string &id) {
  return "masks/" + id + "_part.png";
}

void ensure_dirs(const std::string &out_dir) {
  std::error_code ec;
  fs::create_directories(fs::path(out_dir) / "images", ec);
  if (ec) throw io_error(out_dir + ": cannot create output layout");
  fs::create_directories(fs::path(out_dir) / "masks", ec);
  if (ec) throw io_error(out_dir + ": cannot create output layout");
}

}  // namespace

void write_sample_files(const AugmentedSample &s, const std::string &id,
                        const std::string &out_dir) {
  ensure_dirs(out_dir);
  const fs::path root(out_dir);
  write_png_rgb8((root / image_rel(id)).string(), s.image);
  write_png_mask((root / instance_mask_rel(id)).string(), s.instance_mask);
  write_png_mask((root / part_mask_rel(id)).string(), s.part_mask);
}

ManifestSample to_manifest_entry(const AugmentedSample &s,
                                 const std::string &id) {
  ManifestSample m;
  m.id = id;
  m.image = image_rel(id);
  m.instance_mask = instance_mask_rel(id);
  m.part_mask = part_mask_rel(id);
  m.bbox = s.bbox;
  m.state = s.state.bits;
  m.source_image = s.source_image;
  m.instance_index = s.instance_index;
  m.seed = s.seed;
  m.edits = s.edits;
  return m;
}

namespace {

Json edit_to_json(const PlanEdit &e) {
  Json j;
  if (e.kind == EditKind::kMotion) {
    j["kind"] = "motion";
    j["part"] = e.part_id;
    j["angle"] = e.angle;
    if (!e.state_name.empty()) j["state"] = e.state_name;
  } else {
    j["kind"] = "light";
    j["state"] = e.state_name;
  }
  return j;
}

PlanEdit edit_from_json(const Json &j, const std::string &where) {
  if (!j.is_object()) throw parse_error(where + ": edit must be an object");
  PlanEdit e;
  const std::string kind = require_string(j, "kind", where);
  if (kind == "motion") {
    reject_unknown_keys(j, {"kind", "part", "angle", "state"}, where);
    e.kind = EditKind::kMotion;
    e.part_id = require_string(j, "part", where);
    e.angle = require_number(j, "angle", where);
    if (j.contains("state")) e.state_name = require_string(j, "state", where);
  } else if (kind == "light") {
    reject_unknown_keys(j, {"kind", "state"}, where);
    e.kind = EditKind::kLight;
    e.state_name = require_string(j, "state", where);
  } else {
    throw parse_error(where + ": unknown edit kind '" + kind + "'");
  }
  return e;
}

Json sample_to_json(const ManifestSample &s) {
  Json j;
  j["id"] = s.id;
  j["image"] = s.image;
  j["instance_mask"] = s.instance_mask;
  j["part_mask"] = s.part_mask;
  j["bbox"] = {s.bbox.x, s.bbox.y, s.bbox.w, s.bbox.h};
  Json state = Json::array();
  for (uint8_t b : s.state) state.push_back(b ? 1 : 0);
  j["state"] = state;
  if (s.has_confidence) j["confidence"] = s.confidence;
  j["source_image"] = s.source_image;
  j["instance_index"] = s.instance_index;
  j["seed"] = s.seed;
  Json edits = Json::array();
  for (const PlanEdit &e : s.edits) edits.push_back(edit_to_json(e));
  j["edits"] = edits;
  return j;
}

ManifestSample sample_from_json(const Json &j, const std::string &where) {
  if (!j.is_object()) throw parse_error(where + ": sample must be an object");
  reject_unknown_keys(j,
                      {"id", "image", "instance_mask", "part_mask", "bbox",
                       "state", "confidence", "source_image", "instance_index",
                       "seed", "edits"},
                      where);
  ManifestSample s;
  s.id = require_string(j, "id", where);
  s.image = require_string(j, "image", where);
  s.instance_mask = require_string(j, "instance_mask", where);
  s.part_mask = require_string(j, "part_mask", where);
  const auto box = require_number_array(j, "bbox", 4, where);
  s.bbox = {static_cast<int>(box[0]), static_cast<int>(box[1]),
            static_cast<int>(box[2]), static_cast<int>(box[3])};
  const Json &state = require_field(j, "state", where);
  if (!state.is_array())
    throw parse_error(where + ": 'state' must be an array");
  for (const auto &b : state) {
    if (!b.is_number_integer())
      throw parse_error(where + ": state bits are 0/1 integers");
    const int v = b.get<int>();
    if (v != 0 && v != 1)
      throw parse_error(where + ": state bits are 0/1 integers");
    s.state.push_back(static_cast<uint8_t>(v));
  }
  if (j.contains("confidence")) {
    s.has_confidence = true;
    s.confidence = require_number(j, "confidence", where);
    if (!(s.confidence >= 0.0 && s.confidence <= 1.0))
      throw parse_error(where + ": confidence must lie in [0,1]");
  }
  s.source_image = require_string(j, "source_image", where);
  const Json &ii = require_field(j, "instance_index", where);
  if (!ii.is_number_unsigned() && !ii.is_number_integer())
    throw parse_error(where + ": instance_index must be an integer");
  s.instance_index = ii.get<uint64_t>();
  const Json &seed = require_field(j, "seed", where);
  if (!seed.is_number_unsigned() && !seed.is_number_integer())
    throw parse_error(where + ": seed must be an integer");
  s.seed = seed.get<uint64_t>();
  const Json &edits = require_field(j, "edits", where);
  if (!edits.is_array())
    throw parse_error(where + ": 'edits' must be an array");
  for (size_t i = 0; i < edits.size(); ++i)
    s.edits.push_back(
        edit_from_json(edits[i], where + ".edits[" + std::to_string(i) + "]"));
  return s;
}

}  // namespace

Json manifest_to_json(const DatasetManifest &m) {
  Json j;
  j["generator"] = m.generator;
  j["taxonomy_version"] = m.taxonomy_version;
  j["master_seed"] = m.master_seed;
  Json samples = Json::array();
  for (const ManifestSample &s : m.samples) samples.push_back(sample_to_json(s));
  j["samples"] = samples;
  Json rejected = Json::array();
  for (const RejectionRecord &r : m.rejected) {
    Json e;
    e["plan_index"] = r.plan_index;
    e["instance_index"] = r.instance_index;
    e["reason"] = r.reason;
    rejected.push_back(e);
  }
  j["rejected"] = rejected;
  return j;
}

DatasetManifest parse_manifest(const Json &doc, const std::string &origin) {
  if (!doc.is_object())
    throw parse_error(origin + ": document must be an object");
  reject_unknown_keys(
      doc, {"generator", "taxonomy_version", "master_seed", "samples",
            "rejected"},
      origin);
  DatasetManifest m;
  m.generator = require_string(doc, "generator", origin);
  m.taxonomy_version = require_string(doc, "taxonomy_version", origin);
  const Json &seed = require_field(doc, "master_seed", origin);
  if (!seed.is_number_unsigned() && !seed.is_number_integer())
    throw parse_error(origin + ": master_seed must be an integer");
  m.master_seed = seed.get<uint64_t>();

  const Json &samples = require_field(doc, "samples", origin);
  if (!samples.is_array())
    throw parse_error(origin + ": 'samples' must be an array");
  for (size_t i = 0; i < samples.size(); ++i) {
    const std::string where = origin + ".samples[" + std::to_string(i) + "]";
    ManifestSample s = sample_from_json(samples[i], where);
    for (const ManifestSample &prev : m.samples)
      if (prev.id == s.id)
        throw parse_error(where + ": duplicate sample id '" + s.id + "'");
    m.samples.push_back(std::move(s));
  }

  const Json &rejected = require_field(doc, "rejected", origin);
  if (!rejected.is_array())
    throw parse_error(origin + ": 'rejected' must be an array");
  for (size_t i = 0; i < rejected.size(); ++i) {
    const std::string where = origin + ".rejected[" + std::to_string(i) + "]";
    const Json &e = rejected[i];
    if (!e.is_object()) throw parse_error(where + ": must be an object");
    reject_unknown_keys(e, {"plan_index", "instance_index", "reason"}, where);
    RejectionRecord r;
    const Json &pi = require_field(e, "plan_index", where);
    const Json &ii = require_field(e, "instance_index", where);
    if (!pi.is_number_integer() && !pi.is_number_unsigned())
      throw parse_error(where + ": plan_index must be an integer");
    if (!ii.is_number_integer() && !ii.is_number_unsigned())
      throw parse_error(where + ": instance_index must be an integer");
    r.plan_index = pi.get<uint64_t>();
    r.instance_index = ii.get<uint64_t>();
    r.reason = require_string(e, "reason", where);
    m.rejected.push_back(std::move(r));
  }
  return m;
}

void write_manifest(const DatasetManifest &m, const std::string &out_dir) {
  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec) throw io_error(out_dir + ": cannot create output directory");
  const std::string path = (fs::path(out_dir) / "manifest.json").string();
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw io_error(path + ": cannot open for writing");
  out << manifest_to_json(m).dump(2) << '\n';
  if (!out) throw io_error(path + ": write failed");
}

DatasetManifest emit_dataset(const std::vector<PlannedSample> &samples,
                             const std::vector<RejectionRecord> &rejected,
                             const std::string &taxonomy_version,
                             uint64_t master_seed,
                             const std::string &out_dir) {
  DatasetManifest m;
  m.taxonomy_version = taxonomy_version;
  m.master_seed = master_seed;
  m.rejected = rejected;
  ensure_dirs(out_dir);
  for (const PlannedSample &ps : samples) {
    const std::string id = sample_id(ps.plan_index);
    write_sample_files(ps.sample, id, out_dir);
    m.samples.push_back(to_manifest_entry(ps.sample, id));
  }
  write_manifest(m, out_dir);
  return m;
}

EvalInputs manifests_to_eval(const DatasetManifest &gt,
                             const DatasetManifest &pred) {
  if (gt.taxonomy_version != pred.taxonomy_version)
    throw config_error("taxonomy version mismatch: ground truth is '" +
                       gt.taxonomy_version + "', predictions are '" +
                       pred.taxonomy_version + "'");
  std::map<std::string, int> group;
  const auto group_of = [&](const std::string &image) {
    const auto it = group.find(image);
    if (it != group.end()) return it->second;
    const int id = static_cast<int>(group.size());
    group.emplace(image, id);
    return id;
  };

  EvalInputs out;
  for (const ManifestSample &s : gt.samples) {
    GroundTruth g;
    g.image = group_of(s.image);
    g.box = {static_cast<double>(s.bbox.x), static_cast<double>(s.bbox.y),
             static_cast<double>(s.bbox.w), static_cast<double>(s.bbox.h)};
    g.state = s.state;
    out.gts.push_back(std::move(g));
  }
  for (const ManifestSample &s : pred.samples) {
    Detection d;
    d.image = group_of(s.image);
    d.box = {static_cast<double>(s.bbox.x), static_cast<double>(s.bbox.y),
             static_cast<double>(s.bbox.w), static_cast<double>(s.bbox.h)};
    d.confidence = s.has_confidence ? s.confidence : 1.0;
    d.state = s.state;
    out.dets.push_back(std::move(d));
  }
  return out;
}

}  // namespace partwarp
