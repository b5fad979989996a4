/* SPDX-FileCopyrightText: 2026 partwarp contributors
 *
 * SPDX-License-Identifier: Apache-2.0 */

#include "partwarp/config.hpp"

#include <cmath>
#include <filesystem>

#include "partwarp/obj_parser.hpp"

namespace fs = std::filesystem;

namespace partwarp {

namespace {

std::string resolve(const std::string &path, const std::string &base_dir) {
  if (path.empty() || base_dir.empty()) return path;
  const fs::path p(path);
  if (p.is_absolute()) return path;
  return (fs::path(base_dir) / p).lexically_normal().string();
}

uint64_t require_uint(const Json &j, const std::string &key,
                      const std::string &where) {
  const Json &f = require_field(j, key, where);
  if (f.is_number_unsigned()) return f.get<uint64_t>();
  if (f.is_number_integer() && f.get<int64_t>() >= 0)
    return static_cast<uint64_t>(f.get<int64_t>());
  throw parse_error(where + ": field '" + key +
                    "' must be a non-negative integer");
}

}  // namespace

RunConfig parse_run_config(const Json &doc, const std::string &origin,
                           const std::string &base_dir) {
  if (!doc.is_object())
    throw parse_error(origin + ": document must be an object");
  reject_unknown_keys(
      doc, {"mesh",        "labels",           "parts",
            "instances",   "environment",      "taxonomy",
            "out",         "seed",             "samples",
            "policy",      "jobs",             "bilateral",
            "sigma_s",     "sigma_r",          "holefill_k",
            "holefill_variant", "gray",        "recolor_alpha",
            "rounding",    "map_threshold",    "door_angle_max",
            "lid_angle_max"},
      origin);

  RunConfig cfg;
  const auto path_field = [&](const char *key, std::string &dst) {
    if (doc.contains(key)) dst = resolve(require_string(doc, key, origin), base_dir);
  };
  path_field("mesh", cfg.mesh);
  path_field("labels", cfg.labels);
  path_field("parts", cfg.parts);
  path_field("instances", cfg.instances);
  path_field("environment", cfg.environment);
  path_field("taxonomy", cfg.taxonomy);
  path_field("out", cfg.out);

  if (doc.contains("seed")) cfg.seed = require_uint(doc, "seed", origin);
  if (doc.contains("samples")) cfg.samples = require_uint(doc, "samples", origin);
  if (doc.contains("policy")) {
    const std::string p = require_string(doc, "policy", origin);
    if (p == "single")
      cfg.policy = PlanPolicy::kSinglePart;
    else if (p == "mixed")
      cfg.policy = PlanPolicy::kMixed;
    else
      throw parse_error(origin + ": policy must be 'single' or 'mixed'");
  }
  if (doc.contains("jobs"))
    cfg.jobs = static_cast<int>(require_uint(doc, "jobs", origin));
  if (doc.contains("bilateral")) {
    const Json &b = doc["bilateral"];
    if (!b.is_boolean())
      throw parse_error(origin + ": 'bilateral' must be a boolean");
    cfg.synth.bilateral = b.get<bool>();
  }
  if (doc.contains("sigma_s")) cfg.synth.sigma_s = require_number(doc, "sigma_s", origin);
  if (doc.contains("sigma_r")) cfg.synth.sigma_r = require_number(doc, "sigma_r", origin);
  if (doc.contains("holefill_k"))
    cfg.synth.holefill_k = static_cast<int>(require_uint(doc, "holefill_k", origin));
  if (doc.contains("holefill_variant")) {
    const std::string v = require_string(doc, "holefill_variant", origin);
    if (v == "squared")
      cfg.synth.holefill_variant = HoleFillVariant::kSquaredDistance;
    else if (v == "plain")
      cfg.synth.holefill_variant = HoleFillVariant::kPlainDistance;
    else
      throw parse_error(origin +
                        ": holefill_variant must be 'squared' or 'plain'");
  }
  if (doc.contains("gray")) cfg.synth.gray = require_number(doc, "gray", origin);
  if (doc.contains("recolor_alpha"))
    cfg.synth.recolor_alpha = require_number(doc, "recolor_alpha", origin);
  if (doc.contains("rounding")) {
    const std::string r = require_string(doc, "rounding", origin);
    if (r == "floor")
      cfg.synth.rounding = PixelRounding::kFloor;
    else if (r == "nearest")
      cfg.synth.rounding = PixelRounding::kNearest;
    else
      throw parse_error(origin + ": rounding must be 'floor' or 'nearest'");
  }
  if (doc.contains("map_threshold"))
    cfg.map_threshold = require_number(doc, "map_threshold", origin);
  if (doc.contains("door_angle_max"))
    cfg.angles.door_max = require_number(doc, "door_angle_max", origin);
  if (doc.contains("lid_angle_max"))
    cfg.angles.lid_max = require_number(doc, "lid_angle_max", origin);
  return cfg;
}

RunConfig load_run_config(const std::string &path) {
  const Json doc = load_json_file(path);
  return parse_run_config(doc, path,
                          fs::path(path).parent_path().string());
}

void validate_run_config(const RunConfig &cfg) {
  const auto positive = [](double v) { return std::isfinite(v) && v > 0.0; };
  const auto unit = [](double v) {
    return std::isfinite(v) && v >= 0.0 && v <= 1.0;
  };
  if (!positive(cfg.synth.sigma_s))
    throw config_error("sigma_s must be positive and finite");
  if (!positive(cfg.synth.sigma_r))
    throw config_error("sigma_r must be positive and finite");
  if (cfg.synth.holefill_k < 1)
    throw config_error("holefill_k must be at least 1");
  if (!unit(cfg.synth.gray)) throw config_error("gray must lie in [0,1]");
  if (!unit(cfg.synth.recolor_alpha))
    throw config_error("recolor_alpha must lie in [0,1]");
  if (cfg.jobs < 1) throw config_error("jobs must be at least 1");
  if (!(std::isfinite(cfg.map_threshold) && cfg.map_threshold > 0.0 &&
        cfg.map_threshold <= 1.0))
    throw config_error("map_threshold must lie in (0,1]");
  if (!positive(cfg.angles.door_max))
    throw config_error("door_angle_max must be positive");
  if (!positive(cfg.angles.lid_max))
    throw config_error("lid_angle_max must be positive");
}

AssetBundle load_assets(const RunConfig &cfg, bool need_environment) {
  const auto required = [](const std::string &value, const char *key) {
    if (value.empty())
      throw config_error(std::string("missing required setting '") + key +
                         "'");
  };
  required(cfg.mesh, "mesh");
  required(cfg.labels, "labels");
  required(cfg.parts, "parts");
  required(cfg.instances, "instances");
  if (need_environment) required(cfg.environment, "environment");

  AssetBundle bundle;
  const ObjContents obj = parse_obj_file(cfg.mesh);
  const MeshLabels labels =
      parse_labels(load_json_file(cfg.labels), obj.triangles.size(), cfg.labels);
  bundle.mesh = {obj.vertices, obj.triangles, labels.triangle_part};
  bundle.parts =
      parse_part_spec(load_json_file(cfg.parts), cfg.angles, cfg.parts);
  bundle.taxonomy = cfg.taxonomy.empty()
                        ? default_taxonomy()
                        : parse_taxonomy(load_json_file(cfg.taxonomy),
                                         cfg.taxonomy);
  bundle.instances = parse_instances(
      load_json_file(cfg.instances),
      fs::path(cfg.instances).parent_path().string(), cfg.instances);
  for (const VehicleInstance &inst : bundle.instances)
    if (inst.mesh_id != labels.mesh_id)
      throw config_error("instance references mesh '" + inst.mesh_id +
                         "' but the labels describe '" + labels.mesh_id + "'");
  if (need_environment)
    bundle.environment = load_environment(cfg.environment);
  return bundle;
}

}  // namespace partwarp
