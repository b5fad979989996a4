/* SPDX-FileCopyrightText: 2026 partwarp contributors
 *
 * SPDX-License-Identifier: Apache-2.0 */

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "partwarp/config.hpp"
#include "partwarp/log.hpp"
#include "partwarp/manifest.hpp"
#include "partwarp/metrics.hpp"
#include "partwarp/png_io.hpp"
#include "partwarp/raster.hpp"
#include "partwarp/validate.hpp"

namespace {

using namespace partwarp;

/* stage shared flag values; only flags the user actually passed override
 * the config file */
struct OptBag {
  std::string config_path;
  std::string mesh, labels, parts, instances, environment, taxonomy, out;
  uint64_t seed = 0, samples = 0;
  std::string policy, holefill_variant, rounding;
  int jobs = 0, holefill_k = 0;
  double sigma_s = 0, sigma_r = 0, gray = 0, recolor_alpha = 0;
  double map_threshold = 0, door_angle_max = 0, lid_angle_max = 0;
  bool no_bilateral = false, with_bilateral = false;
};

void add_shared_options(CLI::App *cmd, OptBag &b) {
  cmd->add_option("--config", b.config_path, "configuration document (JSON)");
  cmd->add_option("--mesh", b.mesh, "OBJ model");
  cmd->add_option("--labels", b.labels, "triangle-label document");
  cmd->add_option("--parts", b.parts, "part catalog document");
  cmd->add_option("--instances", b.instances, "instance document");
  cmd->add_option("--environment", b.environment,
                  "equirectangular environment map (PNG or PFM)");
  cmd->add_option("--taxonomy", b.taxonomy,
                  "state taxonomy document (default: built-in vocabulary)");
  cmd->add_option("--out", b.out, "output directory");
  cmd->add_option("--seed", b.seed, "master seed");
  cmd->add_option("--samples", b.samples, "number of samples to plan");
  cmd->add_option("--policy", b.policy, "plan policy: single or mixed");
  cmd->add_option("--jobs", b.jobs, "worker threads");
  const auto no_bi =
      cmd->add_flag("--no-bilateral", b.no_bilateral, "disable the bilateral filter");
  cmd->add_flag("--with-bilateral", b.with_bilateral,
                "force the bilateral filter on")
      ->excludes(no_bi);
  cmd->add_option("--sigma-s", b.sigma_s, "bilateral spatial sigma (pixels)");
  cmd->add_option("--sigma-r", b.sigma_r, "bilateral range sigma");
  cmd->add_option("--holefill-k", b.holefill_k, "hole-fill neighbor count");
  cmd->add_option("--holefill-variant", b.holefill_variant,
                  "hole-fill distance: squared or plain");
  cmd->add_option("--gray", b.gray, "interior fill value in [0,1]");
  cmd->add_option("--recolor-alpha", b.recolor_alpha,
                  "lamp recoloring opacity in [0,1]");
  cmd->add_option("--rounding", b.rounding,
                  "warp target rounding: floor or nearest");
  cmd->add_option("--map-threshold", b.map_threshold,
                  "IoU threshold for detection matching");
  cmd->add_option("--door-angle-max", b.door_angle_max,
                  "default opening range for door-like parts (radians)");
  cmd->add_option("--lid-angle-max", b.lid_angle_max,
                  "default opening range for lid-like parts (radians)");
}

RunConfig merge_config(const CLI::App *cmd, const OptBag &b) {
  RunConfig cfg;
  if (cmd->count("--config")) cfg = load_run_config(b.config_path);
  const auto touched = [&](const char *flag) { return cmd->count(flag) > 0; };
  if (touched("--mesh")) cfg.mesh = b.mesh;
  if (touched("--labels")) cfg.labels = b.labels;
  if (touched("--parts")) cfg.parts = b.parts;
  if (touched("--instances")) cfg.instances = b.instances;
  if (touched("--environment")) cfg.environment = b.environment;
  if (touched("--taxonomy")) cfg.taxonomy = b.taxonomy;
  if (touched("--out")) cfg.out = b.out;
  if (touched("--seed")) cfg.seed = b.seed;
  if (touched("--samples")) cfg.samples = b.samples;
  if (touched("--policy")) {
    if (b.policy == "single")
      cfg.policy = PlanPolicy::kSinglePart;
    else if (b.policy == "mixed")
      cfg.policy = PlanPolicy::kMixed;
    else
      throw config_error("policy must be 'single' or 'mixed'");
  }
  if (touched("--jobs")) cfg.jobs = b.jobs;
  if (b.no_bilateral) cfg.synth.bilateral = false;
  if (b.with_bilateral) cfg.synth.bilateral = true;
  if (touched("--sigma-s")) cfg.synth.sigma_s = b.sigma_s;
  if (touched("--sigma-r")) cfg.synth.sigma_r = b.sigma_r;
  if (touched("--holefill-k")) cfg.synth.holefill_k = b.holefill_k;
  if (touched("--holefill-variant")) {
    if (b.holefill_variant == "squared")
      cfg.synth.holefill_variant = HoleFillVariant::kSquaredDistance;
    else if (b.holefill_variant == "plain")
      cfg.synth.holefill_variant = HoleFillVariant::kPlainDistance;
    else
      throw config_error("holefill-variant must be 'squared' or 'plain'");
  }
  if (touched("--gray")) cfg.synth.gray = b.gray;
  if (touched("--recolor-alpha")) cfg.synth.recolor_alpha = b.recolor_alpha;
  if (touched("--rounding")) {
    if (b.rounding == "floor")
      cfg.synth.rounding = PixelRounding::kFloor;
    else if (b.rounding == "nearest")
      cfg.synth.rounding = PixelRounding::kNearest;
    else
      throw config_error("rounding must be 'floor' or 'nearest'");
  }
  if (touched("--map-threshold")) cfg.map_threshold = b.map_threshold;
  if (touched("--door-angle-max")) cfg.angles.door_max = b.door_angle_max;
  if (touched("--lid-angle-max")) cfg.angles.lid_max = b.lid_angle_max;
  validate_run_config(cfg);
  return cfg;
}

/* asset problems during setup are usage errors, not runtime failures */
AssetBundle load_assets_cli(const RunConfig &cfg, bool need_environment) {
  try {
    return load_assets(cfg, need_environment);
  } catch (const io_error &e) {
    throw config_error(e.what());
  }
}

/* source photos load lazily, once per instance, shared across workers */
class SourceCache {
 public:
  explicit SourceCache(const std::vector<VehicleInstance> &instances)
      : instances_(instances),
        once_(instances.size()),
        images_(instances.size()),
        errors_(instances.size()) {}

  const RgbImage &get(size_t index) {
    std::call_once(once_[index], [&] {
      try {
        images_[index] = to_working(read_png_rgb8(instances_[index].image_path));
      } catch (const std::exception &e) {
        errors_[index] = e.what();
      }
    });
    if (!errors_[index].empty()) throw domain_error(errors_[index]);
    return images_[index];
  }

 private:
  const std::vector<VehicleInstance> &instances_;
  std::vector<std::once_flag> once_;
  std::vector<RgbImage> images_;
  std::vector<std::string> errors_;
};

int cmd_augment(const RunConfig &cfg) {
  if (cfg.out.empty()) throw config_error("missing required setting 'out'");
  const AssetBundle assets = load_assets_cli(cfg, true);
  if (assets.instances.empty())
    throw config_error(cfg.instances + ": no instances to augment");

  for (size_t i = 0; i < assets.instances.size(); ++i) {
    const ValidationReport report =
        validate_assets(assets.mesh, assets.parts, assets.instances[i]);
    for (const Finding &f : report.findings)
      warn("instance " + std::to_string(i) + ": [" + f.code + "] " + f.message);
  }

  const std::vector<AugmentationPlan> plans =
      plan_augmentations(assets.instances.size(), assets.parts,
                         assets.taxonomy, cfg.policy, cfg.samples, cfg.seed);

  // shading cares about the integral, not the texel count; shrinking here
  // once beats shrinking inside every sample
  const EnvironmentMap env = downsample_environment(assets.environment, 256, 128);

  SourceCache sources(assets.instances);
  std::vector<std::optional<AugmentedSample>> done(plans.size());
  std::vector<std::string> failure(plans.size());
  std::atomic<size_t> cursor{0};
  std::mutex fatal_mutex;
  std::string fatal;

  const auto worker = [&] {
    for (;;) {
      const size_t i = cursor.fetch_add(1);
      if (i >= plans.size()) break;
      try {
        const AugmentationPlan &plan = plans[i];
        const RgbImage &src = sources.get(plan.instance_index);
        AugmentedSample s = augment_instance(
            assets.mesh, assets.parts, assets.taxonomy,
            assets.instances[plan.instance_index], src, plan, env, cfg.synth);
        write_sample_files(s, sample_id(i), cfg.out);
        done[i] = std::move(s);
      } catch (const domain_error &e) {
        failure[i] = e.what();
      } catch (const std::exception &e) {
        std::lock_guard<std::mutex> lock(fatal_mutex);
        if (fatal.empty()) fatal = e.what();
        break;
      }
    }
  };

  const size_t n_workers =
      std::min<size_t>(static_cast<size_t>(cfg.jobs), std::max<size_t>(plans.size(), 1));
  if (n_workers <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (size_t t = 0; t < n_workers; ++t) pool.emplace_back(worker);
    for (std::thread &t : pool) t.join();
  }
  if (!fatal.empty()) throw domain_error(fatal);

  DatasetManifest manifest;
  manifest.taxonomy_version = assets.taxonomy.version;
  manifest.master_seed = cfg.seed;
  for (size_t i = 0; i < plans.size(); ++i) {
    const std::string id = sample_id(i);
    if (done[i].has_value()) {
      manifest.samples.push_back(to_manifest_entry(*done[i], id));
      std::cout << "sample=" << id << " instance=" << plans[i].instance_index
                << " status=ok image=" << manifest.samples.back().image
                << "\n";
    } else {
      manifest.rejected.push_back(
          {i, plans[i].instance_index, failure[i]});
      std::cout << "sample=" << id << " instance=" << plans[i].instance_index
                << " status=rejected reason=\"" << failure[i] << "\"\n";
    }
  }
  write_manifest(manifest, cfg.out);
  std::cout << "augment: " << manifest.samples.size() << " sample(s), "
            << manifest.rejected.size() << " rejected -> " << cfg.out << "\n";
  const bool total_failure = !plans.empty() && manifest.samples.empty();
  return total_failure ? 1 : 0;
}

int cmd_render_depth(const RunConfig &cfg, uint64_t instance_index,
                     const std::string &part, const std::string &out_path) {
  const AssetBundle assets = load_assets_cli(cfg, false);
  if (instance_index >= assets.instances.size())
    throw config_error("instance index " + std::to_string(instance_index) +
                       " out of range (have " +
                       std::to_string(assets.instances.size()) + ")");
  const bool labeled =
      std::find(assets.mesh.triangle_part.begin(),
                assets.mesh.triangle_part.end(),
                part) != assets.mesh.triangle_part.end();
  if (!labeled && assets.parts.find(part) == nullptr)
    throw config_error("unknown part id '" + part + "'");

  const VehicleInstance &inst = assets.instances[instance_index];
  const DepthMap depth =
      rasterize_depth(assets.mesh, {part}, inst.pose, inst.intrinsics,
                      inst.width, inst.height);
  if (silhouette_mask(depth).count() == 0)
    warn("part '" + part + "' projects to an empty silhouette");
  try {
    write_png_depth16(out_path, depth);
  } catch (const io_error &e) {
    throw config_error(e.what());
  }
  std::cout << "wrote " << out_path << "\n";
  return 0;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

int cmd_eval(const std::string &gt_path, const std::string &pred_path,
             double threshold, const std::string &report_path) {
  if (!(threshold > 0.0 && threshold <= 1.0))
    throw config_error("map_threshold must lie in (0,1]");
  const DatasetManifest gt = parse_manifest(load_json_file(gt_path), gt_path);
  const DatasetManifest pred =
      parse_manifest(load_json_file(pred_path), pred_path);
  const EvalInputs inputs = manifests_to_eval(gt, pred);
  const EvalReport rep = evaluate(inputs.dets, inputs.gts, threshold);

  std::cout << "ground_truths = " << rep.ground_truths << "\n";
  std::cout << "detections = " << rep.detections << "\n";
  std::cout << "matched = " << rep.matched << "\n";
  std::cout << "mean_best_iou = " << fmt(rep.mean_best_iou) << "\n";
  std::cout << "map = "
            << (rep.ap.applicable ? fmt(rep.ap.value) : "not-applicable")
            << "\n";
  std::cout << "state_match_rate = "
            << (rep.state.applicable ? fmt(rep.state.rate) : "not-applicable")
            << "\n";

  if (!report_path.empty()) {
    Json j;
    j["iou_threshold"] = threshold;
    j["ground_truths"] = rep.ground_truths;
    j["detections"] = rep.detections;
    j["matched"] = rep.matched;
    j["mean_best_iou"] = rep.mean_best_iou;
    j["map"] = rep.ap.applicable ? Json(rep.ap.value) : Json(nullptr);
    j["state_match_rate"] =
        rep.state.applicable ? Json(rep.state.rate) : Json(nullptr);
    std::ofstream out(report_path, std::ios::binary | std::ios::trunc);
    if (!out) throw config_error(report_path + ": cannot open for writing");
    out << j.dump(2) << '\n';
  }
  return 0;
}

int cmd_validate(const RunConfig &cfg) {
  const AssetBundle assets = load_assets_cli(cfg, false);
  size_t findings = 0;
  for (size_t i = 0; i < assets.instances.size(); ++i) {
    const ValidationReport report =
        validate_assets(assets.mesh, assets.parts, assets.instances[i]);
    for (const Finding &f : report.findings)
      std::cout << "instance " << i << " [" << f.code << "] " << f.message
                << "\n";
    findings += report.findings.size();
  }
  if (findings == 0) {
    std::cout << "assets clean\n";
    return 0;
  }
  std::cout << findings << " finding(s)\n";
  return 1;
}

int cmd_inspect(const std::string &manifest_path, const std::string &id) {
  const DatasetManifest m =
      parse_manifest(load_json_file(manifest_path), manifest_path);
  const Json doc = manifest_to_json(m);
  for (const auto &sample : doc["samples"])
    if (sample["id"] == id) {
      std::cout << sample.dump(2) << "\n";
      return 0;
    }
  throw config_error(manifest_path + ": no sample with id '" + id + "'");
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"photograph augmentation: vehicles in uncommon states"};
  app.require_subcommand(1);

  OptBag aug_bag;
  CLI::App *aug = app.add_subcommand("augment", "plan and synthesize samples");
  add_shared_options(aug, aug_bag);

  OptBag depth_bag;
  uint64_t depth_instance = 0;
  std::string depth_part, depth_out = "depth.png";
  CLI::App *render = app.add_subcommand("render-depth", "dump a part's depth map");
  add_shared_options(render, depth_bag);
  render->add_option("--instance", depth_instance, "instance index");
  render->add_option("--part", depth_part, "part id")->required();
  render->add_option("--depth-out", depth_out, "output PNG path");

  std::string eval_gt, eval_pred, eval_report;
  double eval_threshold = 0.5;
  CLI::App *eval = app.add_subcommand("eval", "score predictions against ground truth");
  eval->add_option("--gt", eval_gt, "ground-truth manifest")->required();
  eval->add_option("--pred", eval_pred, "prediction manifest")->required();
  eval->add_option("--map-threshold", eval_threshold, "IoU threshold");
  eval->add_option("--report", eval_report, "machine-readable report path");

  OptBag val_bag;
  CLI::App *val = app.add_subcommand("validate", "cross-check assets");
  add_shared_options(val, val_bag);

  std::string inspect_manifest, inspect_id;
  CLI::App *inspect = app.add_subcommand("inspect", "print a sample's annotations");
  inspect->add_option("--manifest", inspect_manifest, "manifest path")->required();
  inspect->add_option("--id", inspect_id, "sample id")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (aug->parsed()) return cmd_augment(merge_config(aug, aug_bag));
    if (render->parsed())
      return cmd_render_depth(merge_config(render, depth_bag), depth_instance,
                              depth_part, depth_out);
    if (eval->parsed())
      return cmd_eval(eval_gt, eval_pred, eval_threshold, eval_report);
    if (val->parsed()) return cmd_validate(merge_config(val, val_bag));
    if (inspect->parsed()) return cmd_inspect(inspect_manifest, inspect_id);
  } catch (const config_error &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const domain_error &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;  // unreachable: a subcommand is required
}
