/* SPDX-FileCopyrightText: 2026 partwarp contributors
 *
 * SPDX-License-Identifier: Apache-2.0 */

#include "partwarp/augment.hpp"

#include <algorithm>
#include <set>

#include "partwarp/bilateral.hpp"
#include "partwarp/errors.hpp"
#include "partwarp/paint.hpp"
#include "partwarp/raster.hpp"
#include "partwarp/shading.hpp"
#include "partwarp/splat.hpp"

namespace partwarp {

namespace {

/* Irradiance cost is linear in env size; this cap keeps shading cheap
 * without visibly changing a diffuse integral. */
constexpr int kEnvMaxW = 256;
constexpr int kEnvMaxH = 128;

/* Pixels where `part` beats the static scene's z-buffer. */
Mask visible_mask(const IndexedDepthMap &part, const IndexedDepthMap &statics) {
  Mask m(part.width, part.height);
  for (size_t i = 0; i < m.on.size(); ++i)
    m.on[i] = part.valid[i] && (!statics.valid[i] || part.z[i] < statics.z[i])
                  ? 1
                  : 0;
  return m;
}

}  // namespace

std::optional<PixelBox> tight_box(const Mask &m) {
  int x0 = m.width, y0 = m.height, x1 = -1, y1 = -1;
  for (int y = 0; y < m.height; ++y)
    for (int x = 0; x < m.width; ++x)
      if (m.get(x, y)) {
        x0 = std::min(x0, x);
        y0 = std::min(y0, y);
        x1 = std::max(x1, x);
        y1 = std::max(y1, y);
      }
  if (x1 < 0) return std::nullopt;
  return PixelBox{x0, y0, x1 - x0 + 1, y1 - y0 + 1};
}

AugmentedSample augment_instance(const ArticulatedMesh &mesh,
                                 const PartCatalog &parts,
                                 const StateTaxonomy &taxonomy,
                                 const VehicleInstance &instance,
                                 const RgbImage &source,
                                 const AugmentationPlan &plan,
                                 const EnvironmentMap &env,
                                 const SynthesisParams &params) {
  const int W = instance.width, H = instance.height;
  if (source.width != W || source.height != H)
    throw domain_error("source image is " + std::to_string(source.width) +
                       "x" + std::to_string(source.height) +
                       " but the instance declares " + std::to_string(W) +
                       "x" + std::to_string(H));
  const CameraIntrinsics &k = instance.intrinsics;
  const RigidPose &pose = instance.pose;

  // up-front plan sanity, before any pixel work
  std::set<std::string> moving;
  for (const PlanEdit &edit : plan.edits) {
    if (edit.kind == EditKind::kMotion) {
      const PartSpec *spec = parts.find(edit.part_id);
      if (spec == nullptr || spec->kind != PartKind::kMovable)
        throw config_error("plan edits unknown movable part '" + edit.part_id +
                           "'");
      if (edit.angle < spec->angle_min || edit.angle > spec->angle_max)
        throw config_error("plan angle for '" + edit.part_id +
                           "' is outside the declared range");
      if (!moving.insert(edit.part_id).second)
        throw config_error("plan moves part '" + edit.part_id + "' twice");
    } else {
      const int si = taxonomy.index_of(edit.state_name);
      if (si < 0 || taxonomy.states[si].kind != StateKind::kLight)
        throw config_error("plan names unknown light state '" +
                           edit.state_name + "'");
    }
  }

  // everything that stays put, with winning-triangle indices so lamp
  // regions can be read off later
  const IndexedDepthMap statics = rasterize_soup(
      build_camera_soup(
          mesh, [&](const std::string &l) { return moving.count(l) == 0; },
          pose),
      k, W, H);

  RgbImage working = source;
  Mask instance_mask = silhouette_mask(statics);
  Mask part_mask(W, H);
  Mask vacated(W, H);
  Mask drawn(W, H);
  std::set<std::string> active;

  const bool any_motion = !moving.empty();
  const EnvironmentMap env_small =
      any_motion ? downsample_environment(env, kEnvMaxW, kEnvMaxH)
                 : EnvironmentMap{};

  for (const PlanEdit &edit : plan.edits) {
    if (edit.kind != EditKind::kMotion) continue;
    const PartSpec &spec = *parts.find(edit.part_id);
    const PartMotion motion{spec.axis_point, spec.axis_dir, edit.angle};
    const auto is_part = [&](const std::string &l) {
      return l == edit.part_id;
    };

    // where the photo actually shows this part
    const IndexedDepthMap rest =
        rasterize_soup(build_camera_soup(mesh, is_part, pose), k, W, H);
    const Mask rest_vis = visible_mask(rest, statics);

    // where the opened part lands
    const CameraSoup art_soup =
        build_camera_soup(mesh, is_part, pose, &motion, &edit.part_id);
    const IndexedDepthMap art = rasterize_soup(art_soup, k, W, H);
    const Mask draw = visible_mask(art, statics);

    const ShadeResult shade =
        shade_reverse_side(art_soup, art, spec.reverse_albedo, env_small);
    const Mask shade_vis = mask_intersect(shade.mask, draw);

    // carry photo texture only from source-visible part pixels
    DepthMap source_depth(W, H);
    for (size_t i = 0; i < source_depth.valid.size(); ++i)
      if (rest_vis.on[i]) {
        source_depth.z[i] = rest.z[i];
        source_depth.valid[i] = 1;
      }
    SplatBuffer splat =
        warp_part(source, source_depth, k, pose, motion, params.rounding);

    // pixels to draw that neither the warp nor the shading will cover
    std::vector<Pixel> holes;
    for (int y = 0; y < H; ++y)
      for (int x = 0; x < W; ++x) {
        const size_t i = size_t(y) * W + x;
        if (draw.on[i] && !splat.valid[i] && !shade_vis.on[i])
          holes.push_back({x, y});
      }
    if (!holes.empty())
      splat = fill_holes(splat, holes, params.holefill_k,
                         params.holefill_variant);

    for (int y = 0; y < H; ++y)
      for (int x = 0; x < W; ++x) {
        const size_t i = size_t(y) * W + x;
        if (draw.on[i] && splat.valid[i])
          working.set(x, y, splat.color_at(x, y));
      }
    if (params.bilateral)
      working = bilateral_smooth(working, draw, params.sigma_s, params.sigma_r);
    for (int y = 0; y < H; ++y)
      for (int x = 0; x < W; ++x)
        if (shade_vis.get(x, y)) working.set(x, y, shade.color.get(x, y));

    vacated = mask_union(vacated, mask_subtract(rest_vis, draw));
    drawn = mask_union(drawn, draw);
    instance_mask = mask_union(instance_mask, mask_union(rest_vis, draw));
    part_mask = mask_union(part_mask, draw);

    if (edit.angle != 0.0)
      for (const StateDef &s : taxonomy.states)
        if (s.kind == StateKind::kMotion && s.parts.size() == 1 &&
            s.parts[0] == edit.part_id)
          active.insert(s.name);
  }

  // gray out whatever the swung parts uncovered and nothing redrew
  const Mask interior = mask_subtract(vacated, drawn);
  working = fill_interior(working, interior, params.gray);

  for (const PlanEdit &edit : plan.edits) {
    if (edit.kind != EditKind::kLight) continue;
    const StateDef &s = taxonomy.states[taxonomy.index_of(edit.state_name)];
    Mask region(W, H);
    for (size_t i = 0; i < region.on.size(); ++i) {
      if (!statics.valid[i] || statics.tri[i] < 0) continue;
      const std::string &label = mesh.triangle_part[statics.tri[i]];
      if (std::find(s.parts.begin(), s.parts.end(), label) != s.parts.end())
        region.on[i] = 1;
    }
    working = recolor_semantic(working, region, s.color, params.recolor_alpha);
    part_mask = mask_union(part_mask, region);
    active.insert(s.name);
  }

  if (instance_mask.count() == 0)
    throw domain_error("vehicle is entirely out of frame");

  AugmentedSample out;
  out.image = quantize(working);
  out.instance_mask = std::move(instance_mask);
  out.part_mask = std::move(part_mask);
  out.bbox = *tight_box(out.instance_mask);
  out.state = encode_state(active, taxonomy);
  out.source_image = instance.image_path;
  out.instance_index = plan.instance_index;
  out.seed = plan.seed;
  out.edits = plan.edits;
  return out;
}

}  // namespace partwarp
