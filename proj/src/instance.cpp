/* SPDX-FileCopyrightText: 2026 partwarp contributors
 *
 * SPDX-License-Identifier: Apache-2.0 */

#include "partwarp/instance.hpp"

#include <array>
#include <filesystem>

#include "partwarp/errors.hpp"

namespace partwarp {

std::vector<VehicleInstance> parse_instances(const Json &doc,
                                             const std::string &base_dir,
                                             const std::string &origin) {
  if (!doc.is_object())
    throw parse_error(origin + ": document must be an object");
  reject_unknown_keys(doc, {"instances"}, origin);
  const Json &list = require_field(doc, "instances", origin);
  if (!list.is_array())
    throw parse_error(origin + ": 'instances' must be an array");

  std::vector<VehicleInstance> out;
  for (const auto &entry : list) {
    const std::string where =
        origin + " instance #" + std::to_string(out.size());
    reject_unknown_keys(entry,
                        {"mesh_id", "pose_rotation", "pose_translation", "fx",
                         "fy", "cx", "cy", "image_path", "image_size"},
                        where);

    VehicleInstance inst;
    inst.mesh_id = require_string(entry, "mesh_id", where);

    const auto r = require_number_array(entry, "pose_rotation", 9, where);
    std::array<double, 9> m;
    std::copy(r.begin(), r.end(), m.begin());
    try {
      inst.pose.r = Rotation::from_row_major(m);
    } catch (const geometry_error &e) {
      throw parse_error(where + ": pose_rotation: " + e.what());
    }
    inst.pose.t = require_vec3(entry, "pose_translation", where);
    if (!inst.pose.t.finite())
      throw parse_error(where + ": pose_translation must be finite");

    inst.intrinsics.fx = require_number(entry, "fx", where);
    inst.intrinsics.fy = require_number(entry, "fy", where);
    inst.intrinsics.cx = require_number(entry, "cx", where);
    inst.intrinsics.cy = require_number(entry, "cy", where);
    try {
      inst.intrinsics.validate();
    } catch (const geometry_error &e) {
      throw parse_error(where + ": " + e.what());
    }

    const std::string rel = require_string(entry, "image_path", where);
    inst.image_path =
        (std::filesystem::path(base_dir) / rel).lexically_normal().string();

    const auto size = require_number_array(entry, "image_size", 2, where);
    inst.width = static_cast<int>(size[0]);
    inst.height = static_cast<int>(size[1]);
    if (inst.width <= 0 || inst.height <= 0 ||
        size[0] != inst.width || size[1] != inst.height)
      throw parse_error(where + ": image_size must be positive integers");

    out.push_back(std::move(inst));
  }
  return out;
}

}  // namespace partwarp
