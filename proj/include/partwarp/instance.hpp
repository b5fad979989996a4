/* SPDX-FileCopyrightText: 2026 partwarp contributors
 *
 * SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include <string>
#include <vector>

#include "partwarp/camera.hpp"
#include "partwarp/json_util.hpp"

namespace partwarp {

/* One photographed vehicle: which mesh stands in for it, where it sits
 * relative to the camera, and the photo it appears in. */
struct VehicleInstance {
  std::string mesh_id;
  RigidPose pose;
  CameraIntrinsics intrinsics;
  std::string image_path;  // resolved relative to the instances document
  int width = 0;
  int height = 0;
};

/* Parse {"instances": [{mesh_id, pose_rotation, pose_translation, fx, fy,
 * cx, cy, image_path, image_size}, ...]}.  base_dir anchors relative image
 * paths. */
std::vector<VehicleInstance> parse_instances(
    const Json &doc, const std::string &base_dir,
    const std::string &origin = "instances");

}  // namespace partwarp
