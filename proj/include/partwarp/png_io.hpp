/* SPDX-FileCopyrightText: 2026 partwarp contributors
 *
 * SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "partwarp/depth_map.hpp"
#include "partwarp/image.hpp"

namespace partwarp {

/* PNG I/O (8-bit RGB images, 8-bit grayscale masks, 16-bit grayscale
 * depth dumps).  Anything unreadable throws io_error with the path. */

Image8 read_png_rgb8(const std::string &path);
void write_png_rgb8(const std::string &path, const Image8 &img);

/* masks are stored as 0/255 grayscale; any nonzero sample reads as set */
Mask read_png_mask(const std::string &path);
void write_png_mask(const std::string &path, const Mask &mask);

/* debug depth dump: valid depths linearly mapped to 1..65535 over
 * [0, max-valid], invalid pixels 0 */
void write_png_depth16(const std::string &path, const DepthMap &depth);

}  // namespace partwarp
