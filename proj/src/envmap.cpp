/* SPDX-FileCopyrightText: 2026 partwarp contributors
 *
 * SPDX-License-Identifier: Apache-2.0 */

#include "partwarp/envmap.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>

#include "partwarp/errors.hpp"
#include "partwarp/image.hpp"
#include "partwarp/png_io.hpp"

namespace partwarp {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

Vec3 texel_direction(int x, int y, int width, int height) {
  const double theta = (y + 0.5) / height * kPi;
  const double phi = (x + 0.5) / width * 2.0 * kPi;
  const double st = std::sin(theta);
  // v grows downward, so "up" is -y
  return {st * std::cos(phi), -std::cos(theta), st * std::sin(phi)};
}

double texel_solid_angle(int y, int width, int height) {
  const double theta = (y + 0.5) / height * kPi;
  return (2.0 * kPi / width) * (kPi / height) * std::sin(theta);
}

Vec3 irradiance(const EnvironmentMap &env, const Vec3 &n) {
  Vec3 e;
  for (int y = 0; y < env.height; ++y) {
    const double dw = texel_solid_angle(y, env.width, env.height);
    for (int x = 0; x < env.width; ++x) {
      const double cosine = n.dot(texel_direction(x, y, env.width, env.height));
      if (cosine <= 0.0) continue;
      e = e + env.radiance(x, y) * (cosine * dw);
    }
  }
  return e;
}

EnvironmentMap downsample_environment(const EnvironmentMap &env, int max_w,
                                      int max_h) {
  if (env.width <= max_w && env.height <= max_h) return env;
  EnvironmentMap out;
  out.width = std::min(env.width, max_w);
  out.height = std::min(env.height, max_h);
  out.rgb.assign(size_t(3) * out.width * out.height, 0.0);

  // plain box average of radiance over the source texels that fall into
  // each target cell; bands are narrow enough that the sin(theta) factor
  // within a cell is effectively constant
  for (int ty = 0; ty < out.height; ++ty) {
    const int y0 = static_cast<int>(int64_t(ty) * env.height / out.height);
    const int y1 = static_cast<int>(int64_t(ty + 1) * env.height / out.height);
    for (int tx = 0; tx < out.width; ++tx) {
      const int x0 = static_cast<int>(int64_t(tx) * env.width / out.width);
      const int x1 = static_cast<int>(int64_t(tx + 1) * env.width / out.width);
      Vec3 sum;
      int64_t count = 0;
      for (int y = y0; y < y1; ++y)
        for (int x = x0; x < x1; ++x) {
          sum = sum + env.radiance(x, y);
          ++count;
        }
      const Vec3 avg = count > 0 ? sum / static_cast<double>(count) : Vec3{};
      const size_t o = 3 * (size_t(ty) * out.width + tx);
      out.rgb[o] = avg.x;
      out.rgb[o + 1] = avg.y;
      out.rgb[o + 2] = avg.z;
    }
  }
  return out;
}

namespace {

EnvironmentMap load_pfm(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw io_error(path + ": cannot open for reading");

  std::string magic;
  in >> magic;
  if (magic != "PF") throw io_error(path + ": not a color PFM file");
  int w = 0, h = 0;
  double scale = 0.0;
  in >> w >> h >> scale;
  if (!in || w <= 0 || h <= 0 || scale == 0.0)
    throw io_error(path + ": malformed PFM header");
  in.get();  // single whitespace after the header

  const bool little_endian = scale < 0.0;
  std::vector<float> row(size_t(3) * w);
  EnvironmentMap env;
  env.width = w;
  env.height = h;
  env.rgb.assign(size_t(3) * w * h, 0.0);

  // PFM stores rows bottom-to-top
  for (int y = h - 1; y >= 0; --y) {
    in.read(reinterpret_cast<char *>(row.data()),
            static_cast<std::streamsize>(row.size() * sizeof(float)));
    if (!in) throw io_error(path + ": truncated PFM data");
    for (size_t i = 0; i < row.size(); ++i) {
      float f = row[i];
      if (!little_endian) {
        uint32_t bits;
        std::memcpy(&bits, &row[i], 4);
        bits = ((bits & 0xff) << 24) | ((bits & 0xff00) << 8) |
               ((bits >> 8) & 0xff00) | (bits >> 24);
        std::memcpy(&f, &bits, 4);
      }
      if (!(f >= 0.0f) || !std::isfinite(f))
        throw io_error(path + ": negative or non-finite radiance");
      env.rgb[size_t(3) * w * y + i] = static_cast<double>(f);
    }
  }
  return env;
}

}  // namespace

EnvironmentMap load_environment(const std::string &path) {
  const auto dot = path.find_last_of('.');
  const std::string ext = dot == std::string::npos ? "" : path.substr(dot);
  if (ext == ".pfm" || ext == ".PFM") return load_pfm(path);

  const Image8 img = read_png_rgb8(path);
  EnvironmentMap env;
  env.width = img.width;
  env.height = img.height;
  env.rgb.resize(img.px.size());
  for (size_t i = 0; i < img.px.size(); ++i) env.rgb[i] = img.px[i] / 255.0;
  return env;
}

}  // namespace partwarp
