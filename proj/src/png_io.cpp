/* SPDX-FileCopyrightText: 2026 partwarp contributors
 *
 * SPDX-License-Identifier: Apache-2.0 */

#include "partwarp/png_io.hpp"

#include <png.h>

#include <cmath>
#include <cstdio>
#include <memory>

#include "partwarp/errors.hpp"

namespace partwarp {

namespace {

struct FileCloser {
  void operator()(FILE *f) const {
    if (f) std::fclose(f);
  }
};
using FilePtr = std::unique_ptr<FILE, FileCloser>;

[[noreturn]] void fail(const std::string &path, const char *what) {
  throw io_error(path + ": " + what);
}

/* shared read path: expands palettes / bit depths so rows arrive as 8-bit
 * samples in the requested color type */
struct PngReader {
  png_structp png = nullptr;
  png_infop info = nullptr;
  FilePtr file;

  explicit PngReader(const std::string &path) {
    file.reset(std::fopen(path.c_str(), "rb"));
    if (!file) fail(path, "cannot open for reading");
    png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr,
                                 nullptr);
    if (!png) fail(path, "png_create_read_struct failed");
    info = png_create_info_struct(png);
    if (!info) {
      png_destroy_read_struct(&png, nullptr, nullptr);
      fail(path, "png_create_info_struct failed");
    }
  }

  ~PngReader() { png_destroy_read_struct(&png, &info, nullptr); }
};

struct PngWriter {
  png_structp png = nullptr;
  png_infop info = nullptr;
  FilePtr file;

  explicit PngWriter(const std::string &path) {
    file.reset(std::fopen(path.c_str(), "wb"));
    if (!file) fail(path, "cannot open for writing");
    png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr,
                                  nullptr);
    if (!png) fail(path, "png_create_write_struct failed");
    info = png_create_info_struct(png);
    if (!info) {
      png_destroy_write_struct(&png, nullptr);
      fail(path, "png_create_info_struct failed");
    }
  }

  ~PngWriter() { png_destroy_write_struct(&png, &info); }
};

}  // namespace

Image8 read_png_rgb8(const std::string &path) {
  PngReader r(path);
  if (setjmp(png_jmpbuf(r.png))) fail(path, "png decode error");
  png_init_io(r.png, r.file.get());
  png_read_info(r.png, r.info);

  png_set_expand(r.png);          // palette/low-bit-depth -> 8 bit
  png_set_strip_16(r.png);        // 16 bit -> 8 bit
  png_set_strip_alpha(r.png);     // drop alpha
  png_set_gray_to_rgb(r.png);     // gray -> rgb
  png_read_update_info(r.png, r.info);

  const png_uint_32 w = png_get_image_width(r.png, r.info);
  const png_uint_32 h = png_get_image_height(r.png, r.info);
  if (png_get_channels(r.png, r.info) != 3) fail(path, "expected RGB data");

  Image8 img;
  img.width = static_cast<int>(w);
  img.height = static_cast<int>(h);
  img.px.resize(size_t(3) * w * h);
  std::vector<png_bytep> rows(h);
  for (png_uint_32 y = 0; y < h; ++y) rows[y] = img.px.data() + size_t(3) * w * y;
  png_read_image(r.png, rows.data());
  png_read_end(r.png, nullptr);
  return img;
}

void write_png_rgb8(const std::string &path, const Image8 &img) {
  PngWriter w(path);
  if (setjmp(png_jmpbuf(w.png))) fail(path, "png encode error");
  png_init_io(w.png, w.file.get());
  png_set_IHDR(w.png, w.info, img.width, img.height, 8, PNG_COLOR_TYPE_RGB,
               PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT,
               PNG_FILTER_TYPE_DEFAULT);
  png_write_info(w.png, w.info);
  std::vector<png_const_bytep> rows(img.height);
  for (int y = 0; y < img.height; ++y)
    rows[y] = img.px.data() + size_t(3) * img.width * y;
  png_write_image(w.png, const_cast<png_bytepp>(rows.data()));
  png_write_end(w.png, nullptr);
}

Mask read_png_mask(const std::string &path) {
  PngReader r(path);
  if (setjmp(png_jmpbuf(r.png))) fail(path, "png decode error");
  png_init_io(r.png, r.file.get());
  png_read_info(r.png, r.info);

  png_set_expand(r.png);
  png_set_strip_16(r.png);
  png_set_strip_alpha(r.png);
  png_set_rgb_to_gray_fixed(r.png, 1, -1, -1);
  png_read_update_info(r.png, r.info);

  const png_uint_32 w = png_get_image_width(r.png, r.info);
  const png_uint_32 h = png_get_image_height(r.png, r.info);
  if (png_get_channels(r.png, r.info) != 1) fail(path, "expected gray data");

  std::vector<uint8_t> buf(size_t(w) * h);
  std::vector<png_bytep> rows(h);
  for (png_uint_32 y = 0; y < h; ++y) rows[y] = buf.data() + size_t(w) * y;
  png_read_image(r.png, rows.data());
  png_read_end(r.png, nullptr);

  Mask m(static_cast<int>(w), static_cast<int>(h));
  for (size_t i = 0; i < buf.size(); ++i) m.on[i] = buf[i] ? 1 : 0;
  return m;
}

void write_png_mask(const std::string &path, const Mask &mask) {
  PngWriter w(path);
  if (setjmp(png_jmpbuf(w.png))) fail(path, "png encode error");
  png_init_io(w.png, w.file.get());
  png_set_IHDR(w.png, w.info, mask.width, mask.height, 8,
               PNG_COLOR_TYPE_GRAY, PNG_INTERLACE_NONE,
               PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
  png_write_info(w.png, w.info);
  std::vector<uint8_t> buf(mask.on.size());
  for (size_t i = 0; i < mask.on.size(); ++i) buf[i] = mask.on[i] ? 255 : 0;
  std::vector<png_const_bytep> rows(mask.height);
  for (int y = 0; y < mask.height; ++y)
    rows[y] = buf.data() + size_t(mask.width) * y;
  png_write_image(w.png, const_cast<png_bytepp>(rows.data()));
  png_write_end(w.png, nullptr);
}

void write_png_depth16(const std::string &path, const DepthMap &depth) {
  double max_z = 0.0;
  for (size_t i = 0; i < depth.z.size(); ++i)
    if (depth.valid[i] && depth.z[i] > max_z) max_z = depth.z[i];

  std::vector<uint8_t> buf(size_t(2) * depth.width * depth.height, 0);
  for (size_t i = 0; i < depth.z.size(); ++i) {
    if (!depth.valid[i]) continue;
    // valid depths occupy 1..65535 so 0 stays an unambiguous sentinel
    uint32_t q = max_z > 0.0
                     ? 1 + static_cast<uint32_t>(
                               std::floor(depth.z[i] / max_z * 65534.0 + 0.5))
                     : 1;
    if (q > 65535) q = 65535;
    buf[2 * i] = static_cast<uint8_t>(q >> 8);  // big-endian per PNG
    buf[2 * i + 1] = static_cast<uint8_t>(q & 0xff);
  }

  PngWriter w(path);
  if (setjmp(png_jmpbuf(w.png))) fail(path, "png encode error");
  png_init_io(w.png, w.file.get());
  png_set_IHDR(w.png, w.info, depth.width, depth.height, 16,
               PNG_COLOR_TYPE_GRAY, PNG_INTERLACE_NONE,
               PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
  png_write_info(w.png, w.info);
  std::vector<png_const_bytep> rows(depth.height);
  for (int y = 0; y < depth.height; ++y)
    rows[y] = buf.data() + size_t(2) * depth.width * y;
  png_write_image(w.png, const_cast<png_bytepp>(rows.data()));
  png_write_end(w.png, nullptr);
}

}  // namespace partwarp
