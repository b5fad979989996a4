/* SPDX-FileCopyrightText: 2026 partwarp contributors
 *
 * SPDX-License-Identifier: Apache-2.0 */

#include "partwarp/obj_parser.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <string>

#include "partwarp/errors.hpp"

namespace partwarp {

namespace {

[[noreturn]] void fail(const std::string &origin, size_t line,
                       const std::string &what) {
  throw parse_error(origin + ":" + std::to_string(line) + ": " + what);
}

/* "3", "3/1", "3//2", "3/1/2", "-1" -> vertex index (0-based) */
uint32_t face_index(const std::string &token, size_t vertex_count,
                    const std::string &origin, size_t line) {
  const std::string head = token.substr(0, token.find('/'));
  long idx = 0;
  try {
    size_t used = 0;
    idx = std::stol(head, &used);
    if (used != head.size()) throw std::invalid_argument(head);
  } catch (const std::exception &) {
    fail(origin, line, "bad face index '" + token + "'");
  }
  if (idx < 0) idx += static_cast<long>(vertex_count) + 1;  // relative
  if (idx < 1 || idx > static_cast<long>(vertex_count))
    fail(origin, line, "face index out of range: '" + token + "'");
  return static_cast<uint32_t>(idx - 1);
}

}  // namespace

ObjContents parse_obj(std::istream &in, const std::string &origin) {
  ObjContents out;
  std::string raw;
  size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    std::istringstream line(raw);
    std::string tag;
    if (!(line >> tag) || tag[0] == '#') continue;

    if (tag == "v") {
      double x, y, z;
      if (!(line >> x >> y >> z))
        fail(origin, line_no, "vertex needs three coordinates");
      if (!std::isfinite(x) || !std::isfinite(y) || !std::isfinite(z))
        fail(origin, line_no, "vertex coordinates must be finite");
      out.vertices.push_back({x, y, z});
    } else if (tag == "f") {
      std::vector<uint32_t> idx;
      std::string token;
      while (line >> token)
        idx.push_back(face_index(token, out.vertices.size(), origin, line_no));
      if (idx.size() < 3)
        fail(origin, line_no, "face needs at least three vertices");
      for (size_t i = 1; i + 1 < idx.size(); ++i)
        out.triangles.push_back({idx[0], idx[i], idx[i + 1]});
    }
    // every other statement (vn, vt, o, g, s, usemtl, ...) is ignored
  }
  return out;
}

ObjContents parse_obj_file(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw config_error("cannot open mesh file: " + path);
  return parse_obj(in, path);
}

}  // namespace partwarp
