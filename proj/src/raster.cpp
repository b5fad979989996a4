/* SPDX-FileCopyrightText: 2026 partwarp contributors
 *
 * SPDX-License-Identifier: Apache-2.0 */

#include "partwarp/raster.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "partwarp/errors.hpp"

namespace partwarp {

// ---------------------------------------------------------------------
// mask morphology
// ---------------------------------------------------------------------

Mask mask_union(const Mask &a, const Mask &b) {
  Mask out(a.width, a.height);
  for (size_t i = 0; i < out.on.size(); ++i) out.on[i] = (a.on[i] | b.on[i]);
  return out;
}

Mask mask_intersect(const Mask &a, const Mask &b) {
  Mask out(a.width, a.height);
  for (size_t i = 0; i < out.on.size(); ++i) out.on[i] = (a.on[i] & b.on[i]);
  return out;
}

Mask mask_subtract(const Mask &a, const Mask &b) {
  Mask out(a.width, a.height);
  for (size_t i = 0; i < out.on.size(); ++i)
    out.on[i] = (a.on[i] && !b.on[i]) ? 1 : 0;
  return out;
}

Mask erode8(const Mask &m) {
  Mask out(m.width, m.height);
  for (int y = 0; y < m.height; ++y)
    for (int x = 0; x < m.width; ++x) {
      bool all = true;
      for (int dy = -1; dy <= 1 && all; ++dy)
        for (int dx = -1; dx <= 1 && all; ++dx) {
          const int nx = x + dx, ny = y + dy;
          if (nx < 0 || ny < 0 || nx >= m.width || ny >= m.height ||
              !m.get(nx, ny))
            all = false;
        }
      out.set(x, y, all);
    }
  return out;
}

Mask dilate8(const Mask &m) {
  Mask out(m.width, m.height);
  for (int y = 0; y < m.height; ++y)
    for (int x = 0; x < m.width; ++x) {
      bool any = false;
      for (int dy = -1; dy <= 1 && !any; ++dy)
        for (int dx = -1; dx <= 1 && !any; ++dx) {
          const int nx = x + dx, ny = y + dy;
          if (nx >= 0 && ny >= 0 && nx < m.width && ny < m.height &&
              m.get(nx, ny))
            any = true;
        }
      out.set(x, y, any);
    }
  return out;
}

Mask silhouette_mask(const DepthMap &d) {
  Mask m(d.width, d.height);
  m.on = d.valid;
  for (auto &v : m.on) v = v ? 1 : 0;
  return m;
}

// ---------------------------------------------------------------------
// soup construction
// ---------------------------------------------------------------------

CameraSoup build_camera_soup(
    const ArticulatedMesh &mesh,
    const std::function<bool(const std::string &)> &pred,
    const RigidPose &pose, const PartMotion *motion,
    const std::string *moved_part) {
  CameraSoup soup;
  // vertex index in the source mesh -> index in soup.verts, split by
  // whether the copy was articulated
  std::unordered_map<uint32_t, uint32_t> plain, moved;

  for (uint32_t ti = 0; ti < mesh.triangles.size(); ++ti) {
    const std::string &label = mesh.triangle_part[ti];
    if (!pred(label)) continue;
    // a null moved_part with a motion means "articulate everything selected"
    const bool articulated =
        motion != nullptr && (moved_part == nullptr || label == *moved_part);
    auto &lookup = articulated ? moved : plain;

    const Tri &t = mesh.triangles[ti];
    Tri out;
    uint32_t *dst[3] = {&out.a, &out.b, &out.c};
    const uint32_t src[3] = {t.a, t.b, t.c};
    for (int i = 0; i < 3; ++i) {
      auto it = lookup.find(src[i]);
      if (it == lookup.end()) {
        Vec3 p = mesh.vertices[src[i]];
        if (articulated) p = articulate_point(p, *motion);
        const uint32_t idx = static_cast<uint32_t>(soup.verts.size());
        soup.verts.push_back(pose.r.apply(p) + pose.t);
        it = lookup.emplace(src[i], idx).first;
      }
      *dst[i] = it->second;
    }
    soup.tris.push_back(out);
    soup.source.push_back(ti);
  }
  return soup;
}

bool triangle_front_facing(const Vec3 &a, const Vec3 &b, const Vec3 &c) {
  const Vec3 n = (b - a).cross(c - a);
  const Vec3 centroid = (a + b + c) / 3.0;
  return n.dot(centroid) < 0.0;
}

// ---------------------------------------------------------------------
// rasterization
// ---------------------------------------------------------------------

namespace {

struct ScreenVert {
  double u, v, inv_z;
};

double orient2d(const ScreenVert &a, const ScreenVert &b, double pu,
                double pv) {
  return (b.u - a.u) * (pv - a.v) - (b.v - a.v) * (pu - a.u);
}

/* top-left fill rule: with positive-area winding in u-right/v-down
 * coordinates, an edge owns its boundary pixels when it is horizontal
 * with the interior below, or when it points upward on screen */
bool edge_top_left(const ScreenVert &a, const ScreenVert &b) {
  return (a.v == b.v && b.u > a.u) || (b.v < a.v);
}

/* clip a camera-space triangle against z = kNearPlane; 0, 3, or 4 output
 * vertices */
int clip_near(const Vec3 in[3], Vec3 out[4]) {
  int n = 0;
  for (int i = 0; i < 3; ++i) {
    const Vec3 &s = in[i];
    const Vec3 &e = in[(i + 1) % 3];
    const bool s_in = s.z >= kNearPlane;
    const bool e_in = e.z >= kNearPlane;
    if (s_in) out[n++] = s;
    if (s_in != e_in) {
      const double t = (kNearPlane - s.z) / (e.z - s.z);
      Vec3 p = s + t * (e - s);
      p.z = kNearPlane;  // exact, avoids re-entering the clip test
      out[n++] = p;
    }
  }
  return n;
}

}  // namespace

IndexedDepthMap rasterize_soup(const CameraSoup &soup,
                               const CameraIntrinsics &k, int width,
                               int height) {
  if (width <= 0 || height <= 0)
    throw geometry_error("raster target must have positive size");
  IndexedDepthMap map(width, height);

  for (size_t ti = 0; ti < soup.tris.size(); ++ti) {
    const Tri &t = soup.tris[ti];
    const Vec3 cam[3] = {soup.verts[t.a], soup.verts[t.b], soup.verts[t.c]};

    Vec3 poly[4];
    const int n = clip_near(cam, poly);
    if (n < 3) continue;

    for (int fan = 0; fan + 2 < n + 0; ++fan) {
      ScreenVert sv[3];
      const Vec3 tri_v[3] = {poly[0], poly[fan + 1], poly[fan + 2]};
      for (int i = 0; i < 3; ++i) {
        sv[i].u = k.fx * tri_v[i].x / tri_v[i].z + k.cx;
        sv[i].v = k.fy * tri_v[i].y / tri_v[i].z + k.cy;
        sv[i].inv_z = 1.0 / tri_v[i].z;
      }

      // normalize winding to positive signed area
      double area2 = orient2d(sv[0], sv[1], sv[2].u, sv[2].v);
      if (area2 < 0) {
        std::swap(sv[1], sv[2]);
        area2 = -area2;
      }
      if (area2 == 0.0) continue;  // edge-on

      const double min_u = std::min({sv[0].u, sv[1].u, sv[2].u});
      const double max_u = std::max({sv[0].u, sv[1].u, sv[2].u});
      const double min_v = std::min({sv[0].v, sv[1].v, sv[2].v});
      const double max_v = std::max({sv[0].v, sv[1].v, sv[2].v});
      const int x0 = std::max(0, (int)std::floor(min_u - 0.5));
      const int x1 = std::min(width - 1, (int)std::ceil(max_u - 0.5));
      const int y0 = std::max(0, (int)std::floor(min_v - 0.5));
      const int y1 = std::min(height - 1, (int)std::ceil(max_v - 0.5));

      const bool tl0 = edge_top_left(sv[1], sv[2]);
      const bool tl1 = edge_top_left(sv[2], sv[0]);
      const bool tl2 = edge_top_left(sv[0], sv[1]);

      for (int y = y0; y <= y1; ++y) {
        const double pv = y + 0.5;
        for (int x = x0; x <= x1; ++x) {
          const double pu = x + 0.5;
          const double w0 = orient2d(sv[1], sv[2], pu, pv);
          const double w1 = orient2d(sv[2], sv[0], pu, pv);
          const double w2 = orient2d(sv[0], sv[1], pu, pv);
          const bool in0 = w0 > 0 || (w0 == 0 && tl0);
          const bool in1 = w1 > 0 || (w1 == 0 && tl1);
          const bool in2 = w2 > 0 || (w2 == 0 && tl2);
          if (!(in0 && in1 && in2)) continue;

          const double inv_z =
              (w0 * sv[0].inv_z + w1 * sv[1].inv_z + w2 * sv[2].inv_z) / area2;
          if (!(inv_z > 0.0)) continue;
          const double z = 1.0 / inv_z;

          const size_t idx = size_t(y) * width + x;
          if (z < map.z[idx]) {
            map.z[idx] = z;
            map.valid[idx] = 1;
            map.tri[idx] = static_cast<int32_t>(soup.source[ti]);
          }
        }
      }
    }
  }
  return map;
}

DepthMap rasterize_depth(const ArticulatedMesh &mesh,
                         const std::set<std::string> &part_filter,
                         const RigidPose &pose, const CameraIntrinsics &k,
                         int width, int height) {
  const CameraSoup soup = build_camera_soup(
      mesh,
      [&](const std::string &label) { return part_filter.count(label) > 0; },
      pose);
  return rasterize_soup(soup, k, width, height);
}

}  // namespace partwarp
