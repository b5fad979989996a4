/* SPDX-FileCopyrightText: 2026 partwarp contributors
 *
 * SPDX-License-Identifier: Apache-2.0 */

#include <array>
#include <cmath>

#include "doctest.h"
#include "partwarp/camera.hpp"
#include "partwarp/errors.hpp"
#include "partwarp/motion.hpp"
#include "partwarp/rng.hpp"
#include "partwarp/rotation.hpp"

using namespace partwarp;

namespace {

// ---------------------------------------------------------------------
// Reference implementations used as oracles.  They share no code with the
// library: rotations go through quaternions, rigid transforms through
// explicit 4x4 matrices inverted by Gauss-Jordan elimination.
// ---------------------------------------------------------------------

struct Quat {
  double w, x, y, z;
};

Quat qmul(const Quat &a, const Quat &b) {
  return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
          a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
          a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
          a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}

Vec3 quat_rotate(const Vec3 &axis, double angle, const Vec3 &v) {
  const double h = 0.5 * angle;
  const Vec3 a = axis.normalized();
  const Quat q{std::cos(h), std::sin(h) * a.x, std::sin(h) * a.y,
               std::sin(h) * a.z};
  const Quat qc{q.w, -q.x, -q.y, -q.z};
  const Quat p{0.0, v.x, v.y, v.z};
  const Quat r = qmul(qmul(q, p), qc);
  return {r.x, r.y, r.z};
}

std::array<double, 9> quat_matrix(const Vec3 &axis, double angle) {
  const Vec3 c0 = quat_rotate(axis, angle, {1, 0, 0});
  const Vec3 c1 = quat_rotate(axis, angle, {0, 1, 0});
  const Vec3 c2 = quat_rotate(axis, angle, {0, 0, 1});
  return {c0.x, c1.x, c2.x, c0.y, c1.y, c2.y, c0.z, c1.z, c2.z};
}

using Mat4 = std::array<double, 16>;

Mat4 mat4_mul(const Mat4 &a, const Mat4 &b) {
  Mat4 r{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      double s = 0.0;
      for (int k = 0; k < 4; ++k) s += a[4 * i + k] * b[4 * k + j];
      r[4 * i + j] = s;
    }
  return r;
}

Vec3 mat4_apply(const Mat4 &m, const Vec3 &v) {
  const double w = m[12] * v.x + m[13] * v.y + m[14] * v.z + m[15];
  return {(m[0] * v.x + m[1] * v.y + m[2] * v.z + m[3]) / w,
          (m[4] * v.x + m[5] * v.y + m[6] * v.z + m[7]) / w,
          (m[8] * v.x + m[9] * v.y + m[10] * v.z + m[11]) / w};
}

Mat4 mat4_identity() {
  Mat4 m{};
  m[0] = m[5] = m[10] = m[15] = 1.0;
  return m;
}

Mat4 mat4_translation(const Vec3 &t) {
  Mat4 m = mat4_identity();
  m[3] = t.x;
  m[7] = t.y;
  m[11] = t.z;
  return m;
}

Mat4 mat4_from_rotation(const std::array<double, 9> &r) {
  Mat4 m = mat4_identity();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m[4 * i + j] = r[3 * i + j];
  return m;
}

// Gauss-Jordan inverse; no structure assumed.
Mat4 mat4_invert(Mat4 m) {
  Mat4 inv = mat4_identity();
  for (int col = 0; col < 4; ++col) {
    int pivot = col;
    for (int r = col + 1; r < 4; ++r)
      if (std::abs(m[4 * r + col]) > std::abs(m[4 * pivot + col])) pivot = r;
    for (int j = 0; j < 4; ++j) {
      std::swap(m[4 * col + j], m[4 * pivot + j]);
      std::swap(inv[4 * col + j], inv[4 * pivot + j]);
    }
    const double d = m[4 * col + col];
    for (int j = 0; j < 4; ++j) {
      m[4 * col + j] /= d;
      inv[4 * col + j] /= d;
    }
    for (int r = 0; r < 4; ++r) {
      if (r == col) continue;
      const double f = m[4 * r + col];
      for (int j = 0; j < 4; ++j) {
        m[4 * r + j] -= f * m[4 * col + j];
        inv[4 * r + j] -= f * inv[4 * col + j];
      }
    }
  }
  return inv;
}

Vec3 random_unit(Rng &rng) {
  // rejection sample inside the unit ball
  for (;;) {
    const Vec3 v{rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)};
    const double n2 = v.squared_norm();
    if (n2 > 1e-4 && n2 <= 1.0) return v.normalized();
  }
}

RigidPose random_pose(Rng &rng) {
  const Vec3 axis = random_unit(rng);
  const double angle = rng.uniform(-3.0, 3.0);
  RigidPose pose;
  pose.r = Rotation::from_row_major(quat_matrix(axis, angle));
  pose.t = {rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2)};
  return pose;
}

constexpr double kPi = 3.14159265358979323846;

}  // namespace

TEST_CASE("axis-angle rotation basics") {
  const Rotation id = Rotation::from_axis_angle({0, 0, 1}, 0.0);
  for (int i = 0; i < 9; ++i)
    CHECK(id.row_major()[i] == doctest::Approx(i % 4 == 0 ? 1.0 : 0.0).epsilon(1e-15));

  const Rotation half = Rotation::from_axis_angle({0, 0, 1}, kPi);
  const Vec3 hx = half.apply({1, 0, 0});
  CHECK(hx.x == doctest::Approx(-1.0));
  CHECK(std::abs(hx.y) < 1e-12);
  CHECK(std::abs(hx.z) < 1e-12);

  // quarter turn about +y takes +x to -z in a right-handed frame
  const Rotation q = Rotation::from_axis_angle({0, 1, 0}, kPi / 2);
  const Vec3 qx = q.apply({1, 0, 0});
  CHECK(std::abs(qx.x) < 1e-12);
  CHECK(std::abs(qx.y) < 1e-12);
  CHECK(qx.z == doctest::Approx(-1.0));
}

TEST_CASE("axis-angle rotation matches quaternion oracle") {
  Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    const Vec3 axis = random_unit(rng);
    const double angle = rng.uniform(-2 * kPi, 2 * kPi);
    const Vec3 v{rng.uniform(-3, 3), rng.uniform(-3, 3), rng.uniform(-3, 3)};
    const Vec3 got = Rotation::from_axis_angle(axis, angle).apply(v);
    const Vec3 want = quat_rotate(axis, angle, v);
    CHECK(std::abs(got.x - want.x) < 1e-12);
    CHECK(std::abs(got.y - want.y) < 1e-12);
    CHECK(std::abs(got.z - want.z) < 1e-12);
  }
}

TEST_CASE("rotation composition along a shared axis adds angles") {
  Rng rng(12);
  for (int i = 0; i < 100; ++i) {
    const Vec3 axis = random_unit(rng);
    const double a = rng.uniform(-3, 3);
    const double b = rng.uniform(-3, 3);
    const Rotation lhs =
        Rotation::from_axis_angle(axis, a) * Rotation::from_axis_angle(axis, b);
    const Rotation rhs = Rotation::from_axis_angle(axis, a + b);
    for (int j = 0; j < 9; ++j)
      CHECK(std::abs(lhs.row_major()[j] - rhs.row_major()[j]) < 1e-9);
  }
}

TEST_CASE("rotation constructors validate their input") {
  CHECK_THROWS_AS(Rotation::from_axis_angle({0, 0, 2}, 1.0), geometry_error);
  CHECK_THROWS_AS(Rotation::from_row_major({1, 0, 0, 0, 2, 0, 0, 0, 1}),
                  geometry_error);
  // reflection: orthonormal but det = -1
  CHECK_THROWS_AS(Rotation::from_row_major({1, 0, 0, 0, 1, 0, 0, 0, -1}),
                  geometry_error);
  CHECK_NOTHROW(Rotation::from_row_major({0, 0, 1, 0, 1, 0, -1, 0, 0}));
}

TEST_CASE("projection") {
  CameraIntrinsics k{100, 100, 50, 50};
  const PixelCoord a = project({0, 0, 2}, k);
  CHECK(a.u == doctest::Approx(50.0));
  CHECK(a.v == doctest::Approx(50.0));

  k = {100, 100, 0, 0};
  const PixelCoord b = project({1, 0, 2}, k);
  CHECK(b.u == doctest::Approx(50.0));
  CHECK(b.v == doctest::Approx(0.0));

  k = {500, 500, 320, 240};
  const PixelCoord c = project({0.4, 0.4, 2}, k);
  CHECK(c.u == doctest::Approx(420.0).epsilon(1e-12));
  CHECK(c.v == doctest::Approx(340.0).epsilon(1e-12));

  CHECK_THROWS_AS(project({0, 0, 0}, k), geometry_error);
  CHECK_THROWS_AS(project({0, 0, -1}, k), geometry_error);
}

TEST_CASE("back projection basics") {
  const CameraIntrinsics ident{1, 1, 0, 0};
  RigidPose pose;  // identity
  const Vec3 a = back_project({0, 0}, 1.0, ident, pose);
  CHECK(a.x == doctest::Approx(0.0));
  CHECK(a.y == doctest::Approx(0.0));
  CHECK(a.z == doctest::Approx(1.0));

  pose.t = {0, 0, -1};
  const Vec3 b = back_project({0, 0}, 1.0, ident, pose);
  CHECK(b.z == doctest::Approx(2.0));

  CHECK_THROWS_AS(back_project({0, 0}, 0.0, ident, pose), geometry_error);
  CHECK_THROWS_AS(back_project({0, 0}, -2.0, ident, pose), geometry_error);
}

TEST_CASE("back projection, rotated pose") {
  const CameraIntrinsics k{500, 500, 320, 240};
  RigidPose pose;
  pose.r = Rotation::from_axis_angle({0, 1, 0}, kPi / 2);
  pose.t = {1, 0, 0};
  const Vec3 p = back_project({420, 340}, 2.0, k, pose);
  CHECK(p.x == doctest::Approx(-2.0).epsilon(1e-12));
  CHECK(p.y == doctest::Approx(0.4).epsilon(1e-12));
  CHECK(p.z == doctest::Approx(-0.6).epsilon(1e-12));
}

TEST_CASE("back projection matches homogeneous-matrix oracle") {
  Rng rng(13);
  for (int i = 0; i < 200; ++i) {
    const CameraIntrinsics k{rng.uniform(50, 800), rng.uniform(50, 800),
                             rng.uniform(-100, 500), rng.uniform(-100, 500)};
    const RigidPose pose = random_pose(rng);
    const PixelCoord u{rng.uniform(-200, 1000), rng.uniform(-200, 1000)};
    const double depth = rng.uniform(0.1, 50.0);

    const Vec3 got = back_project(u, depth, k, pose);

    // oracle: numerically invert the full 4x4 model-to-camera matrix
    const Mat4 cam_from_model = mat4_mul(mat4_translation(pose.t),
                                         mat4_from_rotation(pose.r.row_major()));
    const Vec3 p_cam{depth * (u.u - k.cx) / k.fx, depth * (u.v - k.cy) / k.fy,
                     depth};
    const Vec3 want = mat4_apply(mat4_invert(cam_from_model), p_cam);

    CHECK(std::abs(got.x - want.x) < 1e-9);
    CHECK(std::abs(got.y - want.y) < 1e-9);
    CHECK(std::abs(got.z - want.z) < 1e-9);
  }
}

TEST_CASE("project / back_project round-trip") {
  Rng rng(14);
  for (int i = 0; i < 10000; ++i) {
    const CameraIntrinsics k{rng.uniform(50, 2000), rng.uniform(50, 2000),
                             rng.uniform(0, 2000), rng.uniform(0, 2000)};
    const RigidPose pose = random_pose(rng);
    const PixelCoord u{rng.uniform(-100, 2100), rng.uniform(-100, 2100)};
    const double depth = rng.uniform(0.05, 100.0);

    const Vec3 model = back_project(u, depth, k, pose);
    const PixelCoord back = project(pose.r.apply(model) + pose.t, k);

    const double scale = std::max({1.0, std::abs(u.u), std::abs(u.v)});
    CHECK(std::abs(back.u - u.u) / scale < 1e-9);
    CHECK(std::abs(back.v - u.v) / scale < 1e-9);
  }
}

TEST_CASE("articulation fixed points and identity") {
  const PartMotion still{{1, 2, 3}, {0, 1, 0}, 0.0};
  const Vec3 p{0.25, -0.5, 7.0};
  const Vec3 same = articulate_point(p, still);
  CHECK(same == p);  // bit-exact

  // points on the hinge line never move
  const PartMotion m{{1, 0, 2}, {0, 0, 1}, 2.1};
  for (double s : {-2.0, 0.0, 0.5, 3.0}) {
    const Vec3 on_axis = Vec3{1, 0, 2} + s * Vec3{0, 0, 1};
    const Vec3 rotated = articulate_point(on_axis, m);
    CHECK(std::abs(rotated.x - on_axis.x) < 1e-12);
    CHECK(std::abs(rotated.y - on_axis.y) < 1e-12);
    CHECK(std::abs(rotated.z - on_axis.z) < 1e-12);
  }
}

TEST_CASE("articulation half-turn about an offset axis") {
  const PartMotion m{{1, 0, 2}, {0, 0, 1}, kPi};
  const Vec3 moved = articulate_point({0, 0, 2}, m);
  CHECK(moved.x == doctest::Approx(2.0));
  CHECK(std::abs(moved.y) < 1e-12);
  CHECK(moved.z == doctest::Approx(2.0));
}

TEST_CASE("articulation matches translate-rotate-translate oracle") {
  Rng rng(15);
  for (int i = 0; i < 300; ++i) {
    const PartMotion m{{rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2)},
                       random_unit(rng),
                       rng.uniform(-2 * kPi, 2 * kPi)};
    const Vec3 p{rng.uniform(-4, 4), rng.uniform(-4, 4), rng.uniform(-4, 4)};

    const Mat4 oracle = mat4_mul(
        mat4_translation(m.axis_point),
        mat4_mul(mat4_from_rotation(quat_matrix(m.axis_dir, m.angle)),
                 mat4_translation(-m.axis_point)));
    const Vec3 want = mat4_apply(oracle, p);
    const Vec3 got = articulate_point(p, m);

    CHECK(std::abs(got.x - want.x) < 1e-10);
    CHECK(std::abs(got.y - want.y) < 1e-10);
    CHECK(std::abs(got.z - want.z) < 1e-10);
  }
}

TEST_CASE("articulation is an isometry") {
  Rng rng(16);
  for (int i = 0; i < 200; ++i) {
    const PartMotion m{{rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2)},
                       random_unit(rng),
                       rng.uniform(-2 * kPi, 2 * kPi)};
    const Vec3 p{rng.uniform(-4, 4), rng.uniform(-4, 4), rng.uniform(-4, 4)};
    const Vec3 q{rng.uniform(-4, 4), rng.uniform(-4, 4), rng.uniform(-4, 4)};
    const double before = (p - q).norm();
    const double after = (articulate_point(p, m) - articulate_point(q, m)).norm();
    CHECK(std::abs(before - after) < 1e-9);
  }
}

TEST_CASE("forward map: zero angle is the identity on integer pixels") {
  Rng rng(17);
  for (int i = 0; i < 500; ++i) {
    const CameraIntrinsics k{rng.uniform(50, 1000), rng.uniform(50, 1000),
                             rng.uniform(100, 900), rng.uniform(100, 900)};
    const RigidPose pose = random_pose(rng);
    const PartMotion still{{0.3, -0.1, 0.2}, {0, 1, 0}, 0.0};
    const Pixel src{static_cast<int>(rng.below(1920)),
                    static_cast<int>(rng.below(1080))};
    const double depth = rng.uniform(0.2, 40.0);
    const auto dst = forward_map_pixel(
        {static_cast<double>(src.x), static_cast<double>(src.y)}, depth, k,
        pose, still);
    REQUIRE(dst.has_value());
    CHECK(dst->x == src.x);
    CHECK(dst->y == src.y);
  }
}

TEST_CASE("forward map: hand-checked hinge example") {
  // Source pixel sits where (0,0,2) projects with fx=fy=100, cx=cy=0; a
  // half-turn about the offset z axis carries the point to (2,0,2), which
  // lands at pixel (100, 0).
  const CameraIntrinsics k{100, 100, 0, 0};
  const RigidPose pose;
  const PartMotion m{{1, 0, 2}, {0, 0, 1}, kPi};
  const auto dst = forward_map_pixel({0, 0}, 2.0, k, pose, m);
  REQUIRE(dst.has_value());
  CHECK(dst->x == 100);
  CHECK(dst->y == 0);
}

TEST_CASE("forward map: articulated point behind the camera is dropped") {
  const CameraIntrinsics k{1, 1, 0, 0};
  const RigidPose pose;
  // half-turn about an axis in front of the origin sends z=1 to z=-2
  const PartMotion m{{0, 0, -0.5}, {0, 1, 0}, kPi};
  const auto dst = forward_map_pixel({0, 0}, 1.0, k, pose, m);
  CHECK(!dst.has_value());
}

TEST_CASE("forward map rounding modes") {
  CHECK(round_pixel_axis(2.6, PixelRounding::kFloor) == 2);
  CHECK(round_pixel_axis(2.6, PixelRounding::kNearest) == 3);
  CHECK(round_pixel_axis(-0.4, PixelRounding::kFloor) == -1);
  CHECK(round_pixel_axis(-0.4, PixelRounding::kNearest) == 0);
  // values an epsilon below an integer count as that integer under floor
  CHECK(round_pixel_axis(5.0 - 1e-13, PixelRounding::kFloor) == 5);
}

TEST_CASE("camera intrinsics validation") {
  CHECK_THROWS_AS((CameraIntrinsics{0, 1, 0, 0}).validate(), geometry_error);
  CHECK_THROWS_AS((CameraIntrinsics{1, -1, 0, 0}).validate(), geometry_error);
  CHECK_NOTHROW((CameraIntrinsics{500, 500, 320, 240}).validate());
}
