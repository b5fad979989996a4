/* SPDX-FileCopyrightText: 2026 partwarp contributors
 *
 * SPDX-License-Identifier: Apache-2.0 */

#include "partwarp/rotation.hpp"

#include <cmath>

#include "partwarp/errors.hpp"

namespace partwarp {

namespace {

double det3(const std::array<double, 9> &m) {
  return m[0] * (m[4] * m[8] - m[5] * m[7]) -
         m[1] * (m[3] * m[8] - m[5] * m[6]) +
         m[2] * (m[3] * m[7] - m[4] * m[6]);
}

}  // namespace

Rotation Rotation::from_row_major(const std::array<double, 9> &m) {
  // R * R^T must be the identity.
  constexpr double kTol = 1e-9;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      double dot = 0.0;
      for (int k = 0; k < 3; ++k) dot += m[3 * i + k] * m[3 * j + k];
      const double want = (i == j) ? 1.0 : 0.0;
      if (std::abs(dot - want) > kTol)
        throw geometry_error("rotation matrix is not orthonormal");
    }
  }
  if (std::abs(det3(m) - 1.0) > kTol)
    throw geometry_error("rotation matrix determinant is not +1");
  Rotation r;
  r.m_ = m;
  return r;
}

Rotation Rotation::from_axis_angle(const Vec3 &axis, double angle) {
  const double n = axis.norm();
  if (std::abs(n - 1.0) > 1e-6)
    throw geometry_error("rotation axis is not unit length");
  const Vec3 a = axis / n;
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  const double t = 1.0 - c;
  Rotation r;
  r.m_ = {t * a.x * a.x + c,       t * a.x * a.y - s * a.z, t * a.x * a.z + s * a.y,
          t * a.x * a.y + s * a.z, t * a.y * a.y + c,       t * a.y * a.z - s * a.x,
          t * a.x * a.z - s * a.y, t * a.y * a.z + s * a.x, t * a.z * a.z + c};
  return r;
}

Rotation Rotation::transposed() const {
  Rotation r;
  r.m_ = {m_[0], m_[3], m_[6], m_[1], m_[4], m_[7], m_[2], m_[5], m_[8]};
  return r;
}

Rotation Rotation::operator*(const Rotation &o) const {
  Rotation r;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      double s = 0.0;
      for (int k = 0; k < 3; ++k) s += m_[3 * i + k] * o.m_[3 * k + j];
      r.m_[3 * i + j] = s;
    }
  }
  return r;
}

}  // namespace partwarp
