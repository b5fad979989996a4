/* SPDX-FileCopyrightText: 2026 partwarp contributors
 *
 * SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include <array>

#include "partwarp/vec3.hpp"

namespace partwarp {

/* Proper rotation stored row-major.  Construction through the named
 * factories validates orthonormality and determinant, so a Rotation in
 * flight can be trusted. */
class Rotation {
 public:
  Rotation() : m_{1, 0, 0, 0, 1, 0, 0, 0, 1} {}

  static Rotation identity() { return Rotation(); }

  /* Validates orthonormality (1e-9) and det = +1 (1e-9); throws
   * geometry_error otherwise. */
  static Rotation from_row_major(const std::array<double, 9> &m);

  /* Rodrigues construction.  |axis| must be 1 within 1e-6; the axis is
   * renormalized internally before use. */
  static Rotation from_axis_angle(const Vec3 &axis, double angle);

  Vec3 apply(const Vec3 &v) const {
    return {m_[0] * v.x + m_[1] * v.y + m_[2] * v.z,
            m_[3] * v.x + m_[4] * v.y + m_[5] * v.z,
            m_[6] * v.x + m_[7] * v.y + m_[8] * v.z};
  }

  /* inverse = transpose for a proper rotation */
  Rotation transposed() const;

  Vec3 apply_transposed(const Vec3 &v) const {
    return {m_[0] * v.x + m_[3] * v.y + m_[6] * v.z,
            m_[1] * v.x + m_[4] * v.y + m_[7] * v.z,
            m_[2] * v.x + m_[5] * v.y + m_[8] * v.z};
  }

  Rotation operator*(const Rotation &o) const;

  const std::array<double, 9> &row_major() const { return m_; }

  Vec3 row(int i) const {
    return {m_[3 * i + 0], m_[3 * i + 1], m_[3 * i + 2]};
  }

 private:
  std::array<double, 9> m_;
};

}  // namespace partwarp
