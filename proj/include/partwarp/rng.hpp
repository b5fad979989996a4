/* SPDX-FileCopyrightText: 2026 partwarp contributors
 *
 * SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include <cstdint>

namespace partwarp {

/* splitmix64.  Small, fast, and — unlike the standard distributions —
 * guaranteed to produce the same stream on every platform, which the
 * byte-identical-rerun contract depends on. */
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next_u64() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /* uniform in [0, 1) with 53 random bits */
  double next_double() { return (next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) {
    return lo + (hi - lo) * next_double();
  }

  /* uniform integer in [0, n), n > 0 */
  uint64_t below(uint64_t n) { return next_u64() % n; }

 private:
  uint64_t state_;
};

/* Stable per-sample seed derivation: mixes the master seed with the sample
 * index so that samples are independent and insertion-order invariant. */
inline uint64_t derive_seed(uint64_t master, uint64_t index) {
  Rng mix(master ^ (0x9e3779b97f4a7c15ull * (index + 1)));
  return mix.next_u64();
}

}  // namespace partwarp
