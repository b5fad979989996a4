/* SPDX-FileCopyrightText: 2026 partwarp contributors
 *
 * SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include <stdexcept>
#include <string>

namespace partwarp {

/* Error taxonomy.
 *
 * config_error covers everything the caller got wrong before any real work
 * started: unreadable files, malformed documents, out-of-range settings.
 * The CLI maps it to exit code 2.  Everything else derives from domain_error
 * and maps to exit code 1. */

class config_error : public std::runtime_error {
 public:
  explicit config_error(const std::string &msg) : std::runtime_error(msg) {}
};

class domain_error : public std::runtime_error {
 public:
  explicit domain_error(const std::string &msg) : std::runtime_error(msg) {}
};

class geometry_error : public domain_error {
 public:
  explicit geometry_error(const std::string &msg) : domain_error(msg) {}
};

class parse_error : public config_error {
 public:
  explicit parse_error(const std::string &msg) : config_error(msg) {}
};

class io_error : public domain_error {
 public:
  explicit io_error(const std::string &msg) : domain_error(msg) {}
};

/* A hole region that cannot be filled because the splat buffer holds no
 * valid pixel at all.  The augmentation loop turns this into a rejected
 * sample rather than a hard failure. */
class unfillable_region_error : public domain_error {
 public:
  explicit unfillable_region_error(const std::string &msg)
      : domain_error(msg) {}
};

}  // namespace partwarp
