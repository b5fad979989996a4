/* SPDX-FileCopyrightText: 2026 partwarp contributors
 *
 * SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include <string>
#include <vector>

#include "partwarp/instance.hpp"
#include "partwarp/mesh.hpp"
#include "partwarp/parts.hpp"

namespace partwarp {

struct Finding {
  std::string code;     // unknown-label, unreferenced-part, ...
  std::string message;  // human-readable detail
};

struct ValidationReport {
  std::vector<Finding> findings;
  bool clean() const { return findings.empty(); }
};

/* Cross-checks parsed assets: triangle labels against the part catalog,
 * parts against actual mesh coverage, degenerate triangles, and whether
 * the posed mesh can appear in the frame at all.  Never throws; problems
 * are findings. */
ValidationReport validate_assets(const ArticulatedMesh &mesh,
                                 const PartCatalog &parts,
                                 const VehicleInstance &instance);

}  // namespace partwarp
