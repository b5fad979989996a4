/* SPDX-FileCopyrightText: 2026 partwarp contributors
 *
 * SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include <functional>
#include <string>

namespace partwarp {

/* Warning channel.  Library code reports recoverable oddities (reduced
 * neighbor counts, empty plans, skipped samples) here instead of touching
 * stderr directly; the CLI installs its own sink and tests capture it. */
using LogSink = std::function<void(const std::string &)>;

void set_warning_sink(LogSink sink);  // empty sink restores the default
void warn(const std::string &message);

}  // namespace partwarp
