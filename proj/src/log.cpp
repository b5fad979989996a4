/* SPDX-FileCopyrightText: 2026 partwarp contributors
 *
 * SPDX-License-Identifier: Apache-2.0 */

#include "partwarp/log.hpp"

#include <iostream>
#include <mutex>

namespace partwarp {

namespace {
std::mutex g_mutex;
LogSink g_sink;
}  // namespace

void set_warning_sink(LogSink sink) {
  std::lock_guard<std::mutex> lock(g_mutex);
  g_sink = std::move(sink);
}

void warn(const std::string &message) {
  std::lock_guard<std::mutex> lock(g_mutex);
  if (g_sink) {
    g_sink(message);
  } else {
    std::cerr << "warning: " << message << "\n";
  }
}

}  // namespace partwarp
