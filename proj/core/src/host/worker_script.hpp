// SPDX-License-Identifier: Apache-2.0
#pragma once

namespace osgen::host {

/// Source of the Python worker, embedded at build time.
extern const char* const kWorkerScript;

} // namespace osgen::host
