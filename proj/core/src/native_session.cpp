// SPDX-License-Identifier: Apache-2.0
#include "osgen/native_session.hpp"

#include "osgen/problems/ap.hpp"
#include "osgen/problems/etp.hpp"
#include "osgen/problems/gtsp.hpp"
#include "osgen/problems/tsp.hpp"

namespace osgen {

std::unique_ptr<OsSession> make_native_session(ProblemKind kind) {
    switch (kind) {
    case ProblemKind::Tsp: return std::make_unique<NativeSession<Tsp>>();
    case ProblemKind::Gtsp: return std::make_unique<NativeSession<Gtsp>>();
    case ProblemKind::Ap: return std::make_unique<NativeSession<Ap>>();
    case ProblemKind::Etp: return std::make_unique<NativeSession<Etp>>();
    }
    throw ConfigError("unknown problem kind");
}

} // namespace osgen
