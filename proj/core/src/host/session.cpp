// SPDX-License-Identifier: Apache-2.0
#include "osgen/host/session.hpp"

namespace osgen {

std::vector<Component<SessionBinding>> session_mutations(const OsSession& session) {
    std::vector<Component<SessionBinding>> out;
    for (const auto& name : session.mutation_names()) {
        out.push_back({name, [name](std::string& s, const SessionBinding& b, Rng& rng, const Deadline&) {
                           s = b.session().apply_mutation(name, s, rng());
                       }});
    }
    return out;
}

} // namespace osgen
