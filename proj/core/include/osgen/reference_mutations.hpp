// SPDX-License-Identifier: Apache-2.0
#pragma once

// Hand-written mutations for the built-in problems. They stand in for
// generated mutation classes: each applies one random change and keeps the
// solution feasible by construction.

#include <algorithm>
#include <span>
#include <type_traits>
#include <vector>

#include "osgen/components.hpp"
#include "osgen/problems/ap.hpp"
#include "osgen/problems/etp.hpp"
#include "osgen/problems/gtsp.hpp"
#include "osgen/problems/tsp.hpp"

namespace osgen {

namespace moves {

inline void swap_positions(std::span<int> s, std::size_t i, std::size_t j) noexcept { std::swap(s[i], s[j]); }

/// Reverses s[min(i,j) .. max(i,j)], inclusive.
inline void reverse_segment(std::span<int> s, std::size_t i, std::size_t j) noexcept {
    if (i > j) std::swap(i, j);
    std::reverse(s.begin() + static_cast<std::ptrdiff_t>(i), s.begin() + static_cast<std::ptrdiff_t>(j) + 1);
}

/// Cyclic shift of three entries: the value at i moves to j, j to k, k to i.
inline void rotate_three(std::span<int> s, std::size_t i, std::size_t j, std::size_t k) noexcept {
    const int at_k = s[k];
    s[k] = s[j];
    s[j] = s[i];
    s[i] = at_k;
}

} // namespace moves

namespace detail {

/// Random segment reversal between two distinct positions.
template <class B>
Component<B> reversal_mutation(std::string name) {
    return {std::move(name), [](auto& s, const B&, Rng& rng, const Deadline&) {
                if (s.size() < 2) return;
                auto [i, j] = rng.distinct_pair(s.size());
                moves::reverse_segment(s, i, j);
            }};
}

/// Swap of the entries at two distinct positions.
template <class B>
Component<B> swap_mutation(std::string name) {
    return {std::move(name), [](auto& s, const B&, Rng& rng, const Deadline&) {
                if (s.size() < 2) return;
                auto [i, j] = rng.distinct_pair(s.size());
                moves::swap_positions(s, i, j);
            }};
}

} // namespace detail

/// Two reference mutations per problem:
///   tsp  - segment reversal, city swap
///   gtsp - replace a city by another member of its cluster, swap two tour positions
///   ap   - transpose two assignments, 3-cycle of three assignments
///   etp  - move one exam to another slot, swap the slots of two exams
template <Problem P>
std::vector<Component<NativeBinding<P>>> reference_mutations() {
    using B = NativeBinding<P>;
    if constexpr (std::is_same_v<P, Tsp>) {
        return {detail::reversal_mutation<B>("tsp.reverse"), detail::swap_mutation<B>("tsp.swap")};
    } else if constexpr (std::is_same_v<P, Gtsp>) {
        Component<B> replace{"gtsp.replace", [](auto& tour, const B& b, Rng& rng, const Deadline&) {
                                 const auto& inst = b.instance();
                                 const std::size_t pos = rng.index(tour.size());
                                 const auto& members =
                                     inst.clusters[static_cast<std::size_t>(inst.cluster_of[static_cast<std::size_t>(tour[pos])])];
                                 if (members.size() < 2) return;
                                 // Uniform over the other members of the cluster.
                                 std::size_t pick = rng.index(members.size() - 1);
                                 if (members[pick] == tour[pos]) pick = members.size() - 1;
                                 tour[pos] = members[pick];
                             }};
        return {std::move(replace), detail::swap_mutation<B>("gtsp.swap")};
    } else if constexpr (std::is_same_v<P, Ap>) {
        Component<B> cycle{"ap.rotate3", [](auto& s, const B&, Rng& rng, const Deadline&) {
                               if (s.size() < 3) {
                                   if (s.size() == 2) std::swap(s[0], s[1]);
                                   return;
                               }
                               auto [i, j] = rng.distinct_pair(s.size());
                               std::size_t k = rng.index(s.size() - 2);
                               // Skip over i and j to get a third distinct position.
                               for (std::size_t taken : {std::min(i, j), std::max(i, j)})
                                   if (k >= taken) ++k;
                               moves::rotate_three(s, i, j, k);
                           }};
        return {detail::swap_mutation<B>("ap.transpose"), std::move(cycle)};
    } else {
        static_assert(std::is_same_v<P, Etp>);
        Component<B> move{"etp.move", [](auto& slots, const B& b, Rng& rng, const Deadline&) {
                              const auto n_slots = b.instance().n_slots;
                              if (n_slots < 2) return;
                              const std::size_t exam = rng.index(slots.size());
                              auto next = static_cast<int>(rng.index(n_slots - 1));
                              if (next >= slots[exam]) ++next;
                              slots[exam] = next;
                          }};
        return {std::move(move), detail::swap_mutation<B>("etp.swap")};
    }
}

} // namespace osgen
