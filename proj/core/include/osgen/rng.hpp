// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cassert>
#include <cstdint>
#include <random>
#include <span>
#include <utility>

namespace osgen {

/// splitmix64 finaliser; used for seed derivation only.
[[nodiscard]] constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Derives an independent stream seed from a global seed and two coordinates,
/// e.g. (configuration index, instance index). Order of evaluation never matters.
[[nodiscard]] constexpr std::uint64_t derive_seed(std::uint64_t global, std::uint64_t a,
                                                  std::uint64_t b = 0) noexcept {
    return mix64(mix64(mix64(global) ^ a) ^ (b * 0xd6e8feb86659fd93ULL));
}

inline constexpr std::uint64_t kDefaultSeed = 20240901ULL;

/// The single seedable generator threaded through every stochastic operation.
///
/// Bounded draws use rejection sampling on raw 64-bit outputs rather than
/// std::uniform_int_distribution, whose algorithm is implementation-defined;
/// this keeps generated instance files identical across standard libraries.
/// `draws()` counts raw 64-bit outputs consumed.
class Rng {
public:
    using result_type = std::uint64_t;

    explicit Rng(std::uint64_t seed = kDefaultSeed) : engine_(seed), seed_(seed) {}

    static constexpr result_type min() { return std::mt19937_64::min(); }
    static constexpr result_type max() { return std::mt19937_64::max(); }

    result_type operator()() {
        ++draws_;
        return engine_();
    }

    /// Uniform integer in [lo, hi], inclusive.
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
        assert(lo <= hi);
        const auto range = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo);
        if (range == UINT64_MAX) return static_cast<std::int64_t>((*this)());
        const std::uint64_t span = range + 1;
        // Accept x < span * floor((2^64 - 1) / span); the tail is rejected.
        const std::uint64_t bound = span * (UINT64_MAX / span);
        std::uint64_t x = (*this)();
        while (x >= bound) x = (*this)();
        return lo + static_cast<std::int64_t>(x % span);
    }

    /// Uniform index in [0, n).
    std::size_t index(std::size_t n) {
        assert(n > 0);
        return static_cast<std::size_t>(uniform_int(0, static_cast<std::int64_t>(n) - 1));
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform01() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

    /// Two distinct uniform indices in [0, n); requires n >= 2.
    std::pair<std::size_t, std::size_t> distinct_pair(std::size_t n) {
        assert(n >= 2);
        const std::size_t i = index(n);
        std::size_t j = index(n - 1);
        if (j >= i) ++j;
        return {i, j};
    }

    template <class T>
    void shuffle(std::span<T> items) {
        for (std::size_t i = items.size(); i > 1; --i) {
            using std::swap;
            swap(items[i - 1], items[index(i)]);
        }
    }

    [[nodiscard]] std::uint64_t draws() const noexcept { return draws_; }
    [[nodiscard]] std::uint64_t seed() const noexcept { return seed_; }

private:
    std::mt19937_64 engine_;
    std::uint64_t seed_;
    std::uint64_t draws_ = 0;
};

} // namespace osgen
