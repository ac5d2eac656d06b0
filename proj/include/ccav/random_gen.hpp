#pragma once

#include <cstdint>
#include <random>

#include "ccav/instance.hpp"

namespace ccav {

/// Deterministic source of bounded integers: mt19937_64 plus rejection
/// sampling, so corpora are byte-identical across platforms.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform draw from 0..n-1 (n >= 1).
    int uniform(int n);

    template <typename T>
    void shuffle(std::vector<T>& values) {
        for (int i = static_cast<int>(values.size()) - 1; i > 0; --i)
            std::swap(values[i], values[uniform(i + 1)]);
    }

private:
    std::mt19937_64 engine_;
};

enum class RandomKind { General, SinglePeaked, SingleCrossing, Anonymous };

RandomKind random_kind_from_name(const std::string& name);

struct RandomParams {
    int alternatives = 4;
    int registered = 6;
    int unregistered = 5;
    long long budget = 2;
    int full_d = 1; // bundling distance for the full-swap kinds
};

/// Seeded instance sampler. SinglePeaked draws an axis and peak-outward
/// rankings; SingleCrossing draws voters along one adjacent-swap path between
/// two orders (checker-verified); Anonymous and the structured kinds emit
/// full_swap bundling, General draws explicit bundles.
ControlInstance make_random_instance(RandomKind kind, const RandomParams& params, std::uint64_t seed);

} // namespace ccav
