#pragma once

#include <cstdint>

#include "sws/model.hpp"

namespace sws::sim {

struct TrialBatch {
    std::uint64_t n = 0;
    std::uint64_t seed = 0;
    std::uint64_t successes = 0;
    double rate = 0;
    double std_error = 0;
    /// False for an empty batch, whose rate is reported as 0.
    bool rate_defined = false;

    bool operator==(const TrialBatch&) const = default;
};

/// Each edge independently down with probability p_fail; a pure function of
/// trial_seed.
World sample_world(const Instance& inst, std::uint64_t trial_seed);

/// n trials of the exact policy; trial i samples its world from
/// derive_seed(seed, i), so the batch does not depend on execution order.
TrialBatch run_trials(const Instance& inst, std::uint64_t n, std::uint64_t seed);

}  // namespace sws::sim
