#pragma once

#include <cstdint>
#include <vector>

#include "sws/model.hpp"

namespace sws {

enum class SightMode {
    Any,                 // any observer at or before the edge's tail
    None,                // no lines-of-sight
    ImmediateNeighbors,  // observer is always the edge's tail
};

struct GeneratorConfig {
    int min_vertices = 3;
    int max_vertices = 6;
    double edge_density = 0.5;
    double sight_density = 0.25;
    std::vector<Rational> palette{Rational(0), Rational(1, 4), Rational(1, 2), Rational(3, 4), Rational(1)};
    std::uint64_t seed = 7;
    std::size_t max_edges = 9;
    std::size_t max_sight = 4;
    SightMode sight_mode = SightMode::Any;
    int max_attempts = 1000;
};

/// splitmix64 finaliser over (seed, index); used wherever a stream of
/// independent sub-seeds is derived from one seed.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

/// The index-th instance of the seeded suite: pruned, valid, with task 1 -> n.
/// Attempts that prune to nothing or exceed max_edges are redrawn; throws
/// GeneratorExhausted after max_attempts.
Instance generate_instance(const GeneratorConfig& cfg, std::uint64_t index);

std::vector<Instance> generate_suite(const GeneratorConfig& cfg, std::size_t count);

}  // namespace sws
