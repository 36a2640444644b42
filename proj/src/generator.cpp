#include "sws/generator.hpp"

#include <algorithm>
#include <random>

#include "sws/errors.hpp"

namespace sws {

namespace {

// std distributions are implementation-defined; these keep suites identical
// across standard libraries.
double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

std::size_t pick(std::mt19937_64& rng, std::size_t n) { return static_cast<std::size_t>(rng() % n); }

std::optional<Instance> attempt(const GeneratorConfig& cfg, std::mt19937_64& rng) {
    const int span = std::max(cfg.max_vertices - cfg.min_vertices, 0) + 1;
    const int n = cfg.min_vertices + static_cast<int>(pick(rng, static_cast<std::size_t>(span)));

    std::vector<EdgeSpec> edges;
    for (VertexId i = 1; i <= n; ++i) {
        for (VertexId j = i + 1; j <= n; ++j) {
            if (unit(rng) < cfg.edge_density) {
                edges.push_back({{i, j}, cfg.palette[pick(rng, cfg.palette.size())]});
            }
        }
    }
    Instance raw(n, std::move(edges), {}, Task{1, n});
    if (raw.forward_cone(1).empty()) return std::nullopt;
    Instance pruned = prune_extraneous(raw);
    if (pruned.edges().size() > cfg.max_edges) return std::nullopt;

    std::vector<SightEntry> sights;
    if (cfg.sight_mode != SightMode::None) {
        for (const auto& spec : pruned.edges()) {
            const Edge e = spec.edge;
            if (cfg.sight_mode == SightMode::ImmediateNeighbors) {
                if (unit(rng) < cfg.sight_density) sights.push_back({e.tail, e});
                continue;
            }
            for (VertexId observer = 1; observer <= e.tail; ++observer) {
                if (unit(rng) < cfg.sight_density) sights.push_back({observer, e});
            }
        }
        for (std::size_t i = sights.size(); i > 1; --i) std::swap(sights[i - 1], sights[pick(rng, i)]);
        if (sights.size() > cfg.max_sight) sights.resize(cfg.max_sight);
        std::sort(sights.begin(), sights.end());
    }
    return Instance(n, pruned.edges(), std::move(sights), pruned.task());
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

Instance generate_instance(const GeneratorConfig& cfg, std::uint64_t index) {
    if (cfg.palette.empty()) throw GeneratorExhausted("empty p_fail palette");
    std::mt19937_64 rng(derive_seed(cfg.seed, index));
    for (int i = 0; i < cfg.max_attempts; ++i) {
        if (auto inst = attempt(cfg, rng)) return *std::move(inst);
    }
    throw GeneratorExhausted("no instance with a start-to-dest path after " + std::to_string(cfg.max_attempts) +
                             " attempts");
}

std::vector<Instance> generate_suite(const GeneratorConfig& cfg, std::size_t count) {
    std::vector<Instance> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) out.push_back(generate_instance(cfg, i));
    return out;
}

}  // namespace sws
