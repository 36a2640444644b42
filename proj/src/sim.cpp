#include "sws/sim.hpp"

#include <cmath>
#include <map>
#include <random>

#include "sws/generator.hpp"
#include "sws/oracle.hpp"

namespace sws::sim {

World sample_world(const Instance& inst, std::uint64_t trial_seed) {
    std::mt19937_64 rng(trial_seed);
    std::vector<std::pair<Edge, Status>> statuses;
    statuses.reserve(inst.edges().size());
    for (const auto& spec : inst.edges()) {
        const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        statuses.emplace_back(spec.edge, u < inst.p_fail_double(spec.edge) ? Status::Down : Status::Up);
    }
    return World(std::move(statuses));
}

TrialBatch run_trials(const Instance& inst, std::uint64_t n, std::uint64_t seed) {
    ExactSolver<Rational> solver(inst);
    // Decisions depend only on the vertex and its cone-restricted knowledge.
    std::map<std::pair<VertexId, KnowledgeState>, Move> decisions;
    oracle::Policy policy = [&](VertexId v, const KnowledgeState& k) {
        auto key = std::make_pair(v, restrict(k, inst.forward_cone(v)));
        auto it = decisions.find(key);
        if (it == decisions.end()) it = decisions.emplace(key, solver.next_move(v, key.second)).first;
        return it->second;
    };

    TrialBatch batch;
    batch.n = n;
    batch.seed = seed;
    for (std::uint64_t i = 0; i < n; ++i) {
        World w = sample_world(inst, derive_seed(seed, i));
        if (oracle::simulate_policy(inst, w, policy).outcome == oracle::Outcome::Reached) ++batch.successes;
    }
    if (n > 0) {
        batch.rate_defined = true;
        batch.rate = static_cast<double>(batch.successes) / static_cast<double>(n);
        batch.std_error = std::sqrt(batch.rate * (1 - batch.rate) / static_cast<double>(n));
    }
    return batch;
}

}  // namespace sws::sim
