#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "sws/exact_solver.hpp"
#include "sws/generator.hpp"
#include "sws/model.hpp"

namespace sws::oracle {

// Brute-force reference computations. Nothing here uses forward cones,
// reveal enumeration, or memoisation: values come from conditioning on full
// worlds, so the exact solver and the oracle share no evaluation code.

inline constexpr std::size_t default_edge_cap = 20;

struct WorldWeight {
    World world;
    Rational weight;
};

/// All 2^|E| worlds with their product-measure weights. Throws TooManyEdges.
std::vector<WorldWeight> enumerate_worlds(const Instance& inst, std::size_t cap = default_edge_cap);

/// Optimal success probability at v with knowledge k. Worlds are filtered for
/// consistency with k and weighted by the probabilities of the edges k leaves
/// unknown. Throws TooManyEdges.
Rational value(const Instance& inst, VertexId v, const KnowledgeState& k, std::size_t cap = default_edge_cap);

/// Success probability of committing to e, then acting optimally.
Rational edge_value(const Instance& inst, Edge e, const KnowledgeState& k, std::size_t cap = default_edge_cap);

/// Highest-head edge attaining value(v, k), or Halt when that value is 0.
Move first_move(const Instance& inst, VertexId v, const KnowledgeState& k, std::size_t cap = default_edge_cap);

enum class Outcome { Reached, FailedOnEdge, Halted };

struct TrialTrace {
    std::vector<VertexId> visited;
    std::vector<Edge> chosen;
    Outcome outcome = Outcome::Halted;
    std::optional<Edge> failed_edge;
};

using Policy = std::function<Move(VertexId, const KnowledgeState&)>;

/// Walks one trial through world w. Throws PolicyChoseKnownDown if the policy
/// picks an edge it knows is down, and InvalidQuery if it picks an edge that
/// does not leave the current vertex.
TrialTrace simulate_policy(const Instance& inst, const World& w, const Policy& policy);

/// Probability that the policy reaches the destination. Throws TooManyEdges.
Rational policy_value(const Instance& inst, const Policy& policy, std::size_t cap = default_edge_cap);

/// The exact solver's next_move as a Policy. The solver is shared by the
/// returned closure and keeps its memo across calls.
Policy exact_policy(const Instance& inst);

/// The instance with every line-of-sight removed.
Instance without_sight(const Instance& inst);

/// Follows the most reliable remaining path, re-ranked at each vertex, and
/// ignores whatever it could see.
Policy sight_blind_policy(const Instance& inst);

/// Blind most-reliable-path value from v (product of survival probabilities).
Rational sight_blind_value(const Instance& inst, VertexId v);

/// True when, for some start scenario of positive probability, the exact first
/// move differs from the sight-blind first move and the blind move is not
/// already known down there.
bool is_greedy_gap(const Instance& inst);

/// The first start scenario witnessing is_greedy_gap, if any.
std::optional<KnowledgeState> greedy_gap_scenario(const Instance& inst);

std::vector<Instance> find_greedy_gap(const std::vector<Instance>& candidates);
std::vector<Instance> find_greedy_gap(const GeneratorConfig& cfg, std::size_t count);

}  // namespace sws::oracle
