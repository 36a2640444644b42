#include "sws/oracle.hpp"

#include <map>
#include <memory>

#include "sws/errors.hpp"

namespace sws::oracle {

namespace {

void check_cap(const Instance& inst, std::size_t cap) {
    if (inst.edges().size() > cap || inst.edges().size() >= 63) {
        throw TooManyEdges(std::to_string(inst.edges().size()) + " edges exceed the world-enumeration cap of " +
                           std::to_string(cap));
    }
}

World world_from_mask(const Instance& inst, std::uint64_t down_mask) {
    std::vector<std::pair<Edge, Status>> statuses;
    statuses.reserve(inst.edges().size());
    for (std::size_t i = 0; i < inst.edges().size(); ++i) {
        statuses.emplace_back(inst.edges()[i].edge, (down_mask >> i) & 1 ? Status::Down : Status::Up);
    }
    return World(std::move(statuses));
}

bool consistent(const World& w, const KnowledgeState& k) {
    for (const auto& [e, s] : k) {
        if (w.status(e) != s) return false;
    }
    return true;
}

/// Probability of w restricted to the edges k does not already fix.
Rational conditional_weight(const Instance& inst, const World& w, const KnowledgeState& k) {
    Rational weight(1);
    for (const auto& [e, s] : w) {
        if (k.known(e)) continue;
        const Rational& p = inst.p_fail(e);
        weight *= s == Status::Down ? p : Rational(1) - p;
    }
    return weight;
}

template <class Fn>
void for_each_world(const Instance& inst, std::size_t cap, Fn&& fn) {
    check_cap(inst, cap);
    const std::uint64_t count = std::uint64_t{1} << inst.edges().size();
    for (std::uint64_t mask = 0; mask < count; ++mask) fn(world_from_mask(inst, mask));
}

}  // namespace

std::vector<WorldWeight> enumerate_worlds(const Instance& inst, std::size_t cap) {
    std::vector<WorldWeight> out;
    for_each_world(inst, cap, [&](World w) {
        Rational weight = conditional_weight(inst, w, {});
        out.push_back({std::move(w), std::move(weight)});
    });
    return out;
}

Rational edge_value(const Instance& inst, Edge e, const KnowledgeState& k, std::size_t cap) {
    if (!inst.has_edge(e)) throw UnknownEdge("unknown edge " + to_string(e));
    // Group consistent worlds by what the pathfinder knows after crossing e.
    std::map<KnowledgeState, Rational> arrivals;
    for_each_world(inst, cap, [&](const World& w) {
        if (!consistent(w, k) || w.status(e) == Status::Down) return;
        KnowledgeState crossed = k;
        crossed.set(e, Status::Up);
        arrivals[observe(inst, crossed, e.head, w)] += conditional_weight(inst, w, k);
    });
    Rational total(0);
    for (const auto& [after, weight] : arrivals) total += weight * value(inst, e.head, after, cap);
    return total;
}

Rational value(const Instance& inst, VertexId v, const KnowledgeState& k, std::size_t cap) {
    check_cap(inst, cap);
    if (v == inst.task().dest) return Rational(1);
    Rational best(0);
    for (Edge e : inst.out_edges(v)) {
        if (k.is(e, Status::Down)) continue;
        Rational ev = edge_value(inst, e, k, cap);
        if (ev > best) best = ev;
    }
    return best;
}

Move first_move(const Instance& inst, VertexId v, const KnowledgeState& k, std::size_t cap) {
    Move chosen;
    Rational best(0);
    for (Edge e : inst.out_edges(v)) {
        if (k.is(e, Status::Down)) continue;
        Rational ev = edge_value(inst, e, k, cap);
        // out_edges ascend by head, so >= keeps the highest-head maximiser.
        if (ev > 0 && ev >= best) {
            best = ev;
            chosen = e;
        }
    }
    return chosen;
}

TrialTrace simulate_policy(const Instance& inst, const World& w, const Policy& policy) {
    TrialTrace trace;
    VertexId v = inst.task().start;
    KnowledgeState k = observe(inst, {}, v, w);
    trace.visited.push_back(v);
    while (v != inst.task().dest) {
        Move m = policy(v, k);
        if (!m) {
            trace.outcome = Outcome::Halted;
            return trace;
        }
        if (m->tail != v || !inst.has_edge(*m)) {
            throw InvalidQuery("policy chose " + to_string(*m) + " at vertex " + std::to_string(v));
        }
        if (k.is(*m, Status::Down)) throw PolicyChoseKnownDown("policy chose known-down edge " + to_string(*m));
        trace.chosen.push_back(*m);
        if (w.status(*m) == Status::Down) {
            trace.outcome = Outcome::FailedOnEdge;
            trace.failed_edge = *m;
            return trace;
        }
        k.set(*m, Status::Up);
        v = m->head;
        trace.visited.push_back(v);
        k = observe(inst, k, v, w);
    }
    trace.outcome = Outcome::Reached;
    return trace;
}

Rational policy_value(const Instance& inst, const Policy& policy, std::size_t cap) {
    Rational total(0);
    for_each_world(inst, cap, [&](const World& w) {
        if (simulate_policy(inst, w, policy).outcome == Outcome::Reached) total += conditional_weight(inst, w, {});
    });
    return total;
}

Policy exact_policy(const Instance& inst) {
    auto solver = std::make_shared<ExactSolver<Rational>>(inst);
    return [solver](VertexId v, const KnowledgeState& k) { return solver->next_move(v, k); };
}

Instance without_sight(const Instance& inst) {
    return Instance(inst.vertex_count(), inst.edges(), {}, inst.task());
}

namespace {

std::vector<Rational> blind_values(const Instance& inst) {
    std::vector<Rational> best(static_cast<std::size_t>(inst.vertex_count()) + 1, Rational(0));
    if (inst.has_vertex(inst.task().dest)) best[inst.task().dest] = 1;
    for (VertexId v = inst.vertex_count(); v >= 1; --v) {
        if (v == inst.task().dest) continue;
        for (Edge e : inst.out_edges(v)) {
            Rational through = (Rational(1) - inst.p_fail(e)) * best[e.head];
            if (through > best[v]) best[v] = through;
        }
    }
    return best;
}

}  // namespace

Rational sight_blind_value(const Instance& inst, VertexId v) {
    if (!inst.has_vertex(v)) throw UnknownVertex("unknown vertex " + std::to_string(v));
    return blind_values(inst)[v];
}

Policy sight_blind_policy(const Instance& inst) {
    auto best = std::make_shared<std::vector<Rational>>(blind_values(inst));
    auto blind = std::make_shared<Instance>(without_sight(inst));
    return [best, blind](VertexId v, const KnowledgeState&) -> Move {
        Move chosen;
        Rational top(0);
        for (Edge e : blind->out_edges(v)) {
            Rational through = (Rational(1) - blind->p_fail(e)) * (*best)[e.head];
            if (through > 0 && through >= top) {
                top = through;
                chosen = e;
            }
        }
        return chosen;
    };
}

std::optional<KnowledgeState> greedy_gap_scenario(const Instance& inst) {
    const VertexId s = inst.task().start;
    const Move blind = sight_blind_policy(inst)(s, {});
    ExactSolver<Rational> solver(inst);
    for (const auto& k : initial_scenarios(inst)) {
        if (blind && k.is(*blind, Status::Down)) continue;
        Rational likelihood(1);
        for (const auto& [e, status] : k) likelihood *= status == Status::Down ? inst.p_fail(e) : 1 - inst.p_fail(e);
        if (likelihood == 0) continue;
        if (solver.next_move(s, k) != blind) return k;
    }
    return std::nullopt;
}

bool is_greedy_gap(const Instance& inst) { return greedy_gap_scenario(inst).has_value(); }

std::vector<Instance> find_greedy_gap(const std::vector<Instance>& candidates) {
    std::vector<Instance> out;
    for (const auto& inst : candidates) {
        if (is_greedy_gap(inst)) out.push_back(inst);
    }
    return out;
}

std::vector<Instance> find_greedy_gap(const GeneratorConfig& cfg, std::size_t count) {
    return find_greedy_gap(generate_suite(cfg, count));
}

}  // namespace sws::oracle
