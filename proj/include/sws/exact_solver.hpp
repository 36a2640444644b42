#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "sws/errors.hpp"
#include "sws/model.hpp"
#include "sws/rational.hpp"

namespace sws {

/// An edge to take next, or nullopt for Halt (every onward continuation is
/// known to be a dead end).
using Move = std::optional<Edge>;

/// Cache key for success(edge, knowledge). The knowledge is restricted to the
/// forward cone of the edge's head plus the edge's own status: nothing else
/// can influence the value.
struct MemoKey {
    Edge edge;
    KnowledgeState knowledge;

    auto operator<=>(const MemoKey&) const = default;
};

MemoKey memo_key(const Instance& inst, Edge e, const KnowledgeState& k);

/// True when the key carries no knowledge beyond the edge's own status.
bool has_empty_cone_knowledge(const MemoKey& key);

struct MemoStats {
    std::size_t entries = 0;
    std::size_t hits = 0;
    std::size_t empty_cone_entries = 0;
};

struct SolverOptions {
    /// Float-mode tie tolerance; ignored for exact scalars.
    double tol = 1e-9;
};

/// Probability of crossing e safely given k: 1 if known up, 0 if known down,
/// 1 - p_fail otherwise. Throws UnknownEdge.
template <class Scalar>
Scalar cross_prob(const Instance& inst, Edge e, const KnowledgeState& k) {
    const Rational& p = inst.p_fail(e);
    if (auto s = k.status(e)) return *s == Status::Up ? Scalar(1) : Scalar(0);
    if constexpr (ScalarTraits<Scalar>::exact) {
        return Scalar(1) - p;
    } else {
        return Scalar(1) - inst.p_fail_double(e);
    }
}

/// Outcomes of arriving at v: every assignment of the not-yet-known edges that
/// v sees inside its forward cone, weighted by the product of their
/// probabilities. Weights sum to one.
template <class Scalar>
std::vector<std::pair<KnowledgeState, Scalar>> reveal_distribution(const Instance& inst, VertexId v,
                                                                   const KnowledgeState& k) {
    std::vector<std::pair<KnowledgeState, Scalar>> out{{k, Scalar(1)}};
    const EdgeSet& cone = inst.forward_cone(v);
    for (Edge e : inst.sight_of(v)) {
        if (!cone.contains(e) || k.known(e)) continue;
        const Scalar down = ScalarTraits<Scalar>::from_rational(inst.p_fail(e));
        const Scalar up = Scalar(1) - down;
        std::vector<std::pair<KnowledgeState, Scalar>> next;
        next.reserve(out.size() * 2);
        for (auto& [state, weight] : out) {
            KnowledgeState with_up = state;
            with_up.set(e, Status::Up);
            next.emplace_back(std::move(with_up), weight * up);
            state.set(e, Status::Down);
            next.emplace_back(std::move(state), weight * down);
        }
        out = std::move(next);
    }
    return out;
}

/// The success recursion, parameterised on its cache so that the exact and
/// approximate solvers evaluate through the same code. A Cache provides
///   std::optional<Scalar> lookup(const MemoKey&);
///   void store(const MemoKey&, const Scalar&);
template <class Scalar, class Cache>
Scalar evaluate_success(const Instance& inst, Edge e, const KnowledgeState& k, Cache& cache) {
    MemoKey key = memo_key(inst, e, k);
    if (auto cached = cache.lookup(key)) return *cached;

    const Scalar cross = cross_prob<Scalar>(inst, e, key.knowledge);
    Scalar value(0);
    if (e.head == inst.task().dest) {
        value = cross;
    } else if (cross != Scalar(0)) {
        KnowledgeState arrived = key.knowledge;
        arrived.set(e, Status::Up);
        Scalar expected(0);
        for (const auto& [revealed, weight] : reveal_distribution<Scalar>(inst, e.head, arrived)) {
            Scalar best(0);
            for (Edge next : inst.out_edges(e.head)) {
                if (revealed.is(next, Status::Down)) continue;
                Scalar s = evaluate_success<Scalar>(inst, next, revealed, cache);
                if (s > best) best = s;
            }
            expected += weight * best;
        }
        value = cross * expected;
    }
    cache.store(key, value);
    return value;
}

/// The highest-head edge among `candidates`. Throws EmptyCandidates.
Edge tiebreak(std::span<const Edge> candidates);

/// A next-move query for the edge `edge` out of its tail, given everything the
/// pathfinder knows there.
struct DecisionQuery {
    Edge edge;
    KnowledgeState knowledge;
};

/// Exact next-move solver with an unbounded per-instance memo table.
template <class Scalar>
class ExactSolver {
public:
    explicit ExactSolver(Instance inst, SolverOptions options = {});

    const Instance& instance() const { return inst_; }

    Scalar cross_prob(Edge e, const KnowledgeState& k) const { return sws::cross_prob<Scalar>(inst_, e, k); }
    std::vector<std::pair<KnowledgeState, Scalar>> reveal_distribution(VertexId v, const KnowledgeState& k) const {
        return sws::reveal_distribution<Scalar>(inst_, v, k);
    }

    /// Probability of reaching the destination after committing to e.
    /// Throws UnknownEdge.
    Scalar success(Edge e, const KnowledgeState& k);

    /// Non-down outgoing edges of v attaining the maximal positive success.
    std::vector<Edge> optimal_set(VertexId v, const KnowledgeState& k);

    /// Maximal success over v's usable outgoing edges, 0 at a dead end.
    Scalar best_value(VertexId v, const KnowledgeState& k);

    Move next_move(VertexId v, const KnowledgeState& k);

    /// Throws InvalidQuery if the knowledge lacks a status for something the
    /// tail vertex sees.
    bool decide(const DecisionQuery& q);

    MemoStats memo_stats() const { return {memo_.size(), hits_, empty_cone_entries_}; }
    void clear_memo();

    /// When enabled, every memo lookup key is appended to trace().
    void record_trace(bool on) { tracing_ = on; }
    const std::vector<MemoKey>& trace() const { return trace_; }

    // Cache protocol for evaluate_success.
    std::optional<Scalar> lookup(const MemoKey& key);
    void store(const MemoKey& key, const Scalar& value);

private:
    Instance inst_;
    SolverOptions options_;
    std::map<MemoKey, Scalar> memo_;
    std::size_t hits_ = 0;
    std::size_t empty_cone_entries_ = 0;
    bool tracing_ = false;
    std::vector<MemoKey> trace_;
};

extern template class ExactSolver<Rational>;
extern template class ExactSolver<double>;

}  // namespace sws
