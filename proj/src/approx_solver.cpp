#include "sws/approx_solver.hpp"

#include <algorithm>
#include <cmath>

namespace sws {

template <class Scalar>
SimilarityCache<Scalar>::SimilarityCache(ApproxConfig cfg) : cfg_(cfg) {
    if (cfg_.max_entries < 1) throw InvalidQuery("cache capacity must be at least 1");
}

template <class Scalar>
std::optional<Scalar> SimilarityCache<Scalar>::lookup(const MemoKey& key) {
    if (auto it = index_.find(key); it != index_.end()) {
        ++report_.exact_hits;
        lru_.splice(lru_.begin(), lru_, it->second);
        return it->second->second;
    }
    if (cfg_.similarity_threshold > 0) {
        if (auto bucket = by_edge_.find(key.edge); bucket != by_edge_.end()) {
            // Nearest neighbour; the oldest insertion wins among equals.
            std::optional<Slot> lender;
            std::size_t nearest = cfg_.similarity_threshold + 1;
            for (Slot slot : bucket->second) {
                std::size_t d = hamming_distance(slot->first.knowledge, key.knowledge);
                if (d < nearest) {
                    nearest = d;
                    lender = slot;
                }
            }
            if (lender) {
                ++report_.similar_hits;
                Scalar borrowed = (*lender)->second;
                insert(key, borrowed);
                return borrowed;
            }
        }
    }
    ++report_.misses;
    return std::nullopt;
}

template <class Scalar>
void SimilarityCache<Scalar>::store(const MemoKey& key, const Scalar& value) {
    if (auto it = index_.find(key); it != index_.end()) {
        it->second->second = value;
        lru_.splice(lru_.begin(), lru_, it->second);
        return;
    }
    insert(key, value);
}

template <class Scalar>
void SimilarityCache<Scalar>::insert(const MemoKey& key, const Scalar& value) {
    if (index_.size() >= cfg_.max_entries) {
        Slot victim = std::prev(lru_.end());
        auto& bucket = by_edge_[victim->first.edge];
        bucket.erase(std::find(bucket.begin(), bucket.end(), victim));
        if (bucket.empty()) by_edge_.erase(victim->first.edge);
        index_.erase(victim->first);
        lru_.erase(victim);
        ++report_.evictions;
    }
    lru_.emplace_front(key, value);
    index_.emplace(key, lru_.begin());
    by_edge_[key.edge].push_back(lru_.begin());
    peak_ = std::max(peak_, index_.size());
}

template <class Scalar>
ApproxSolver<Scalar>::ApproxSolver(Instance inst, ApproxConfig cfg, SolverOptions options)
    : inst_(std::move(inst)), options_(options), cache_(cfg) {}

template <class Scalar>
ApproxResult<Scalar> ApproxSolver<Scalar>::approx_success(Edge e, const KnowledgeState& k) {
    Scalar value = evaluate_success<Scalar>(inst_, e, k, cache_);
    return {std::move(value), cache_.report()};
}

template <class Scalar>
Scalar ApproxSolver<Scalar>::best_value(VertexId v, const KnowledgeState& k) {
    Scalar best(0);
    for (Edge e : inst_.out_edges(v)) {
        if (k.is(e, Status::Down)) continue;
        Scalar s = approx_success(e, k).value;
        if (s > best) best = s;
    }
    return best;
}

template <class Scalar>
Move ApproxSolver<Scalar>::next_move(VertexId v, const KnowledgeState& k) {
    std::vector<std::pair<Edge, Scalar>> scored;
    Scalar best(0);
    for (Edge e : inst_.out_edges(v)) {
        if (k.is(e, Status::Down)) continue;
        Scalar s = approx_success(e, k).value;
        if (s > best) best = s;
        scored.emplace_back(e, std::move(s));
    }
    if (!(best > Scalar(0))) return std::nullopt;
    std::vector<Edge> candidates;
    for (const auto& [e, s] : scored) {
        if (ScalarTraits<Scalar>::ties(s, best, options_.tol)) candidates.push_back(e);
    }
    return tiebreak(candidates);
}

template class SimilarityCache<Rational>;
template class SimilarityCache<double>;
template class ApproxSolver<Rational>;
template class ApproxSolver<double>;

CacheReport replay_lookups(const std::vector<MemoKey>& keys, ApproxConfig cfg) {
    SimilarityCache<double> cache(cfg);
    for (const auto& key : keys) {
        if (!cache.lookup(key)) cache.store(key, 0.0);
    }
    return cache.report();
}

std::vector<AgreementRow> agreement_report(const std::vector<Instance>& instances, ApproxConfig cfg) {
    std::vector<AgreementRow> rows;
    rows.reserve(instances.size());
    for (const auto& inst : instances) {
        ExactSolver<Rational> exact(inst);
        ApproxSolver<Rational> approx(inst, cfg);
        AgreementRow row;
        const VertexId s = inst.task().start;
        for (const auto& k : initial_scenarios(inst)) {
            Rational exact_value = exact.best_value(s, k);
            Rational approx_value = approx.best_value(s, k);
            row.value_gap = std::max(row.value_gap, std::abs(to_double(Rational(approx_value - exact_value))));
            if (exact.next_move(s, k) != approx.next_move(s, k)) row.decision_match = false;
        }
        row.report = approx.report();
        rows.push_back(row);
    }
    return rows;
}

}  // namespace sws
