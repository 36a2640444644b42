#pragma once

#include <list>
#include <map>
#include <optional>
#include <vector>

#include "sws/exact_solver.hpp"

namespace sws {

struct ApproxConfig {
    /// Largest Hamming distance between memo keys of the same edge that still
    /// counts as "similar enough" to reuse a cached value.
    std::size_t similarity_threshold = 0;
    std::size_t max_entries = 1024;
};

struct CacheReport {
    std::size_t exact_hits = 0;
    std::size_t similar_hits = 0;
    std::size_t misses = 0;
    std::size_t evictions = 0;

    bool operator==(const CacheReport&) const = default;
};

/// Bounded LRU cache of success values that answers lookups with the value of
/// a nearby key for the same edge.
///
/// A similar hit stores the borrowed value under the queried key and leaves
/// the recency of the lender alone. Both exact and similar lookups therefore
/// drive the LRU list the same way a miss followed by a store would, so for a
/// fixed key sequence the set of cached keys does not depend on the
/// threshold.
template <class Scalar>
class SimilarityCache {
public:
    explicit SimilarityCache(ApproxConfig cfg);

    std::optional<Scalar> lookup(const MemoKey& key);
    void store(const MemoKey& key, const Scalar& value);

    const CacheReport& report() const { return report_; }
    std::size_t size() const { return index_.size(); }
    std::size_t peak_size() const { return peak_; }
    const ApproxConfig& config() const { return cfg_; }

private:
    using Entry = std::pair<MemoKey, Scalar>;
    using Slot = typename std::list<Entry>::iterator;

    void insert(const MemoKey& key, const Scalar& value);

    ApproxConfig cfg_;
    std::list<Entry> lru_;  // front = most recent
    std::map<MemoKey, Slot> index_;
    std::map<Edge, std::vector<Slot>> by_edge_;
    CacheReport report_;
    std::size_t peak_ = 0;
};

template <class Scalar>
struct ApproxResult {
    Scalar value;
    CacheReport report;
};

/// The exact recursion evaluated through a SimilarityCache. With threshold 0
/// the values are identical to ExactSolver's.
template <class Scalar>
class ApproxSolver {
public:
    ApproxSolver(Instance inst, ApproxConfig cfg, SolverOptions options = {});

    const Instance& instance() const { return inst_; }

    ApproxResult<Scalar> approx_success(Edge e, const KnowledgeState& k);
    Scalar best_value(VertexId v, const KnowledgeState& k);
    Move next_move(VertexId v, const KnowledgeState& k);

    const CacheReport& report() const { return cache_.report(); }
    const SimilarityCache<Scalar>& cache() const { return cache_; }

private:
    Instance inst_;
    SolverOptions options_;
    SimilarityCache<Scalar> cache_;
};

extern template class SimilarityCache<Rational>;
extern template class SimilarityCache<double>;
extern template class ApproxSolver<Rational>;
extern template class ApproxSolver<double>;

/// Runs a fixed sequence of lookups through a fresh cache, storing a
/// placeholder on every non-exact lookup as the recursion would.
CacheReport replay_lookups(const std::vector<MemoKey>& keys, ApproxConfig cfg);

struct AgreementRow {
    bool decision_match = true;
    /// Largest |approx - exact| over the instance's start scenarios.
    double value_gap = 0;
    CacheReport report;
};

/// Compares approximate first moves and root values with exact ones over
/// every start scenario of each instance. One cache per instance is shared
/// across its scenarios.
std::vector<AgreementRow> agreement_report(const std::vector<Instance>& instances, ApproxConfig cfg);

}  // namespace sws
