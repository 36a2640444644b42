#include "sws/exact_solver.hpp"

#include <algorithm>

namespace sws {

MemoKey memo_key(const Instance& inst, Edge e, const KnowledgeState& k) {
    if (!inst.has_edge(e)) throw UnknownEdge("unknown edge " + to_string(e));
    MemoKey key{e, restrict(k, inst.forward_cone(e.head))};
    if (auto own = k.status(e)) key.knowledge.set(e, *own);
    return key;
}

bool has_empty_cone_knowledge(const MemoKey& key) {
    return key.knowledge.empty() || (key.knowledge.size() == 1 && key.knowledge.known(key.edge));
}

Edge tiebreak(std::span<const Edge> candidates) {
    if (candidates.empty()) throw EmptyCandidates("tiebreak over an empty candidate set");
    return *std::max_element(candidates.begin(), candidates.end(),
                             [](Edge a, Edge b) { return a.head < b.head; });
}

template <class Scalar>
ExactSolver<Scalar>::ExactSolver(Instance inst, SolverOptions options)
    : inst_(std::move(inst)), options_(options) {}

template <class Scalar>
Scalar ExactSolver<Scalar>::success(Edge e, const KnowledgeState& k) {
    return evaluate_success<Scalar>(inst_, e, k, *this);
}

template <class Scalar>
std::vector<Edge> ExactSolver<Scalar>::optimal_set(VertexId v, const KnowledgeState& k) {
    std::vector<std::pair<Edge, Scalar>> scored;
    Scalar best(0);
    for (Edge e : inst_.out_edges(v)) {
        if (k.is(e, Status::Down)) continue;
        Scalar s = success(e, k);
        if (s > best) best = s;
        scored.emplace_back(e, std::move(s));
    }
    std::vector<Edge> out;
    if (!(best > Scalar(0))) return out;
    for (const auto& [e, s] : scored) {
        if (ScalarTraits<Scalar>::ties(s, best, options_.tol)) out.push_back(e);
    }
    return out;
}

template <class Scalar>
Scalar ExactSolver<Scalar>::best_value(VertexId v, const KnowledgeState& k) {
    Scalar best(0);
    for (Edge e : inst_.out_edges(v)) {
        if (k.is(e, Status::Down)) continue;
        Scalar s = success(e, k);
        if (s > best) best = s;
    }
    return best;
}

template <class Scalar>
Move ExactSolver<Scalar>::next_move(VertexId v, const KnowledgeState& k) {
    auto candidates = optimal_set(v, k);
    if (candidates.empty()) return std::nullopt;
    return tiebreak(candidates);
}

template <class Scalar>
bool ExactSolver<Scalar>::decide(const DecisionQuery& q) {
    if (!inst_.has_edge(q.edge)) throw UnknownEdge("unknown edge " + to_string(q.edge));
    for (Edge seen : inst_.sight_of(q.edge.tail)) {
        if (!q.knowledge.known(seen)) {
            throw InvalidQuery("knowledge lacks the status of " + to_string(seen) + ", visible from " +
                               std::to_string(q.edge.tail));
        }
    }
    Move chosen = next_move(q.edge.tail, q.knowledge);
    return chosen == q.edge;
}

template <class Scalar>
void ExactSolver<Scalar>::clear_memo() {
    memo_.clear();
    hits_ = 0;
    empty_cone_entries_ = 0;
    trace_.clear();
}

template <class Scalar>
std::optional<Scalar> ExactSolver<Scalar>::lookup(const MemoKey& key) {
    if (tracing_) trace_.push_back(key);
    auto it = memo_.find(key);
    if (it == memo_.end()) return std::nullopt;
    ++hits_;
    return it->second;
}

template <class Scalar>
void ExactSolver<Scalar>::store(const MemoKey& key, const Scalar& value) {
    if (memo_.emplace(key, value).second && has_empty_cone_knowledge(key)) ++empty_cone_entries_;
}

template class ExactSolver<Rational>;
template class ExactSolver<double>;

}  // namespace sws
