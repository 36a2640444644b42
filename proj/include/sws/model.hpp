#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sws/rational.hpp"

namespace sws {

using VertexId = int;

/// A directed edge, identified by its endpoints. No parallel edges exist, so
/// the pair is a complete key.
struct Edge {
    VertexId tail = 0;
    VertexId head = 0;

    auto operator<=>(const Edge&) const = default;
};

/// "tail-head", the key format used in instance and scenario files.
std::string to_string(Edge e);
std::optional<Edge> parse_edge_key(std::string_view key);

enum class Status : std::uint8_t { Up, Down };

std::string_view to_string(Status s);

struct EdgeSpec {
    Edge edge;
    Rational p_fail;

    bool operator==(const EdgeSpec&) const = default;
};

/// Vertex `observer` learns the status of `edge` on arrival.
struct SightEntry {
    VertexId observer = 0;
    Edge edge;

    auto operator<=>(const SightEntry&) const = default;
};

struct Task {
    VertexId start = 0;
    VertexId dest = 0;

    bool operator==(const Task&) const = default;
};

using EdgeSet = std::set<Edge>;

/// Partial edge-status assignment. Edges absent from the map are Unknown.
class KnowledgeState {
public:
    KnowledgeState() = default;
    KnowledgeState(std::initializer_list<std::pair<const Edge, Status>> init) : statuses_(init) {}

    std::optional<Status> status(Edge e) const {
        auto it = statuses_.find(e);
        if (it == statuses_.end()) return std::nullopt;
        return it->second;
    }
    bool known(Edge e) const { return statuses_.contains(e); }
    bool is(Edge e, Status s) const { return status(e) == s; }

    /// Records a status. Throws InconsistentKnowledge if `e` is already known
    /// with the opposite status.
    void set(Edge e, Status s);
    void erase(Edge e) { statuses_.erase(e); }

    std::size_t size() const { return statuses_.size(); }
    bool empty() const { return statuses_.empty(); }
    auto begin() const { return statuses_.begin(); }
    auto end() const { return statuses_.end(); }

    auto operator<=>(const KnowledgeState&) const = default;

private:
    std::map<Edge, Status> statuses_;
};

std::string to_string(const KnowledgeState& k);

/// Number of edges whose status differs between `a` and `b`, with
/// Unknown counted as its own value.
std::size_t hamming_distance(const KnowledgeState& a, const KnowledgeState& b);

/// Total edge-status assignment, ordered like the instance's edge list.
class World {
public:
    World() = default;
    explicit World(std::vector<std::pair<Edge, Status>> statuses);

    /// Throws UnknownEdge for an edge outside the world.
    Status status(Edge e) const;
    std::size_t size() const { return statuses_.size(); }
    auto begin() const { return statuses_.begin(); }
    auto end() const { return statuses_.end(); }

    bool operator==(const World&) const = default;

private:
    std::vector<std::pair<Edge, Status>> statuses_;
};

/// The problem tuple (G, beta, task). Construction never rejects structurally
/// invalid data so that validate() can report it; every derived table is
/// built up front and the object is immutable afterwards.
class Instance {
public:
    Instance() = default;
    Instance(int vertex_count, std::vector<EdgeSpec> edges, std::vector<SightEntry> sights, Task task);

    int vertex_count() const { return vertex_count_; }
    const std::vector<EdgeSpec>& edges() const { return edges_; }
    const std::vector<SightEntry>& sights() const { return sights_; }
    const Task& task() const { return task_; }

    bool has_vertex(VertexId v) const { return v >= 1 && v <= vertex_count_; }
    bool has_edge(Edge e) const { return index_.contains(e); }

    /// Throws UnknownEdge.
    const Rational& p_fail(Edge e) const;
    double p_fail_double(Edge e) const;

    /// Outgoing edges of v, ascending by head. Throws UnknownVertex.
    std::span<const Edge> out_edges(VertexId v) const;
    /// Throws UnknownVertex.
    const EdgeSet& sight_of(VertexId v) const;
    /// Edges on some directed path from v to the destination. Throws UnknownVertex.
    const EdgeSet& forward_cone(VertexId v) const;

    bool operator==(const Instance& other) const;

private:
    void check_vertex(VertexId v) const;

    int vertex_count_ = 0;
    std::vector<EdgeSpec> edges_;
    std::vector<SightEntry> sights_;
    Task task_;

    std::map<Edge, std::size_t> index_;
    std::vector<double> p_fail_double_;
    std::vector<std::vector<Edge>> out_;
    std::vector<EdgeSet> sight_;
    std::vector<EdgeSet> cone_;
};

struct ValidationReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

/// Reports every violated structural invariant; never throws.
ValidationReport validate(const Instance& inst);

/// Keeps exactly the edges on some start-to-dest path and drops sight entries
/// that referenced removed edges. Throws NoPath.
Instance prune_extraneous(const Instance& inst);

const EdgeSet& sight_of(const Instance& inst, VertexId v);
const EdgeSet& forward_cone(const Instance& inst, VertexId v);

/// k plus the world's status for everything v can see. Throws
/// InconsistentKnowledge if k contradicts w.
KnowledgeState observe(const Instance& inst, const KnowledgeState& k, VertexId v, const World& w);

/// k limited to the edges in `cone`.
KnowledgeState restrict(const KnowledgeState& k, const EdgeSet& cone);

/// Every assignment of Up/Down to `edges` (in set order), 2^|edges| entries.
std::vector<KnowledgeState> all_assignments(const KnowledgeState& base, const EdgeSet& edges);

/// All knowledge states the pathfinder can hold at the start: one per status
/// assignment to the start vertex's in-cone sight.
std::vector<KnowledgeState> initial_scenarios(const Instance& inst);

}  // namespace sws
