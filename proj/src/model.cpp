#include "sws/model.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <sstream>

#include "sws/errors.hpp"

namespace sws {

std::string to_string(Edge e) { return std::to_string(e.tail) + "-" + std::to_string(e.head); }

std::optional<Edge> parse_edge_key(std::string_view key) {
    auto dash = key.find('-');
    if (dash == std::string_view::npos || dash == 0 || dash + 1 == key.size()) return std::nullopt;
    Edge e;
    auto parse = [](std::string_view s, int& out) {
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
        return ec == std::errc{} && ptr == s.data() + s.size();
    };
    if (!parse(key.substr(0, dash), e.tail) || !parse(key.substr(dash + 1), e.head)) return std::nullopt;
    return e;
}

std::string_view to_string(Status s) { return s == Status::Up ? "up" : "down"; }

void KnowledgeState::set(Edge e, Status s) {
    auto [it, inserted] = statuses_.emplace(e, s);
    if (!inserted && it->second != s) {
        throw InconsistentKnowledge("edge " + to_string(e) + " is both up and down");
    }
}

std::string to_string(const KnowledgeState& k) {
    std::ostringstream out;
    out << "{";
    bool first = true;
    for (const auto& [e, s] : k) {
        out << (first ? "" : ", ") << to_string(e) << ": " << to_string(s);
        first = false;
    }
    out << "}";
    return out.str();
}

std::size_t hamming_distance(const KnowledgeState& a, const KnowledgeState& b) {
    std::size_t distance = 0;
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() || ib != b.end()) {
        if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
            ++distance;
            ++ia;
        } else if (ia == a.end() || ib->first < ia->first) {
            ++distance;
            ++ib;
        } else {
            if (ia->second != ib->second) ++distance;
            ++ia;
            ++ib;
        }
    }
    return distance;
}

World::World(std::vector<std::pair<Edge, Status>> statuses) : statuses_(std::move(statuses)) {
    std::sort(statuses_.begin(), statuses_.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
}

Status World::status(Edge e) const {
    auto it = std::lower_bound(statuses_.begin(), statuses_.end(), e,
                               [](const auto& entry, Edge key) { return entry.first < key; });
    if (it == statuses_.end() || it->first != e) throw UnknownEdge("world has no edge " + to_string(e));
    return it->second;
}

Instance::Instance(int vertex_count, std::vector<EdgeSpec> edges, std::vector<SightEntry> sights, Task task)
    : vertex_count_(vertex_count), edges_(std::move(edges)), sights_(std::move(sights)), task_(task) {
    std::sort(edges_.begin(), edges_.end(), [](const EdgeSpec& a, const EdgeSpec& b) { return a.edge < b.edge; });
    const auto slots = static_cast<std::size_t>(std::max(vertex_count_, 0) + 1);
    out_.resize(slots);
    sight_.resize(slots);
    cone_.resize(slots);

    for (std::size_t i = 0; i < edges_.size(); ++i) {
        const Edge e = edges_[i].edge;
        if (!index_.emplace(e, i).second) continue;  // duplicate; validate() reports it
        if (has_vertex(e.tail) && has_vertex(e.head)) out_[e.tail].push_back(e);
    }
    p_fail_double_.resize(edges_.size());
    for (std::size_t i = 0; i < edges_.size(); ++i) p_fail_double_[i] = to_double(edges_[i].p_fail);

    for (const auto& s : sights_) {
        if (has_vertex(s.observer) && has_edge(s.edge)) sight_[s.observer].insert(s.edge);
    }

    // Vertices that can reach the destination.
    std::vector<bool> reaches_dest(slots, false);
    if (has_vertex(task_.dest)) {
        std::vector<std::vector<VertexId>> in(slots);
        for (VertexId v = 1; v <= vertex_count_; ++v) {
            for (Edge e : out_[v]) in[e.head].push_back(v);
        }
        std::deque<VertexId> queue{task_.dest};
        reaches_dest[task_.dest] = true;
        while (!queue.empty()) {
            VertexId v = queue.front();
            queue.pop_front();
            for (VertexId u : in[v]) {
                if (!reaches_dest[u]) {
                    reaches_dest[u] = true;
                    queue.push_back(u);
                }
            }
        }
    }

    for (VertexId source = 1; source <= vertex_count_; ++source) {
        if (source == task_.dest || !reaches_dest[source]) continue;
        std::vector<bool> seen(slots, false);
        std::deque<VertexId> queue{source};
        seen[source] = true;
        while (!queue.empty()) {
            VertexId v = queue.front();
            queue.pop_front();
            if (v == task_.dest) continue;  // paths end at the destination
            for (Edge e : out_[v]) {
                if (!reaches_dest[e.head]) continue;
                cone_[source].insert(e);
                if (!seen[e.head]) {
                    seen[e.head] = true;
                    queue.push_back(e.head);
                }
            }
        }
    }
}

void Instance::check_vertex(VertexId v) const {
    if (!has_vertex(v)) throw UnknownVertex("unknown vertex " + std::to_string(v));
}

const Rational& Instance::p_fail(Edge e) const {
    auto it = index_.find(e);
    if (it == index_.end()) throw UnknownEdge("unknown edge " + to_string(e));
    return edges_[it->second].p_fail;
}

double Instance::p_fail_double(Edge e) const {
    auto it = index_.find(e);
    if (it == index_.end()) throw UnknownEdge("unknown edge " + to_string(e));
    return p_fail_double_[it->second];
}

std::span<const Edge> Instance::out_edges(VertexId v) const {
    check_vertex(v);
    return out_[v];
}

const EdgeSet& Instance::sight_of(VertexId v) const {
    check_vertex(v);
    return sight_[v];
}

const EdgeSet& Instance::forward_cone(VertexId v) const {
    check_vertex(v);
    return cone_[v];
}

bool Instance::operator==(const Instance& other) const {
    auto sorted = [](std::vector<SightEntry> s) {
        std::sort(s.begin(), s.end());
        return s;
    };
    return vertex_count_ == other.vertex_count_ && edges_ == other.edges_ && task_ == other.task_ &&
           sorted(sights_) == sorted(other.sights_);
}

ValidationReport validate(const Instance& inst) {
    ValidationReport report;
    auto& v = report.violations;
    const int n = inst.vertex_count();

    if (n < 1) v.push_back("vertex count must be positive");
    const Task& t = inst.task();
    if (!inst.has_vertex(t.start)) v.push_back("task start " + std::to_string(t.start) + " is not a vertex");
    if (!inst.has_vertex(t.dest)) v.push_back("task dest " + std::to_string(t.dest) + " is not a vertex");
    if (!(t.start < t.dest)) v.push_back("task start<dest violated");

    std::set<Edge> seen;
    for (const auto& spec : inst.edges()) {
        const Edge e = spec.edge;
        const std::string name = to_string(e);
        if (!inst.has_vertex(e.tail) || !inst.has_vertex(e.head)) {
            v.push_back("edge " + name + " references a missing vertex");
        }
        if (!(e.tail < e.head)) v.push_back("edge " + name + " violates tail<head");
        if (!seen.insert(e).second) v.push_back("edge " + name + " is duplicated");
        if (spec.p_fail < 0 || spec.p_fail > 1) v.push_back("edge " + name + " p_fail outside [0,1]");
    }

    std::set<SightEntry> seen_sight;
    for (const auto& s : inst.sights()) {
        const std::string name = std::to_string(s.observer) + " sees " + to_string(s.edge);
        if (!inst.has_vertex(s.observer)) v.push_back("sight " + name + " has a missing observer");
        if (!inst.has_edge(s.edge)) v.push_back("sight " + name + " references a missing edge");
        if (!(s.observer <= s.edge.tail)) v.push_back("sight " + name + " violates observer<=tail");
        if (!seen_sight.insert(s).second) v.push_back("sight " + name + " is duplicated");
    }
    return report;
}

Instance prune_extraneous(const Instance& inst) {
    const Task& t = inst.task();
    const EdgeSet& keep = inst.forward_cone(t.start);
    if (keep.empty()) {
        throw NoPath("no path from " + std::to_string(t.start) + " to " + std::to_string(t.dest));
    }
    std::vector<EdgeSpec> edges;
    for (const auto& spec : inst.edges()) {
        if (keep.contains(spec.edge)) edges.push_back(spec);
    }
    std::vector<SightEntry> sights;
    for (const auto& s : inst.sights()) {
        if (keep.contains(s.edge)) sights.push_back(s);
    }
    return Instance(inst.vertex_count(), std::move(edges), std::move(sights), t);
}

const EdgeSet& sight_of(const Instance& inst, VertexId v) { return inst.sight_of(v); }

const EdgeSet& forward_cone(const Instance& inst, VertexId v) { return inst.forward_cone(v); }

KnowledgeState observe(const Instance& inst, const KnowledgeState& k, VertexId v, const World& w) {
    for (const auto& [e, s] : k) {
        if (inst.has_edge(e) && w.status(e) != s) {
            throw InconsistentKnowledge("knowledge says " + to_string(e) + " is " + std::string(to_string(s)) +
                                        " but the world disagrees");
        }
    }
    KnowledgeState out = k;
    for (Edge e : inst.sight_of(v)) out.set(e, w.status(e));
    return out;
}

KnowledgeState restrict(const KnowledgeState& k, const EdgeSet& cone) {
    KnowledgeState out;
    for (const auto& [e, s] : k) {
        if (cone.contains(e)) out.set(e, s);
    }
    return out;
}

std::vector<KnowledgeState> all_assignments(const KnowledgeState& base, const EdgeSet& edges) {
    std::vector<KnowledgeState> out{base};
    for (Edge e : edges) {
        std::vector<KnowledgeState> next;
        next.reserve(out.size() * 2);
        for (const auto& k : out) {
            for (Status s : {Status::Up, Status::Down}) {
                KnowledgeState extended = k;
                extended.set(e, s);
                next.push_back(std::move(extended));
            }
        }
        out = std::move(next);
    }
    return out;
}

std::vector<KnowledgeState> initial_scenarios(const Instance& inst) {
    const VertexId s = inst.task().start;
    EdgeSet visible;
    for (Edge e : inst.sight_of(s)) {
        if (inst.forward_cone(s).contains(e)) visible.insert(e);
    }
    return all_assignments({}, visible);
}

}  // namespace sws
