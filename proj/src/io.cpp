#include "sws/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "sws/errors.hpp"

namespace sws::io {

using nlohmann::json;

namespace {

const json& field(const json& obj, const char* name) {
    if (!obj.is_object() || !obj.contains(name)) throw ParseError(std::string("missing field '") + name + "'");
    return obj.at(name);
}

int integer_field(const json& obj, const char* name) {
    const json& v = field(obj, name);
    if (!v.is_number_integer()) throw ParseError(std::string("field '") + name + "' must be an integer");
    return v.get<int>();
}

json parse_json(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
}

Status parse_status(const json& v, const std::string& key) {
    if (v == "up") return Status::Up;
    if (v == "down") return Status::Down;
    throw ParseError("status of " + key + " must be \"up\" or \"down\"");
}

}  // namespace

Instance parse_instance(std::string_view text) {
    const json doc = parse_json(text);
    const int n = integer_field(doc, "vertices");

    std::vector<EdgeSpec> edges;
    const json& edge_list = field(doc, "edges");
    if (!edge_list.is_array()) throw ParseError("'edges' must be an array");
    for (const auto& item : edge_list) {
        const json& p = field(item, "p_fail");
        if (!p.is_string()) throw ParseError("p_fail must be a decimal string, e.g. \"0.25\"");
        edges.push_back({{integer_field(item, "tail"), integer_field(item, "head")},
                         parse_rational(p.get<std::string>())});
    }

    std::vector<SightEntry> sights;
    if (doc.contains("sight")) {
        const json& sight_list = doc.at("sight");
        if (!sight_list.is_array()) throw ParseError("'sight' must be an array");
        for (const auto& item : sight_list) {
            sights.push_back(
                {integer_field(item, "observer"), {integer_field(item, "tail"), integer_field(item, "head")}});
        }
    }

    const json& task = field(doc, "task");
    return Instance(n, std::move(edges), std::move(sights), Task{integer_field(task, "start"), integer_field(task, "dest")});
}

std::string serialize_instance(const Instance& inst) {
    json doc;
    doc["vertices"] = inst.vertex_count();
    doc["edges"] = json::array();
    for (const auto& spec : inst.edges()) {
        doc["edges"].push_back(
            {{"tail", spec.edge.tail}, {"head", spec.edge.head}, {"p_fail", format_rational(spec.p_fail)}});
    }
    doc["sight"] = json::array();
    for (const auto& s : inst.sights()) {
        doc["sight"].push_back({{"observer", s.observer}, {"tail", s.edge.tail}, {"head", s.edge.head}});
    }
    doc["task"] = {{"start", inst.task().start}, {"dest", inst.task().dest}};
    return doc.dump(2) + "\n";
}

Scenario parse_scenario(std::string_view text, const Instance& inst) {
    const json doc = parse_json(text);
    Scenario scenario;
    if (doc.contains("world")) {
        if (!doc.at("world").is_boolean()) throw ParseError("'world' must be a boolean");
        scenario.world = doc.at("world").get<bool>();
    }
    if (doc.contains("statuses")) {
        const json& statuses = doc.at("statuses");
        if (!statuses.is_object()) throw ParseError("'statuses' must be an object");
        for (const auto& [key, value] : statuses.items()) {
            auto e = parse_edge_key(key);
            if (!e) throw ParseError("bad edge key '" + key + "', expected \"tail-head\"");
            if (!inst.has_edge(*e)) throw ParseError("scenario references unknown edge " + key);
            scenario.statuses.set(*e, parse_status(value, key));
        }
    }
    if (scenario.world) {
        for (const auto& spec : inst.edges()) {
            if (!scenario.statuses.known(spec.edge)) {
                throw ParseError("world scenario lacks edge " + to_string(spec.edge));
            }
        }
    }
    return scenario;
}

std::string serialize_scenario(const Scenario& scenario) {
    json doc;
    doc["statuses"] = json::object();
    for (const auto& [e, s] : scenario.statuses) doc["statuses"][to_string(e)] = std::string(to_string(s));
    doc["world"] = scenario.world;
    return doc.dump(2) + "\n";
}

World to_world(const Scenario& scenario, const Instance& inst) {
    std::vector<std::pair<Edge, Status>> statuses;
    for (const auto& spec : inst.edges()) {
        auto s = scenario.statuses.status(spec.edge);
        if (!s) throw ParseError("world scenario lacks edge " + to_string(spec.edge));
        statuses.emplace_back(spec.edge, *s);
    }
    return World(std::move(statuses));
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot read " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write " + path.string());
    out << contents;
}

Instance load_instance(const std::filesystem::path& path) { return parse_instance(read_file(path)); }

void save_instance(const std::filesystem::path& path, const Instance& inst) {
    write_file(path, serialize_instance(inst));
}

Scenario load_scenario(const std::filesystem::path& path, const Instance& inst) {
    return parse_scenario(read_file(path), inst);
}

}  // namespace sws::io
