#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "sws/model.hpp"

namespace sws::io {

// Instance file:
//   {"vertices": 3,
//    "edges": [{"tail": 1, "head": 2, "p_fail": "0.1"}, ...],
//    "sight": [{"observer": 1, "tail": 2, "head": 3}, ...],
//    "task": {"start": 1, "dest": 3}}
// p_fail is a decimal or "n/d" string so it is read exactly.
//
// Scenario file:
//   {"statuses": {"2-3": "up", "1-3": "down"}, "world": false}

/// Parses without structural validation; throws ParseError on malformed text.
Instance parse_instance(std::string_view text);
std::string serialize_instance(const Instance& inst);

struct Scenario {
    KnowledgeState statuses;
    bool world = false;
};

/// Throws ParseError on malformed text and on edges the instance lacks. A
/// world scenario must assign every edge.
Scenario parse_scenario(std::string_view text, const Instance& inst);
std::string serialize_scenario(const Scenario& scenario);

World to_world(const Scenario& scenario, const Instance& inst);

/// Throws ParseError when the file cannot be read.
std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view contents);

Instance load_instance(const std::filesystem::path& path);
void save_instance(const std::filesystem::path& path, const Instance& inst);
Scenario load_scenario(const std::filesystem::path& path, const Instance& inst);

}  // namespace sws::io
