#pragma once

#include <filesystem>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>

#include "sws/approx_solver.hpp"
#include "sws/generator.hpp"
#include "sws/model.hpp"
#include "sws/oracle.hpp"

namespace sws::cmd {

// Exit codes shared by every command.
inline constexpr int exit_ok = 0;
inline constexpr int exit_domain = 1;  // invalid instance, failed check, bad query
inline constexpr int exit_io = 2;      // unreadable or unparsable input

enum class Mode { Rational, Float };

struct DecideArgs {
    std::filesystem::path instance;
    std::optional<std::filesystem::path> scenario;
    std::string edge;
    Mode mode = Mode::Rational;
    double tol = 1e-9;
};

struct ApproxArgs {
    DecideArgs query;
    ApproxConfig config;
};

/// Root value and first move for one start scenario.
struct RootAnswer {
    Rational value;
    Move move;
};
using RootSolver = std::function<RootAnswer(const Instance&, const KnowledgeState&)>;

/// The exact solver as a RootSolver.
RootAnswer exact_root(const Instance& inst, const KnowledgeState& k);

int validate(const std::filesystem::path& instance, std::ostream& out);
int decide(const DecideArgs& args, std::ostream& out);
int oracle_check(const std::filesystem::path& instance, std::size_t cap, std::ostream& out,
                 const RootSolver& solver = exact_root);
int monte_carlo(const std::filesystem::path& instance, std::uint64_t trials, std::uint64_t seed, std::ostream& out);
int generate(const GeneratorConfig& cfg, std::size_t count, const std::filesystem::path& out_dir, std::ostream& out);
int gap_search(const GeneratorConfig& cfg, std::size_t count, const std::optional<std::filesystem::path>& out_dir,
               std::ostream& out);
int approx(const ApproxArgs& args, std::ostream& out);
int approx_compare(const std::filesystem::path& instance_dir, const ApproxConfig& cfg, std::ostream& out);

/// Comma-separated decimals or fractions, e.g. "0,1/4,0.5".
std::vector<Rational> parse_palette(std::string_view text);

}  // namespace sws::cmd
