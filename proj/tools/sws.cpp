// Command-line front end for the safest-with-sight solvers.

#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "sws/commands.hpp"
#include "sws/errors.hpp"

namespace {

using namespace sws;

void add_generator_flags(CLI::App* app, GeneratorConfig& cfg, std::string& palette, std::string& sight_mode,
                         std::size_t& count) {
    app->add_option("--count", count, "Number of instances")->default_val(count);
    app->add_option("--seed", cfg.seed, "Suite seed")->default_val(cfg.seed);
    app->add_option("--min-vertices", cfg.min_vertices)->default_val(cfg.min_vertices);
    app->add_option("--max-vertices", cfg.max_vertices)->default_val(cfg.max_vertices);
    app->add_option("--edge-density", cfg.edge_density)->default_val(cfg.edge_density);
    app->add_option("--sight-density", cfg.sight_density)->default_val(cfg.sight_density);
    app->add_option("--max-edges", cfg.max_edges)->default_val(cfg.max_edges);
    app->add_option("--max-sight", cfg.max_sight)->default_val(cfg.max_sight);
    app->add_option("--palette", palette, "Comma-separated p_fail values")->default_val(palette);
    app->add_option("--sight-mode", sight_mode)
        ->check(CLI::IsMember({"any", "none", "immediate"}))
        ->default_val(sight_mode);
}

void finish_generator_config(GeneratorConfig& cfg, const std::string& palette, const std::string& sight_mode) {
    cfg.palette = cmd::parse_palette(palette);
    static const std::map<std::string, SightMode> modes{
        {"any", SightMode::Any}, {"none", SightMode::None}, {"immediate", SightMode::ImmediateNeighbors}};
    cfg.sight_mode = modes.at(sight_mode);
}

void add_query_flags(CLI::App* app, cmd::DecideArgs& args, std::string& mode) {
    app->add_option("instance", args.instance, "Instance file")->required();
    app->add_option("scenario", args.scenario, "Scenario file (statuses known at the start)");
    app->add_option("--edge", args.edge, "Queried first edge, tail-head")->required();
    app->add_option("--mode", mode)->check(CLI::IsMember({"rational", "float"}))->default_val(mode);
    app->add_option("--tol", args.tol, "Float-mode tie tolerance")->default_val(args.tol);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Safest-with-sight pathfinding: exact solver, oracles, simulation, approximation"};
    app.require_subcommand(1);

    std::filesystem::path instance;
    auto* validate = app.add_subcommand("validate", "Check an instance's structural invariants");
    validate->add_option("instance", instance)->required();

    cmd::DecideArgs decide_args;
    std::string decide_mode = "rational";
    auto* decide = app.add_subcommand("decide", "Will the ideal pathfinder take --edge first?");
    add_query_flags(decide, decide_args, decide_mode);

    std::size_t cap = 20;
    bool all_scenarios = true;
    auto* check = app.add_subcommand("oracle-check", "Compare the solver with brute-force world enumeration");
    check->add_option("instance", instance)->required();
    check->add_option("--cap", cap, "Maximum edge count for enumeration")->default_val(cap);
    check->add_flag("--all-scenarios", all_scenarios, "Check every start scenario (default)");

    std::uint64_t trials = 100000, seed = 42;
    auto* mc = app.add_subcommand("mc", "Monte Carlo trials of the exact policy");
    mc->add_option("instance", instance)->required();
    mc->add_option("--trials", trials)->default_val(trials);
    mc->add_option("--seed", seed)->default_val(seed);

    GeneratorConfig gen_cfg;
    std::string palette = "0,0.25,0.5,0.75,1", sight_mode = "any";
    std::size_t count = 500;
    std::filesystem::path out_dir = "instances";
    auto* gen = app.add_subcommand("gen", "Write a seeded suite of random instances");
    add_generator_flags(gen, gen_cfg, palette, sight_mode, count);
    gen->add_option("--out", out_dir, "Output directory")->default_val(out_dir.string());

    std::optional<std::filesystem::path> gap_out;
    auto* gap = app.add_subcommand("gap-search", "Find instances where the sight-blind first move is wrong");
    add_generator_flags(gap, gen_cfg, palette, sight_mode, count);
    gap->add_option("--out", gap_out, "Directory for the gap instances");

    cmd::ApproxArgs approx_args;
    std::string approx_mode = "rational";
    auto* approx = app.add_subcommand("approx", "Decide with the similarity-cache approximation");
    add_query_flags(approx, approx_args.query, approx_mode);
    approx->add_option("--threshold", approx_args.config.similarity_threshold)->default_val(0);
    approx->add_option("--cache-size", approx_args.config.max_entries)->default_val(1024)->check(CLI::PositiveNumber);

    ApproxConfig compare_cfg;
    auto* compare = app.add_subcommand("approx-compare", "Approximate vs exact over a directory of instances");
    compare->add_option("instance_dir", instance)->required();
    compare->add_option("--threshold", compare_cfg.similarity_threshold)->default_val(1);
    compare->add_option("--cache-size", compare_cfg.max_entries)->default_val(1024)->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : cmd::exit_io;
    }

    try {
        if (*validate) return cmd::validate(instance, std::cout);
        if (*decide) {
            decide_args.mode = decide_mode == "float" ? cmd::Mode::Float : cmd::Mode::Rational;
            return cmd::decide(decide_args, std::cout);
        }
        if (*check) {
            return cmd::oracle_check(instance, cap, std::cout);
        }
        if (*mc) return cmd::monte_carlo(instance, trials, seed, std::cout);
        if (*gen) {
            finish_generator_config(gen_cfg, palette, sight_mode);
            return cmd::generate(gen_cfg, count, out_dir, std::cout);
        }
        if (*gap) {
            finish_generator_config(gen_cfg, palette, sight_mode);
            return cmd::gap_search(gen_cfg, count, gap_out, std::cout);
        }
        if (*approx) {
            approx_args.query.mode = approx_mode == "float" ? cmd::Mode::Float : cmd::Mode::Rational;
            return cmd::approx(approx_args, std::cout);
        }
        if (*compare) return cmd::approx_compare(instance, compare_cfg, std::cout);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return cmd::exit_io;
    }
    return cmd::exit_io;
}
