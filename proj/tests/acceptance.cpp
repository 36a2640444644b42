// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "fixtures.hpp"
#include "reference_oracles.hpp"
#include "sws/approx_solver.hpp"
#include "sws/commands.hpp"
#include "sws/exact_solver.hpp"
#include "sws/generator.hpp"
#include "sws/oracle.hpp"
#include "sws/sim.hpp"

using namespace sws;

namespace {

constexpr std::size_t suite_size = 200;
constexpr double suite_time_limit_s = 60.0;
constexpr std::size_t special_case_count = 50;
constexpr std::size_t gap_search_count = 500;
constexpr std::uint64_t gap_search_seed = 7;
constexpr std::uint64_t mc_trials = 100000;
constexpr int mc_seeds = 20;
constexpr int mc_required = 19;
constexpr double mc_sigmas = 3.0;

/// Generated suite for the oracle-equivalence criterion: at most 6 vertices,
/// 9 edges, 4 sight entries, p_fail in {0, 1/4, 1/2, 3/4, 1}.
GeneratorConfig oracle_suite_config() {
    GeneratorConfig cfg;
    cfg.min_vertices = 3;
    cfg.max_vertices = 6;
    cfg.max_edges = 9;
    cfg.max_sight = 4;
    cfg.sight_density = 0.25;
    cfg.palette = {Rational(0), Rational(1, 4), Rational(1, 2), Rational(3, 4), Rational(1)};
    cfg.seed = 20240601;
    return cfg;
}

struct Verdict {
    bool pass;
    std::string detail;
};

int failures = 0;

void report(const char* id, const char* title, const std::function<Verdict()>& check) {
    Verdict v;
    try {
        v = check();
    } catch (const std::exception& e) {
        v = {false, std::string("exception: ") + e.what()};
    }
    if (!v.pass) ++failures;
    std::cout << (v.pass ? "[PASS] " : "[FAIL] ") << id << " " << title << ": " << v.detail << std::endl;
}

Verdict oracle_equivalence(const std::vector<Instance>& suite) {
    const auto start = std::chrono::steady_clock::now();
    std::size_t scenarios = 0, value_mismatch = 0, move_mismatch = 0, out_of_bounds = 0;
    const auto palette = oracle_suite_config().palette;
    for (const auto& inst : suite) {
        bool in_palette = true;
        for (const auto& spec : inst.edges()) {
            in_palette = in_palette && std::find(palette.begin(), palette.end(), spec.p_fail) != palette.end();
        }
        if (inst.vertex_count() > 6 || inst.edges().size() > 9 || inst.sights().size() > 4 || !in_palette) {
            ++out_of_bounds;
        }
        ExactSolver<Rational> solver(inst);
        const VertexId s = inst.task().start;
        for (const auto& k : initial_scenarios(inst)) {
            ++scenarios;
            if (solver.best_value(s, k) != oracle::value(inst, s, k)) ++value_mismatch;
            if (solver.next_move(s, k) != oracle::first_move(inst, s, k)) ++move_mismatch;
        }
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream d;
    d << suite.size() << " instances (" << out_of_bounds << " out of bounds), " << scenarios << " scenarios, " << value_mismatch << " value mismatches, "
      << move_mismatch << " move mismatches, " << seconds << " s (limit " << suite_time_limit_s << " s)";
    return {suite.size() >= suite_size && out_of_bounds == 0 && value_mismatch == 0 && move_mismatch == 0 && seconds < suite_time_limit_s,
            d.str()};
}

Verdict no_sight_closed_form() {
    GeneratorConfig cfg = oracle_suite_config();
    cfg.sight_mode = SightMode::None;
    cfg.seed = 31;
    std::size_t wrong = 0, over_memo = 0;
    for (const auto& inst : generate_suite(cfg, special_case_count)) {
        ExactSolver<Rational> solver(inst);
        if (solver.best_value(inst.task().start, {}) != reference::best_path_product(inst)) ++wrong;
        for (Edge e : inst.out_edges(inst.task().start)) {
            ExactSolver<Rational> fresh(inst);
            fresh.success(e, {});
            if (fresh.memo_stats().entries > inst.edges().size()) ++over_memo;
        }
    }
    std::ostringstream d;
    d << special_case_count << " instances, " << wrong << " value mismatches, " << over_memo
      << " queries with more memo entries than edges";
    return {wrong == 0 && over_memo == 0, d.str()};
}

Verdict immediate_sight_recurrence() {
    GeneratorConfig cfg = oracle_suite_config();
    cfg.sight_mode = SightMode::ImmediateNeighbors;
    cfg.sight_density = 0.6;
    cfg.seed = 37;
    std::size_t wrong = 0, over_memo = 0, with_sight = 0;
    for (const auto& inst : generate_suite(cfg, special_case_count)) {
        with_sight += inst.sights().empty() ? 0 : 1;
        reference::ImmediateSight recurrence(inst);
        for (const auto& k : initial_scenarios(inst)) {
            ExactSolver<Rational> solver(inst);
            if (solver.best_value(inst.task().start, k) != recurrence.root(k)) ++wrong;
            const auto stats = solver.memo_stats();
            if (stats.empty_cone_entries > inst.edges().size() || stats.empty_cone_entries != stats.entries) {
                ++over_memo;
            }
        }
    }
    std::ostringstream d;
    d << special_case_count << " instances (" << with_sight << " with sight), " << wrong << " value mismatches, "
      << over_memo << " queries breaking the empty-cone memo bound";
    return {wrong == 0 && over_memo == 0 && with_sight > 0, d.str()};
}

Verdict theorem_witness() {
    const Instance c = fixtures::fix_c();
    ExactSolver<Rational> solver(c);
    const Move exact_move = solver.next_move(1, {});
    const Rational exact_value = solver.best_value(1, {});
    const Rational oracle_value = oracle::value(c, 1, {});
    const Move blind_move = oracle::sight_blind_policy(c)(1, {});
    const Rational blind_value = oracle::sight_blind_value(c, 1);

    GeneratorConfig cfg;
    cfg.seed = gap_search_seed;
    std::ostringstream search_out;
    const int search_code = cmd::gap_search(cfg, gap_search_count, std::nullopt, search_out);
    const auto found = oracle::find_greedy_gap(cfg, gap_search_count).size();

    const bool pass = exact_move == Edge{1, 2} && exact_value == Rational(27, 40) && oracle_value == exact_value &&
                      blind_move == Edge{1, 5} && blind_value == Rational(3, 5) && oracle::is_greedy_gap(c) &&
                      search_code == 0 && found >= 1;
    std::ostringstream d;
    d << "exact " << (exact_move ? to_string(*exact_move) : "halt") << " " << describe(exact_value) << ", blind "
      << (blind_move ? to_string(*blind_move) : "halt") << " " << describe(blind_value) << ", gap search found "
      << found << " of " << gap_search_count;
    return {pass, d.str()};
}

Verdict monte_carlo() {
    const Instance b = fixtures::fix_b();
    const Rational expected = oracle::policy_value(b, oracle::exact_policy(b));
    int within = 0;
    double worst = 0;
    for (int i = 0; i < mc_seeds; ++i) {
        auto batch = sim::run_trials(b, mc_trials, 1000 + static_cast<std::uint64_t>(i));
        const double z = std::abs(batch.rate - to_double(expected)) / batch.std_error;
        worst = std::max(worst, z);
        if (z <= mc_sigmas) ++within;
    }
    std::ostringstream d;
    d << "policy value " << describe(expected) << ", " << within << "/" << mc_seeds << " seeds within "
      << mc_sigmas << " stderr (need " << mc_required << "), worst |z| " << worst;
    return {expected == Rational(17, 20) && within >= mc_required, d.str()};
}

Verdict approximation(const std::vector<Instance>& suite) {
    std::size_t unequal = 0, non_monotone = 0, over_capacity = 0;
    std::size_t total_similar = 0;
    for (const auto& inst : suite) {
        const VertexId s = inst.task().start;
        ExactSolver<Rational> exact(inst);
        exact.record_trace(true);
        ApproxSolver<Rational> approx(inst, {0, 1024});
        for (const auto& k : initial_scenarios(inst)) {
            for (Edge e : inst.out_edges(s)) {
                if (approx.approx_success(e, k).value != exact.success(e, k)) ++unequal;
            }
        }

        std::size_t previous = 0;
        for (std::size_t t = 0; t <= 4; ++t) {
            auto r = replay_lookups(exact.trace(), {t, 8});
            if (r.similar_hits < previous) ++non_monotone;
            previous = r.similar_hits;
        }
        total_similar += previous;

        for (std::size_t capacity : {1u, 2u, 5u}) {
            for (std::size_t t : {0u, 1u, 2u}) {
                ApproxSolver<Rational> bounded(inst, {t, capacity});
                for (const auto& k : initial_scenarios(inst)) bounded.best_value(s, k);
                if (bounded.cache().peak_size() > capacity) ++over_capacity;
            }
        }
    }
    std::ostringstream d;
    d << unequal << " threshold-0 mismatches, " << non_monotone << " non-monotone replays (" << total_similar
      << " similar hits at threshold 4), " << over_capacity << " capacity overruns";
    return {unequal == 0 && non_monotone == 0 && over_capacity == 0, d.str()};
}

Verdict trial_semantics(const std::vector<Instance>& suite) {
    std::size_t trials = 0, known_down = 0, bad_halts = 0, bad_moves = 0;
    for (const auto& inst : suite) {
        ExactSolver<Rational> solver(inst);
        ExactSolver<Rational> audit(inst);
        oracle::Policy checked = [&](VertexId v, const KnowledgeState& k) {
            Move m = solver.next_move(v, k);
            Rational best(0);
            for (Edge e : inst.out_edges(v)) {
                if (!k.is(e, Status::Down)) best = std::max(best, audit.success(e, k));
            }
            if (!m && best != 0) ++bad_halts;
            if (m && (best == 0 || k.is(*m, Status::Down))) ++bad_moves;
            return m;
        };
        for (const auto& ww : oracle::enumerate_worlds(inst)) {
            ++trials;
            try {
                oracle::simulate_policy(inst, ww.world, checked);
            } catch (const PolicyChoseKnownDown&) {
                ++known_down;
            }
        }
    }
    std::ostringstream d;
    d << trials << " world trials, " << known_down << " known-down crossings, " << bad_halts << " wrong halts, "
      << bad_moves << " moves into dead ends";
    return {known_down == 0 && bad_halts == 0 && bad_moves == 0, d.str()};
}

}  // namespace

int main() {
    const auto suite = generate_suite(oracle_suite_config(), suite_size);

    report("AC1", "oracle equivalence", [&] { return oracle_equivalence(suite); });
    report("AC2", "no-sight closed form", no_sight_closed_form);
    report("AC3", "immediate-neighbour sight", immediate_sight_recurrence);
    report("AC4", "greedy counterexample", theorem_witness);
    report("AC5", "Monte Carlo consistency", monte_carlo);
    report("AC6", "approximation sanity", [&] { return approximation(suite); });
    report("AC7", "trial semantics", [&] { return trial_semantics(suite); });

    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
    return failures == 0 ? 0 : 1;
}
