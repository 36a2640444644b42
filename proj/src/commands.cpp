#include "sws/commands.hpp"

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "sws/errors.hpp"
#include "sws/exact_solver.hpp"
#include "sws/io.hpp"
#include "sws/sim.hpp"

namespace sws::cmd {

namespace fs = std::filesystem;

namespace {

template <class Fn>
int guarded(std::ostream& out, Fn&& fn) {
    try {
        return fn();
    } catch (const ParseError& e) {
        out << "error: " << e.what() << "\n";
        return exit_io;
    } catch (const fs::filesystem_error& e) {
        out << "error: " << e.what() << "\n";
        return exit_io;
    } catch (const Error& e) {
        out << "error: " << e.what() << "\n";
        return exit_domain;
    }
}

/// Loads, validates and prunes an instance file.
Instance load_valid(const fs::path& path) {
    Instance inst = io::load_instance(path);
    auto report = validate(inst);
    if (!report.ok()) throw InvalidInstance(path.string() + ": " + report.violations.front());
    return prune_extraneous(inst);
}

std::string move_name(const Move& m) { return m ? to_string(*m) : std::string("halt"); }

struct PreparedQuery {
    Instance inst;
    KnowledgeState knowledge;
    Edge edge;
};

PreparedQuery prepare(const DecideArgs& args) {
    PreparedQuery q{load_valid(args.instance), {}, {}};
    if (args.scenario) q.knowledge = io::load_scenario(*args.scenario, q.inst).statuses;
    auto edge = parse_edge_key(args.edge);
    if (!edge) throw InvalidQuery("bad --edge '" + args.edge + "', expected tail-head");
    if (edge->tail != q.inst.task().start || !q.inst.has_edge(*edge)) {
        throw InvalidQuery("edge " + args.edge + " does not leave the start vertex " +
                           std::to_string(q.inst.task().start));
    }
    q.edge = *edge;
    return q;
}

template <class Solver>
void print_decision(Solver& solver, const PreparedQuery& q, std::ostream& out) {
    const VertexId s = q.inst.task().start;
    for (Edge seen : q.inst.sight_of(s)) {
        if (!q.knowledge.known(seen)) {
            throw InvalidQuery("scenario lacks the status of " + to_string(seen) + ", visible from the start");
        }
    }
    Move selected = solver.next_move(s, q.knowledge);
    auto value = [&] {
        if constexpr (requires { solver.success(q.edge, q.knowledge); }) {
            return solver.success(q.edge, q.knowledge);
        } else {
            return solver.approx_success(q.edge, q.knowledge).value;
        }
    }();
    out << "decision: " << (selected == q.edge ? "true" : "false") << "\n";
    out << "success: " << describe(value) << "\n";
    out << "selected: " << move_name(selected) << "\n";
}

void print_report(const CacheReport& r, std::ostream& out) {
    out << "exact_hits: " << r.exact_hits << "\n";
    out << "similar_hits: " << r.similar_hits << "\n";
    out << "misses: " << r.misses << "\n";
    out << "evictions: " << r.evictions << "\n";
}

}  // namespace

RootAnswer exact_root(const Instance& inst, const KnowledgeState& k) {
    ExactSolver<Rational> solver(inst);
    const VertexId s = inst.task().start;
    return {solver.best_value(s, k), solver.next_move(s, k)};
}

int validate(const fs::path& instance, std::ostream& out) {
    return guarded(out, [&] {
        auto report = sws::validate(io::load_instance(instance));
        if (report.ok()) {
            out << "ok\n";
            return exit_ok;
        }
        for (const auto& v : report.violations) out << "violation: " << v << "\n";
        return exit_domain;
    });
}

int decide(const DecideArgs& args, std::ostream& out) {
    return guarded(out, [&] {
        PreparedQuery q = prepare(args);
        if (args.mode == Mode::Rational) {
            ExactSolver<Rational> solver(q.inst);
            print_decision(solver, q, out);
        } else {
            ExactSolver<double> solver(q.inst, {args.tol});
            print_decision(solver, q, out);
        }
        return exit_ok;
    });
}

int oracle_check(const fs::path& instance, std::size_t cap, std::ostream& out, const RootSolver& solver) {
    return guarded(out, [&] {
        Instance inst = load_valid(instance);
        if (inst.edges().size() > cap) {
            throw TooManyEdges(std::to_string(inst.edges().size()) + " edges exceed --cap " + std::to_string(cap));
        }
        const VertexId s = inst.task().start;
        std::size_t checked = 0, mismatches = 0;
        for (const auto& k : initial_scenarios(inst)) {
            RootAnswer got = solver(inst, k);
            Rational expected = oracle::value(inst, s, k, cap);
            Move expected_move = oracle::first_move(inst, s, k, cap);
            const bool equal = got.value == expected && got.move == expected_move;
            ++checked;
            if (!equal) ++mismatches;
            out << "scenario " << to_string(k) << ": solver " << describe(got.value) << " " << move_name(got.move)
                << " | oracle " << describe(expected) << " " << move_name(expected_move) << " : "
                << (equal ? "equal" : "MISMATCH") << "\n";
        }
        out << "checked " << checked << " scenarios, " << mismatches << " mismatches\n";
        return mismatches == 0 ? exit_ok : exit_domain;
    });
}

int monte_carlo(const fs::path& instance, std::uint64_t trials, std::uint64_t seed, std::ostream& out) {
    return guarded(out, [&] {
        sim::TrialBatch b = sim::run_trials(load_valid(instance), trials, seed);
        out << "trials: " << b.n << "\n";
        out << "seed: " << b.seed << "\n";
        out << "successes: " << b.successes << "\n";
        out << "rate: " << describe(b.rate) << (b.rate_defined ? "" : " (undefined: no trials)") << "\n";
        out << "stderr: " << describe(b.std_error) << "\n";
        return exit_ok;
    });
}

int generate(const GeneratorConfig& cfg, std::size_t count, const fs::path& out_dir, std::ostream& out) {
    return guarded(out, [&] {
        fs::create_directories(out_dir);
        for (std::size_t i = 0; i < count; ++i) {
            std::ostringstream name;
            name << "instance_" << std::setw(4) << std::setfill('0') << i << ".json";
            io::save_instance(out_dir / name.str(), generate_instance(cfg, i));
            out << (out_dir / name.str()).string() << "\n";
        }
        return exit_ok;
    });
}

int gap_search(const GeneratorConfig& cfg, std::size_t count, const std::optional<fs::path>& out_dir,
               std::ostream& out) {
    return guarded(out, [&] {
        if (out_dir) fs::create_directories(*out_dir);
        std::size_t found = 0;
        for (std::size_t i = 0; i < count; ++i) {
            Instance inst = generate_instance(cfg, i);
            auto witness = oracle::greedy_gap_scenario(inst);
            if (!witness) continue;
            ++found;
            out << "gap: instance " << i << " scenario " << to_string(*witness) << " exact "
                << move_name(exact_root(inst, *witness).move) << " blind "
                << move_name(oracle::sight_blind_policy(inst)(inst.task().start, *witness)) << "\n";
            if (out_dir) {
                std::ostringstream name;
                name << "gap_" << std::setw(4) << std::setfill('0') << i << ".json";
                io::save_instance(*out_dir / name.str(), inst);
            }
        }
        out << "found " << found << " gap instances among " << count << "\n";
        return found > 0 ? exit_ok : exit_domain;
    });
}

int approx(const ApproxArgs& args, std::ostream& out) {
    return guarded(out, [&] {
        PreparedQuery q = prepare(args.query);
        if (args.query.mode == Mode::Rational) {
            ApproxSolver<Rational> solver(q.inst, args.config);
            print_decision(solver, q, out);
            print_report(solver.report(), out);
        } else {
            ApproxSolver<double> solver(q.inst, args.config, {args.query.tol});
            print_decision(solver, q, out);
            print_report(solver.report(), out);
        }
        return exit_ok;
    });
}

int approx_compare(const fs::path& instance_dir, const ApproxConfig& cfg, std::ostream& out) {
    return guarded(out, [&] {
        std::vector<fs::path> files;
        for (const auto& entry : fs::directory_iterator(instance_dir)) {
            if (entry.path().extension() == ".json") files.push_back(entry.path());
        }
        std::sort(files.begin(), files.end());
        std::vector<Instance> instances;
        for (const auto& f : files) instances.push_back(load_valid(f));

        auto rows = agreement_report(instances, cfg);
        out << "file\tdecision_match\tvalue_gap\texact_hits\tsimilar_hits\tmisses\tevictions\n";
        std::size_t matches = 0;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const auto& r = rows[i];
            matches += r.decision_match ? 1 : 0;
            out << files[i].filename().string() << "\t" << (r.decision_match ? "true" : "false") << "\t"
                << describe(r.value_gap) << "\t" << r.report.exact_hits << "\t" << r.report.similar_hits << "\t"
                << r.report.misses << "\t" << r.report.evictions << "\n";
        }
        const double rate = rows.empty() ? 0.0 : static_cast<double>(matches) / static_cast<double>(rows.size());
        out << "match_rate: " << describe(rate) << " (" << matches << "/" << rows.size() << ")\n";
        return exit_ok;
    });
}

std::vector<Rational> parse_palette(std::string_view text) {
    std::vector<Rational> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto comma = text.find(',', pos);
        if (comma == std::string_view::npos) comma = text.size();
        out.push_back(parse_rational(text.substr(pos, comma - pos)));
        pos = comma + 1;
    }
    return out;
}

}  // namespace sws::cmd
