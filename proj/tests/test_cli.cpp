#include <doctest.h>

#include <filesystem>
#include <sstream>

#include "fixtures.hpp"
#include "sws/commands.hpp"
#include "sws/errors.hpp"
#include "sws/generator.hpp"
#include "sws/io.hpp"

using namespace sws;
using namespace sws::fixtures;
namespace fs = std::filesystem;

namespace {

const fs::path fixture_dir = SWS_FIXTURE_DIR;

fs::path scratch(const std::string& name) {
    fs::path dir = fs::temp_directory_path() / ("sws_test_" + name);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

struct Run {
    int code;
    std::string out;
};

template <class Fn>
Run run(Fn&& fn) {
    std::ostringstream out;
    int code = fn(out);
    return {code, out.str()};
}

cmd::DecideArgs query(const char* instance, std::optional<const char*> scenario, const char* edge) {
    cmd::DecideArgs args;
    args.instance = fixture_dir / instance;
    if (scenario) args.scenario = fixture_dir / *scenario;
    args.edge = edge;
    return args;
}

}  // namespace

TEST_CASE("fixture files match the in-code fixtures") {
    CHECK(io::load_instance(fixture_dir / "fix_a.json") == fix_a());
    CHECK(io::load_instance(fixture_dir / "fix_b.json") == fix_b());
    CHECK(io::load_instance(fixture_dir / "fix_c.json") == fix_c());
    CHECK(io::load_instance(fixture_dir / "fix_d.json") == fix_d());
}

TEST_CASE("instance round-trip over generated suites") {
    GeneratorConfig cfg;
    cfg.seed = 9;
    cfg.palette = {q("0.1"), q("0.333"), Rational(1, 3), q("0.875"), q("1")};
    for (const auto& inst : generate_suite(cfg, 50)) {
        const Instance back = io::parse_instance(io::serialize_instance(inst));
        CHECK(back == inst);
        CHECK(io::serialize_instance(back) == io::serialize_instance(inst));
    }
}

TEST_CASE("instance parse errors") {
    CHECK_THROWS_AS(io::parse_instance("{"), ParseError);
    CHECK_THROWS_AS(io::parse_instance(R"({"vertices": 2, "edges": [], "task": {"start": 1}})"), ParseError);
    CHECK_THROWS_AS(
        io::parse_instance(
            R"({"vertices": 2, "edges": [{"tail": 1, "head": 2, "p_fail": 0.5}], "task": {"start": 1, "dest": 2}})"),
        ParseError);
}

TEST_CASE("scenario parsing") {
    const Instance b = fix_b();
    auto s = io::parse_scenario(R"({"statuses": {"2-3": "down"}})", b);
    CHECK(s.statuses == KnowledgeState{{{2, 3}, Status::Down}});
    CHECK_FALSE(s.world);
    CHECK(io::parse_scenario(io::serialize_scenario(s), b).statuses == s.statuses);

    CHECK_THROWS_AS(io::parse_scenario(R"({"statuses": {"2-4": "up"}})", b), ParseError);
    CHECK_THROWS_AS(io::parse_scenario(R"({"statuses": {"2-3": "maybe"}})", b), ParseError);
    CHECK_THROWS_AS(io::parse_scenario(R"({"statuses": {"23": "up"}})", b), ParseError);
    CHECK_THROWS_AS(io::parse_scenario(R"({"statuses": {"2-3": "up"}, "world": true})", b), ParseError);

    auto w = io::parse_scenario(R"({"statuses": {"1-2": "up", "1-3": "down", "2-3": "up"}, "world": true})", b);
    CHECK(io::to_world(w, b).status({1, 3}) == Status::Down);
}

TEST_CASE("cmd validate") {
    CHECK(run([](auto& o) { return cmd::validate(fixture_dir / "fix_a.json", o); }).code == 0);
    auto bad = run([](auto& o) { return cmd::validate(fixture_dir / "bad_order.json", o); });
    CHECK(bad.code == 1);
    CHECK(bad.out.find("tail<head") != std::string::npos);
    CHECK(run([](auto& o) { return cmd::validate(fixture_dir / "missing.json", o); }).code == 2);
}

TEST_CASE("cmd decide") {
    auto up = run([](auto& o) { return cmd::decide(query("fix_b.json", "b_up.json", "1-2"), o); });
    CHECK(up.code == 0);
    CHECK(up.out == "decision: true\nsuccess: 9/10 (0.9)\nselected: 1-2\n");

    auto down = run([](auto& o) { return cmd::decide(query("fix_b.json", "b_down.json", "1-2"), o); });
    CHECK(down.out == "decision: false\nsuccess: 0 (0)\nselected: 1-3\n");

    auto a = run([](auto& o) { return cmd::decide(query("fix_a.json", std::nullopt, "1-3"), o); });
    CHECK(a.out == "decision: true\nsuccess: 7/10 (0.7)\nselected: 1-3\n");

    auto fl = query("fix_a.json", std::nullopt, "1-3");
    fl.mode = cmd::Mode::Float;
    CHECK(run([&](auto& o) { return cmd::decide(fl, o); }).out == "decision: true\nsuccess: 0.7\nselected: 1-3\n");

    CHECK(run([](auto& o) { return cmd::decide(query("fix_b.json", "b_up.json", "2-3"), o); }).code == 1);
    CHECK(run([](auto& o) { return cmd::decide(query("fix_b.json", "b_up.json", "x"), o); }).code == 1);
    // Start sees 2-3 but the scenario does not say.
    CHECK(run([](auto& o) { return cmd::decide(query("fix_b.json", "empty.json", "1-2"), o); }).code == 1);
    CHECK(run([](auto& o) { return cmd::decide(query("fix_b.json", "nope.json", "1-2"), o); }).code == 2);
}

TEST_CASE("cmd oracle-check") {
    auto b = run([](auto& o) { return cmd::oracle_check(fixture_dir / "fix_b.json", 20, o); });
    CHECK(b.code == 0);
    CHECK(b.out.find("checked 2 scenarios, 0 mismatches") != std::string::npos);

    auto c = run([](auto& o) { return cmd::oracle_check(fixture_dir / "fix_c.json", 20, o); });
    CHECK(c.code == 0);
    CHECK(c.out.find("checked 1 scenarios, 0 mismatches") != std::string::npos);

    cmd::RootSolver mutated = [](const Instance& inst, const KnowledgeState& k) {
        auto answer = cmd::exact_root(inst, k);
        answer.value *= Rational(99, 100);
        return answer;
    };
    auto broken = run([&](auto& o) { return cmd::oracle_check(fixture_dir / "fix_b.json", 20, o, mutated); });
    CHECK(broken.code == 1);
    CHECK(broken.out.find("MISMATCH") != std::string::npos);

    CHECK(run([](auto& o) { return cmd::oracle_check(fixture_dir / "fix_c.json", 4, o); }).code == 1);
}

TEST_CASE("cmd mc") {
    auto r = run([](auto& o) { return cmd::monte_carlo(fixture_dir / "fix_b.json", 1000, 42, o); });
    CHECK(r.code == 0);
    CHECK(r.out.find("trials: 1000\nseed: 42\n") == 0);
    auto empty = run([](auto& o) { return cmd::monte_carlo(fixture_dir / "fix_b.json", 0, 42, o); });
    CHECK(empty.out.find("rate: 0 (undefined: no trials)") != std::string::npos);
}

TEST_CASE("cmd gen is deterministic and gap-search finds FIX-C-like instances") {
    GeneratorConfig cfg;
    cfg.seed = 7;
    const fs::path one = scratch("gen1"), two = scratch("gen2");
    CHECK(run([&](auto& o) { return cmd::generate(cfg, 25, one, o); }).code == 0);
    CHECK(run([&](auto& o) { return cmd::generate(cfg, 25, two, o); }).code == 0);
    for (const auto& entry : fs::directory_iterator(one)) {
        CHECK(io::read_file(entry.path()) == io::read_file(two / entry.path().filename()));
        CHECK(validate(io::load_instance(entry.path())).ok());
    }

    auto gaps = run([&](auto& o) { return cmd::gap_search(cfg, 500, std::nullopt, o); });
    CHECK(gaps.code == 0);
    CHECK(gaps.out.find("gap: instance") != std::string::npos);

    GeneratorConfig empty = cfg;
    empty.edge_density = 0;
    empty.max_attempts = 20;
    CHECK_THROWS_AS(generate_instance(empty, 0), GeneratorExhausted);
    CHECK(run([&](auto& o) { return cmd::generate(empty, 1, scratch("gen3"), o); }).code == 1);
}

TEST_CASE("cmd approx") {
    cmd::ApproxArgs args{query("fix_b.json", "b_up.json", "1-2"), {0, 64}};
    auto exact = run([&](auto& o) { return cmd::decide(args.query, o); });
    auto approx = run([&](auto& o) { return cmd::approx(args, o); });
    CHECK(approx.code == 0);
    CHECK(approx.out.rfind(exact.out, 0) == 0);
    CHECK(approx.out.find("similar_hits: 0") != std::string::npos);

    const fs::path dir = scratch("compare");
    GeneratorConfig cfg;
    cfg.seed = 7;
    for (std::uint64_t i = 0; i < 10; ++i) io::save_instance(dir / ("i" + std::to_string(i) + ".json"), generate_instance(cfg, i));
    auto table = run([&](auto& o) { return cmd::approx_compare(dir, {1, 64}, o); });
    CHECK(table.code == 0);
    CHECK(table.out.find("match_rate:") != std::string::npos);
    auto zero = run([&](auto& o) { return cmd::approx_compare(dir, {0, 64}, o); });
    CHECK(zero.out.find("match_rate: 1 (10/10)") != std::string::npos);
}

TEST_CASE("palette parsing") {
    CHECK(cmd::parse_palette("0,1/4,0.5") == std::vector<Rational>{0, Rational(1, 4), Rational(1, 2)});
    CHECK_THROWS_AS(cmd::parse_palette("0,,1"), ParseError);
}
