#include <doctest.h>

#include <cmath>

#include "fixtures.hpp"
#include "sws/oracle.hpp"
#include "sws/sim.hpp"

using namespace sws;
using namespace sws::fixtures;

TEST_CASE("sample_world") {
    Instance sure(3, {{{1, 2}, q("0")}, {{2, 3}, q("0")}, {{1, 3}, q("0")}}, {}, {1, 3});
    Instance doomed(3, {{{1, 2}, q("1")}, {{2, 3}, q("1")}, {{1, 3}, q("1")}}, {}, {1, 3});
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        for (const auto& [e, s] : sim::sample_world(sure, seed)) CHECK(s == Status::Up);
        for (const auto& [e, s] : sim::sample_world(doomed, seed)) CHECK(s == Status::Down);
    }
    CHECK(sim::sample_world(fix_c(), 99) == sim::sample_world(fix_c(), 99));
}

TEST_CASE("run_trials matches the enumerated policy value") {
    const double expected_b = to_double(oracle::policy_value(fix_b(), oracle::exact_policy(fix_b())));
    const double expected_a = to_double(oracle::policy_value(fix_a(), oracle::exact_policy(fix_a())));
    CHECK(expected_b == doctest::Approx(0.85));
    CHECK(expected_a == doctest::Approx(0.7));

    auto b = sim::run_trials(fix_b(), 100000, 42);
    CHECK(std::abs(b.rate - expected_b) <= 3 * b.std_error);
    auto a = sim::run_trials(fix_a(), 100000, 42);
    CHECK(std::abs(a.rate - expected_a) <= 3 * a.std_error);
}

TEST_CASE("run_trials is deterministic") {
    CHECK(sim::run_trials(fix_c(), 2000, 5) == sim::run_trials(fix_c(), 2000, 5));
}

TEST_CASE("empty batch") {
    auto empty = sim::run_trials(fix_b(), 0, 1);
    CHECK(empty.successes == 0);
    CHECK(empty.rate == 0);
    CHECK_FALSE(empty.rate_defined);
}
