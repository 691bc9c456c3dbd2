#include "ssp/oracle.hpp"

#include <stdexcept>

#include "doctest.h"
#include "fixtures.hpp"
#include "ssp/evaluation.hpp"
#include "ssp/instance.hpp"
#include "ssp/rng.hpp"

using namespace ssp;

TEST_CASE("single-job instance is trivially optimal") {
    const Instance inst = parse_instance(fixtures::kSingleJobInstance);
    const OracleResult result = exact_best_sequence(inst);
    CHECK(result.best_switches == 0);
    CHECK(result.best_sequence == JobSequence{0});
    CHECK(result.explored == 1);
    CHECK(exact_min_loading(inst, {0}) == 0);
}

TEST_CASE("all-fitting tools give a zero-switch optimum") {
    const Instance inst = parse_instance(fixtures::kAllFitInstance);
    const OracleResult result = exact_best_sequence(inst);
    CHECK(result.best_switches == 0);
    CHECK(result.explored == 2);
}

TEST_CASE("guards fire") {
    const Instance inst = generate_instance(6, 6, 3, 1, 3, 5);
    CHECK_THROWS_AS(exact_best_sequence(inst, 5), std::invalid_argument);
    CHECK_THROWS_AS(exact_min_loading(inst, identity_sequence(6), 1),
                    std::length_error);
    CHECK_THROWS_AS(exact_min_loading(inst, {0, 1}), std::invalid_argument);
}

TEST_CASE("ten-job fixture optimum is stable") {
    const Instance inst = parse_instance(fixtures::kTenJobInstance);
    const JobSequence identity = identity_sequence(inst.n_jobs);

    // The identity sequence reaches 12, so the optimum cannot exceed it.
    CHECK(exact_min_loading(inst, identity) == fixtures::kTenJobSwitches);

    const OracleResult result = exact_best_sequence(inst);
    CHECK(result.explored == 3628800);
    CHECK(result.best_switches <= fixtures::kTenJobSwitches);
    // Regression pin: computed once by this exhaustive search, then frozen.
    CHECK(result.best_switches == fixtures::kTenJobOptimalSwitches);
    CHECK(evaluate(inst, result.best_sequence).switches == result.best_switches);
}

TEST_CASE("the greedy decode attains the tooling optimum") {
    Rng rng(2024);
    int checked = 0;
    while (checked < 120) {
        const int n = 2 + static_cast<int>(rng.uniform_index(7));   // <= 8
        const int m = 2 + static_cast<int>(rng.uniform_index(9));   // <= 10
        const int cap_hi = m < 5 ? m : 5;
        const int c = 1 + static_cast<int>(rng.uniform_index(static_cast<std::size_t>(cap_hi)));
        const Instance inst =
            generate_instance(n, m, c, 1, c, 7000 + static_cast<std::uint64_t>(checked));
        JobSequence seq = identity_sequence(n);
        rng.shuffle(seq);
        const int greedy = evaluate(inst, seq).switches;
        const int exact = exact_min_loading(inst, seq);
        CHECK(exact <= greedy);
        CHECK(exact == greedy);
        ++checked;
    }
}

TEST_CASE("oracle optimum never exceeds a sampled sequence") {
    Rng rng(31);
    for (int trial = 0; trial < 10; ++trial) {
        const Instance inst =
            generate_instance(6, 8, 3, 1, 3, 400 + static_cast<std::uint64_t>(trial));
        const OracleResult result = exact_best_sequence(inst);
        JobSequence seq = identity_sequence(6);
        rng.shuffle(seq);
        CHECK(result.best_switches <= evaluate(inst, seq).switches);
    }
}
