#include "ssp/instance.hpp"

#include <sstream>
#include <stdexcept>

#include "doctest.h"
#include "fixtures.hpp"

using namespace ssp;

TEST_CASE("parses the canonical format") {
    const Instance inst = parse_instance(fixtures::kTenJobInstance);
    CHECK(inst.n_jobs == 10);
    CHECK(inst.n_tools == 10);
    CHECK(inst.capacity == 4);
    // job 1 needs tools 2 and 6; job 9 needs tools 4, 9 and 10 (1-based).
    CHECK(inst.requirements[0] == std::vector<int>{1, 5});
    CHECK(inst.requirements[8] == std::vector<int>{3, 8, 9});
    CHECK(inst.job_requires(0, 1));
    CHECK(!inst.job_requires(0, 0));
}

TEST_CASE("serialization round-trips") {
    const Instance inst = parse_instance(fixtures::kTenJobInstance);
    CHECK(serialize_instance(inst) == fixtures::kTenJobInstance);

    const Instance regen = generate_instance(7, 9, 4, 1, 4, 123);
    const Instance back = parse_instance(serialize_instance(regen));
    CHECK(back.n_jobs == regen.n_jobs);
    CHECK(back.requirements == regen.requirements);
}

TEST_CASE("parse rejects malformed input") {
    CHECK_THROWS_AS(parse_instance(""), std::runtime_error);
    CHECK_THROWS_AS(parse_instance("x y z\n"), std::runtime_error);
    // capacity larger than the tool count
    CHECK_THROWS_AS(parse_instance("1 2 3\n1\n1\n"), std::runtime_error);
    // truncated matrix
    CHECK_THROWS_AS(parse_instance("2 2 2\n1 0\n"), std::runtime_error);
    // cell outside {0, 1}
    CHECK_THROWS_AS(parse_instance("2 2 2\n1 0\n2 1\n"), std::runtime_error);
    // trailing content
    CHECK_THROWS_AS(parse_instance("1 1 1\n1\n1\n"), std::runtime_error);
    // a job with no tools
    CHECK_THROWS_AS(parse_instance("2 2 2\n1 0\n1 0\n"), std::runtime_error);
    // a job needing more tools than the magazine holds
    CHECK_THROWS_AS(parse_instance("2 3 1\n1 0\n1 1\n0 1\n"),
                    std::runtime_error);
    // non-positive dimensions
    CHECK_THROWS_AS(parse_instance("0 1 1\n"), std::runtime_error);
}

TEST_CASE("sequence validity") {
    const Instance inst = parse_instance(fixtures::kAllFitInstance);
    CHECK(is_valid_sequence(inst, {0, 1}));
    CHECK(is_valid_sequence(inst, {1, 0}));
    CHECK(!is_valid_sequence(inst, {0}));
    CHECK(!is_valid_sequence(inst, {0, 0}));
    CHECK(!is_valid_sequence(inst, {0, 2}));
    CHECK(identity_sequence(3) == JobSequence{0, 1, 2});
}

TEST_CASE("generator is deterministic and respects its bounds") {
    const Instance a = generate_instance(12, 15, 6, 2, 6, 42);
    const Instance b = generate_instance(12, 15, 6, 2, 6, 42);
    CHECK(a.requirements == b.requirements);

    const Instance c = generate_instance(12, 15, 6, 2, 6, 43);
    CHECK(a.requirements != c.requirements);

    a.validate();
    for (const auto& tools : a.requirements) {
        CHECK(tools.size() >= 2);
        CHECK(tools.size() <= 6);
    }

    CHECK_THROWS_AS(generate_instance(2, 1, 2, 1, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(generate_instance(2, 5, 3, 4, 4, 1), std::invalid_argument);
    CHECK_THROWS_AS(generate_instance(2, 5, 3, 2, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(generate_instance(0, 5, 3, 1, 2, 1), std::invalid_argument);
}

TEST_CASE("validate flags broken invariants") {
    Instance inst = parse_instance(fixtures::kAllFitInstance);
    CHECK_NOTHROW(inst.validate());

    Instance broken = inst;
    broken.requirements[0] = {2, 1};  // unsorted
    CHECK_THROWS_AS(broken.validate(), std::invalid_argument);

    broken = inst;
    broken.requirements[0] = {0, 0};  // duplicate
    CHECK_THROWS_AS(broken.validate(), std::invalid_argument);

    broken = inst;
    broken.requirements[0] = {5};  // out of range
    CHECK_THROWS_AS(broken.validate(), std::invalid_argument);

    broken = inst;
    broken.capacity = 0;
    CHECK_THROWS_AS(broken.validate(), std::invalid_argument);
}
