#include "ssp/genetic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "fixtures.hpp"
#include "ssp/instance.hpp"

using namespace ssp;

namespace {

Population make_population(const Instance& inst,
                           std::vector<JobSequence> seqs) {
    Population pop;
    for (JobSequence& seq : seqs) {
        Individual ind;
        ind.eval = evaluate(inst, seq);
        ind.seq = std::move(seq);
        pop.members.push_back(std::move(ind));
    }
    return pop;
}

}  // namespace

TEST_CASE("order crossover on fixed cuts") {
    const JobSequence p1{0, 1, 2, 3, 4, 5};
    const JobSequence p2{5, 4, 3, 2, 1, 0};
    // keep positions 3..4 (1-based) from p1, fill from p2 after the cut
    CHECK(ox_crossover_with_cuts(p1, p2, 2, 3) ==
          JobSequence{5, 4, 2, 3, 1, 0});

    // whole-string copy
    CHECK(ox_crossover_with_cuts(p1, p2, 0, 5) == p1);

    // identical parents reproduce themselves for any cuts
    for (int a = 0; a < 6; ++a) {
        for (int b = a; b < 6; ++b) {
            CHECK(ox_crossover_with_cuts(p1, p1, a, b) == p1);
        }
    }

    CHECK_THROWS_AS(ox_crossover_with_cuts(p1, {0, 1}, 0, 1),
                    std::invalid_argument);
    CHECK_THROWS_AS(ox_crossover_with_cuts(p1, p2, 4, 2), std::out_of_range);
}

TEST_CASE("order crossover yields valid permutations") {
    Rng rng(17);
    const Instance inst = generate_instance(9, 9, 4, 1, 4, 99);
    for (int trial = 0; trial < 200; ++trial) {
        JobSequence p1 = identity_sequence(9);
        JobSequence p2 = identity_sequence(9);
        rng.shuffle(p1);
        rng.shuffle(p2);
        const JobSequence child = ox_crossover(p1, p2, rng);
        CHECK(is_valid_sequence(inst, child));
    }
}

TEST_CASE("broken-pairs distance counts missing undirected edges") {
    CHECK(broken_pairs_distance({0, 1, 2, 3}, {0, 1, 2, 3}) == 0);
    CHECK(broken_pairs_distance({0, 1, 2, 3}, {3, 2, 1, 0}) == 0);
    // edges {01,12,23} vs {01,13,32}: 12 missing, 23 present reversed
    CHECK(broken_pairs_distance({0, 1, 2, 3}, {0, 1, 3, 2}) == 1);
    CHECK(broken_pairs_distance({0, 1}, {1, 0}) == 0);
    CHECK_THROWS_AS(broken_pairs_distance({0, 1}, {0, 1, 2}),
                    std::invalid_argument);

    // symmetry on random pairs
    Rng rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        JobSequence a = identity_sequence(8);
        JobSequence b = identity_sequence(8);
        rng.shuffle(a);
        rng.shuffle(b);
        CHECK(broken_pairs_distance(a, b) == broken_pairs_distance(b, a));
    }
}

TEST_CASE("biased fitness combines objective and diversity ranks") {
    const Instance inst = parse_instance(fixtures::kTenJobInstance);
    Rng rng(11);
    std::vector<JobSequence> seqs;
    for (int i = 0; i < 20; ++i) {
        JobSequence seq = identity_sequence(inst.n_jobs);
        rng.shuffle(seq);
        seqs.push_back(seq);
    }
    const Population pop = make_population(inst, seqs);
    const auto fitness = compute_biased_fitness(pop, 10, 3);

    // ranks are 0-based permutations of the member indices
    std::vector<int> obj_seen(20, 0), div_seen(20, 0);
    for (const FitnessRecord& rec : fitness) {
        obj_seen[static_cast<std::size_t>(rec.obj_rank)] += 1;
        div_seen[static_cast<std::size_t>(rec.div_rank)] += 1;
        // mu_elite = 10, |P| = 20: weight is exactly 1/2
        CHECK(rec.biased ==
              doctest::Approx(rec.obj_rank + 0.5 * rec.div_rank));
    }
    CHECK(std::all_of(obj_seen.begin(), obj_seen.end(),
                      [](int v) { return v == 1; }));
    CHECK(std::all_of(div_seen.begin(), div_seen.end(),
                      [](int v) { return v == 1; }));

    CHECK_THROWS_AS(compute_biased_fitness(pop, 10, 20),
                    std::invalid_argument);
}

TEST_CASE("clone populations rank by insertion order") {
    const Instance inst = parse_instance(fixtures::kAllFitInstance);
    const Population pop =
        make_population(inst, {{0, 1}, {0, 1}, {0, 1}, {0, 1}});
    const auto fitness = compute_biased_fitness(pop, 2, 1);
    for (std::size_t i = 0; i < pop.size(); ++i) {
        CHECK(fitness[i].diversity == 0.0);
        CHECK(fitness[i].obj_rank == static_cast<int>(i));
        CHECK(fitness[i].div_rank == static_cast<int>(i));
    }
}

TEST_CASE("binary tournament prefers the smaller biased fitness") {
    const Instance inst = parse_instance(fixtures::kTenJobInstance);
    Rng seq_rng(21);
    std::vector<JobSequence> seqs;
    for (int i = 0; i < 3; ++i) {
        JobSequence seq = identity_sequence(inst.n_jobs);
        seq_rng.shuffle(seq);
        seqs.push_back(seq);
    }
    const Population pop = make_population(inst, seqs);
    const auto fitness = compute_biased_fitness(pop, 1, 1);

    // competitors sorted by fitness, then empirical win rates over 1e5
    // two-draw tournaments against the analytic probabilities 5/9, 3/9, 1/9
    std::vector<std::size_t> order{0, 1, 2};
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return fitness[a].biased < fitness[b].biased;
    });
    REQUIRE(fitness[order[0]].biased < fitness[order[1]].biased);
    REQUIRE(fitness[order[1]].biased < fitness[order[2]].biased);

    Rng rng(303);
    const int trials = 100000;
    std::vector<int> wins(3, 0);
    for (int t = 0; t < trials; ++t) {
        wins[binary_tournament(pop, fitness, rng)] += 1;
    }
    const double expected[] = {5.0 / 9.0, 3.0 / 9.0, 1.0 / 9.0};
    for (int r = 0; r < 3; ++r) {
        const double rate =
            static_cast<double>(wins[order[static_cast<std::size_t>(r)]]) / trials;
        CHECK(std::abs(rate - expected[r]) < 0.02);
    }
}

TEST_CASE("survivor selection keeps mu members and fires the clone rule first") {
    const Instance inst = parse_instance(fixtures::kTenJobInstance);
    HgsParams params;
    params.mu = 4;
    params.lambda = 2;
    params.mu_elite = 2;
    params.mu_close = 1;

    Rng rng(77);
    std::vector<JobSequence> seqs;
    JobSequence dup = identity_sequence(inst.n_jobs);
    rng.shuffle(dup);
    seqs.push_back(dup);
    seqs.push_back(dup);  // a clone pair
    for (int i = 0; i < 4; ++i) {
        JobSequence seq = identity_sequence(inst.n_jobs);
        rng.shuffle(seq);
        seqs.push_back(seq);
    }
    Population pop = make_population(inst, seqs);
    const Individual best_in = *std::min_element(
        pop.members.begin(), pop.members.end(),
        [](const Individual& a, const Individual& b) { return a.eval < b.eval; });

    const Population out = select_survivors(std::move(pop), params);
    CHECK(out.size() == 4);

    // the first removal must hit a clone copy, so at most one survives
    const auto copies = std::count_if(
        out.members.begin(), out.members.end(),
        [&](const Individual& ind) { return ind.seq == dup; });
    CHECK(copies <= 1);

    // the objective-best permutation always survives (elite preservation)
    const bool best_kept = std::any_of(
        out.members.begin(), out.members.end(),
        [&](const Individual& ind) { return ind.seq == best_in.seq; });
    CHECK(best_kept);
}

TEST_CASE("without duplicates the worst fitness members are removed") {
    const Instance inst = parse_instance(fixtures::kTenJobInstance);
    HgsParams params;
    params.mu = 3;
    params.lambda = 2;
    params.mu_elite = 1;
    params.mu_close = 1;

    Rng rng(15);
    std::vector<JobSequence> seqs;
    while (seqs.size() < 5) {
        JobSequence seq = identity_sequence(inst.n_jobs);
        rng.shuffle(seq);
        if (std::find(seqs.begin(), seqs.end(), seq) == seqs.end()) {
            seqs.push_back(seq);
        }
    }
    Population pop = make_population(inst, seqs);

    // simulate the contract: remove the worst under sequential recomputation
    Population expected = pop;
    for (int step = 0; step < params.lambda; ++step) {
        const auto fitness =
            compute_biased_fitness(expected, params.mu_elite, params.mu_close);
        std::size_t worst = 0;
        for (std::size_t i = 1; i < expected.size(); ++i) {
            if (fitness[i].biased >= fitness[worst].biased) worst = i;
        }
        expected.members.erase(expected.members.begin() +
                               static_cast<std::ptrdiff_t>(worst));
    }

    const Population out = select_survivors(std::move(pop), params);
    REQUIRE(out.size() == expected.size());
    for (std::size_t i = 0; i < out.size(); ++i) {
        CHECK(out.members[i].seq == expected.members[i].seq);
    }
}

TEST_CASE("survivor selection rejects wrong population sizes") {
    const Instance inst = parse_instance(fixtures::kAllFitInstance);
    HgsParams params;
    params.mu = 2;
    params.lambda = 1;
    params.mu_elite = 1;
    params.mu_close = 1;
    Population pop = make_population(inst, {{0, 1}, {1, 0}});
    CHECK_THROWS_AS(select_survivors(std::move(pop), params),
                    std::invalid_argument);
}

TEST_CASE("parameter bounds are enforced") {
    HgsParams params;
    CHECK_NOTHROW(params.validate());

    HgsParams bad = params;
    bad.mu_elite = 0;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad = params;
    bad.mu_elite = bad.mu + 1;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad = params;
    bad.mu_close = 0;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad = params;
    bad.mu_close = bad.mu;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad = params;
    bad.lambda = 0;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("the driver is deterministic for a fixed seed") {
    const Instance inst = generate_instance(9, 10, 4, 1, 4, 321);
    HgsParams params;
    params.mu = 6;
    params.lambda = 8;
    params.mu_elite = 3;
    params.mu_close = 2;
    params.i_max = 60;
    params.seed = 9;

    const SolveReport a = run_hgs(inst, params);
    const SolveReport b = run_hgs(inst, params);
    CHECK(a.best_sequence == b.best_sequence);
    CHECK(a.best == b.best);
    CHECK(a.iterations == b.iterations);
    REQUIRE(a.trace.size() == b.trace.size());
    for (std::size_t i = 0; i < a.trace.size(); ++i) {
        CHECK(a.trace[i].iteration == b.trace[i].iteration);
        CHECK(a.trace[i].eval == b.trace[i].eval);
    }
}

TEST_CASE("degenerate and trivial instances") {
    const Instance single = parse_instance(fixtures::kSingleJobInstance);
    HgsParams params;
    const SolveReport r1 = run_hgs(single, params);
    CHECK(r1.best_sequence == JobSequence{0});
    CHECK(r1.best.switches == 0);
    CHECK(r1.iterations == 0);

    const Instance all_fit = parse_instance(fixtures::kAllFitInstance);
    params.i_max = 5;
    const SolveReport r2 = run_hgs(all_fit, params);
    CHECK(r2.best.switches == 0);
    REQUIRE(!r2.trace.empty());
    CHECK(r2.trace.front().iteration == 0);  // found during initialization
}

TEST_CASE("the improvement trace is sorted and non-increasing") {
    const Instance inst = generate_instance(10, 12, 4, 1, 4, 77);
    HgsParams params;
    params.mu = 8;
    params.lambda = 10;
    params.mu_elite = 4;
    params.mu_close = 3;
    params.i_max = 120;
    params.seed = 5;

    const SolveReport report = run_hgs(inst, params);
    REQUIRE(!report.trace.empty());
    for (std::size_t i = 1; i < report.trace.size(); ++i) {
        CHECK(report.trace[i - 1].iteration <= report.trace[i].iteration);
        CHECK(report.trace[i].eval < report.trace[i - 1].eval);
    }
    CHECK(report.trace.back().eval == report.best);
    CHECK(evaluate(inst, report.best_sequence) == report.best);
}
