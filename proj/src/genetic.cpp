#include "ssp/genetic.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <stdexcept>
#include <string>

#include "ssp/local_search.hpp"

namespace ssp {

namespace {

void require_permutation(const JobSequence& seq, const char* what) {
    const std::size_t n = seq.size();
    std::vector<std::uint8_t> seen(n, 0);
    for (int job : seq) {
        if (job < 0 || static_cast<std::size_t>(job) >= n ||
            seen[static_cast<std::size_t>(job)]) {
            throw std::invalid_argument(std::string(what) +
                                        ": not a permutation of 0..n-1");
        }
        seen[static_cast<std::size_t>(job)] = 1;
    }
}

}  // namespace

void HgsParams::validate() const {
    if (mu < 2) {
        throw std::invalid_argument("mu must be at least 2");
    }
    if (lambda < 1) {
        throw std::invalid_argument("lambda must be at least 1");
    }
    if (mu_elite < 1 || mu_elite > mu) {
        throw std::invalid_argument("mu_elite must satisfy 0 < mu_elite <= mu");
    }
    if (mu_close < 1 || mu_close > mu - 1) {
        throw std::invalid_argument(
            "mu_close must satisfy 1 <= mu_close <= mu - 1");
    }
    if (i_max < 0) {
        throw std::invalid_argument("i_max must be non-negative");
    }
    if (time_limit_ms && *time_limit_ms < 0) {
        throw std::invalid_argument("time limit must be non-negative");
    }
}

JobSequence ox_crossover_with_cuts(const JobSequence& p1, const JobSequence& p2,
                                   int a, int b) {
    if (p1.size() != p2.size()) {
        throw std::invalid_argument("ox_crossover: parents differ in length");
    }
    require_permutation(p1, "ox_crossover parent 1");
    require_permutation(p2, "ox_crossover parent 2");
    const int n = static_cast<int>(p1.size());
    if (a < 0 || b < a || b >= n) {
        throw std::out_of_range("ox_crossover: cut positions out of range");
    }

    JobSequence child(static_cast<std::size_t>(n), -1);
    std::vector<std::uint8_t> present(static_cast<std::size_t>(n), 0);
    for (int p = a; p <= b; ++p) {
        const int job = p1[static_cast<std::size_t>(p)];
        child[static_cast<std::size_t>(p)] = job;
        present[static_cast<std::size_t>(job)] = 1;
    }

    int write = (b + 1) % n;
    for (int step = 0; step < n && write != a; ++step) {
        const int job = p2[static_cast<std::size_t>((b + 1 + step) % n)];
        if (present[static_cast<std::size_t>(job)]) continue;
        child[static_cast<std::size_t>(write)] = job;
        present[static_cast<std::size_t>(job)] = 1;
        write = (write + 1) % n;
    }
    return child;
}

JobSequence ox_crossover(const JobSequence& p1, const JobSequence& p2,
                         Rng& rng) {
    if (p1.size() != p2.size() || p1.empty()) {
        throw std::invalid_argument(
            "ox_crossover: parents must be non-empty and equally long");
    }
    int a = static_cast<int>(rng.uniform_index(p1.size()));
    int b = static_cast<int>(rng.uniform_index(p1.size()));
    if (a > b) std::swap(a, b);
    return ox_crossover_with_cuts(p1, p2, a, b);
}

int broken_pairs_distance(const JobSequence& s1, const JobSequence& s2) {
    if (s1.size() != s2.size()) {
        throw std::invalid_argument(
            "broken_pairs_distance: sequences differ in length");
    }
    const std::size_t n = s1.size();
    if (n < 2) return 0;
    require_permutation(s1, "broken_pairs_distance s1");
    require_permutation(s2, "broken_pairs_distance s2");

    std::vector<int> pos2(n, 0);
    for (std::size_t p = 0; p < n; ++p) {
        pos2[static_cast<std::size_t>(s2[p])] = static_cast<int>(p);
    }
    int broken = 0;
    for (std::size_t p = 0; p + 1 < n; ++p) {
        const int du = pos2[static_cast<std::size_t>(s1[p])];
        const int dv = pos2[static_cast<std::size_t>(s1[p + 1])];
        if (du - dv != 1 && dv - du != 1) ++broken;
    }
    return broken;
}

std::vector<FitnessRecord> compute_biased_fitness(const Population& pop,
                                                  int mu_elite, int mu_close) {
    const std::size_t size = pop.size();
    if (size < static_cast<std::size_t>(mu_close) + 1) {
        throw std::invalid_argument(
            "compute_biased_fitness: population smaller than mu_close + 1");
    }

    std::vector<FitnessRecord> records(size);

    // Diversity contribution: mean broken-pairs distance to the mu_close
    // nearest other members.
    std::vector<int> row;
    row.reserve(size);
    for (std::size_t i = 0; i < size; ++i) {
        row.clear();
        for (std::size_t j = 0; j < size; ++j) {
            if (j == i) continue;
            row.push_back(
                broken_pairs_distance(pop.members[i].seq, pop.members[j].seq));
        }
        std::partial_sort(row.begin(), row.begin() + mu_close, row.end());
        const int sum = std::accumulate(row.begin(), row.begin() + mu_close, 0);
        records[i].diversity = static_cast<double>(sum) / mu_close;
    }

    std::vector<std::size_t> order(size);

    // Objective ranks: lexicographic (switches, tie_break), older first on ties.
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const Evaluation& ea = pop.members[a].eval;
        const Evaluation& eb = pop.members[b].eval;
        if (ea < eb) return true;
        if (eb < ea) return false;
        return a < b;
    });
    for (std::size_t r = 0; r < size; ++r) {
        records[order[r]].obj_rank = static_cast<int>(r);
    }

    // Diversity ranks: decreasing contribution, older first on ties.
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (records[a].diversity != records[b].diversity) {
            return records[a].diversity > records[b].diversity;
        }
        return a < b;
    });
    for (std::size_t r = 0; r < size; ++r) {
        records[order[r]].div_rank = static_cast<int>(r);
    }

    const double weight =
        1.0 - static_cast<double>(mu_elite) / static_cast<double>(size);
    for (FitnessRecord& rec : records) {
        rec.biased = rec.obj_rank + weight * rec.div_rank;
    }
    return records;
}

std::size_t binary_tournament(const Population& pop,
                              const std::vector<FitnessRecord>& fitness,
                              Rng& rng) {
    if (pop.size() < 2 || fitness.size() != pop.size()) {
        throw std::invalid_argument(
            "binary_tournament: population and fitness must match, size >= 2");
    }
    const std::size_t a = rng.uniform_index(pop.size());
    const std::size_t b = rng.uniform_index(pop.size());
    return fitness[b].biased < fitness[a].biased ? b : a;
}

Population select_survivors(Population pop, const HgsParams& params) {
    const std::size_t target = static_cast<std::size_t>(params.mu);
    if (pop.size() != static_cast<std::size_t>(params.mu + params.lambda)) {
        throw std::invalid_argument(
            "select_survivors: population size must equal mu + lambda");
    }

    std::vector<std::uint8_t> has_clone;
    while (pop.size() > target) {
        const std::size_t size = pop.size();
        const std::vector<FitnessRecord> fitness =
            compute_biased_fitness(pop, params.mu_elite, params.mu_close);

        has_clone.assign(size, 0);
        bool any_clone = false;
        for (std::size_t i = 0; i < size; ++i) {
            if (has_clone[i]) continue;
            for (std::size_t j = i + 1; j < size; ++j) {
                if (pop.members[i].seq == pop.members[j].seq) {
                    has_clone[i] = has_clone[j] = 1;
                    any_clone = true;
                }
            }
        }

        // Worst biased fitness among the candidates; the youngest on a tie.
        std::size_t victim = size;
        for (std::size_t i = 0; i < size; ++i) {
            if (any_clone && !has_clone[i]) continue;
            if (victim == size || fitness[i].biased >= fitness[victim].biased) {
                victim = i;
            }
        }
        pop.members.erase(pop.members.begin() + static_cast<std::ptrdiff_t>(victim));
    }
    return pop;
}

SolveReport run_hgs(const Instance& inst, const HgsParams& params,
                    HgsObserver* observer) {
    params.validate();
    inst.validate();

    const auto start = std::chrono::steady_clock::now();
    const auto elapsed_ms = [&start] {
        return std::chrono::duration<double, std::milli>(
                   std::chrono::steady_clock::now() - start)
            .count();
    };

    SolveReport report;
    if (inst.n_jobs == 1) {
        report.best_sequence = identity_sequence(1);
        report.best = evaluate(inst, report.best_sequence);
        report.trace.push_back({0, report.best, elapsed_ms()});
        report.elapsed_ms = elapsed_ms();
        return report;
    }

    Rng rng(params.seed);
    DecodeWorkspace workspace(inst);
    Population pop;
    pop.members.reserve(static_cast<std::size_t>(params.mu + params.lambda));

    bool have_best = false;
    const auto consider = [&](const Individual& ind) {
        if (have_best && !(ind.eval < report.best)) return false;
        have_best = true;
        report.best = ind.eval;
        report.best_sequence = ind.seq;
        report.trace.push_back({report.iterations, ind.eval, elapsed_ms()});
        if (observer) observer->on_improvement(ind, report.iterations);
        return true;
    };

    for (int i = 0; i < params.mu; ++i) {
        JobSequence seq = identity_sequence(inst.n_jobs);
        rng.shuffle(seq);
        auto [improved_seq, eval] =
            local_search(workspace, std::move(seq), rng, params.ls_loop);
        pop.members.push_back({std::move(improved_seq), eval});
        consider(pop.members.back());
    }
    if (observer) observer->on_initialized(pop);

    std::int64_t non_improving = 0;
    while (non_improving < params.i_max) {
        if (params.time_limit_ms && elapsed_ms() >= static_cast<double>(
                                                        *params.time_limit_ms)) {
            break;
        }

        const std::vector<FitnessRecord> fitness =
            compute_biased_fitness(pop, params.mu_elite, params.mu_close);
        const std::size_t parent_a = binary_tournament(pop, fitness, rng);
        const std::size_t parent_b = binary_tournament(pop, fitness, rng);

        JobSequence child_seq = ox_crossover(pop.members[parent_a].seq,
                                             pop.members[parent_b].seq, rng);
        auto [improved_seq, eval] =
            local_search(workspace, std::move(child_seq), rng, params.ls_loop);
        ++report.iterations;

        pop.members.push_back({std::move(improved_seq), eval});
        if (observer) {
            observer->on_child_inserted(pop, pop.members.back(),
                                        report.iterations);
        }
        if (!consider(pop.members.back())) {
            ++non_improving;
        } else {
            non_improving = 0;
        }

        if (pop.size() == static_cast<std::size_t>(params.mu + params.lambda)) {
            if (observer) observer->on_before_selection(pop);
            pop = select_survivors(std::move(pop), params);
            if (observer) observer->on_after_selection(pop);
        }
    }

    report.elapsed_ms = elapsed_ms();
    return report;
}

}  // namespace ssp
