#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "ssp/evaluation.hpp"
#include "ssp/instance.hpp"
#include "ssp/rng.hpp"

namespace ssp {

struct Individual {
    JobSequence seq;
    Evaluation eval;
};

// Members in insertion order; older individuals come first. Parameters are
// passed alongside rather than stored, so Population stays a plain value.
struct Population {
    std::vector<Individual> members;

    std::size_t size() const { return members.size(); }
};

struct HgsParams {
    int mu = 20;
    int lambda = 40;
    int mu_elite = 10;
    int mu_close = 3;
    std::int64_t i_max = 2000;  // consecutive non-improving children before stop
    std::optional<std::int64_t> time_limit_ms;
    std::uint64_t seed = 1;
    bool ls_loop = false;  // repeat the three descents until a stable pass

    // Throws std::invalid_argument on violated bounds.
    void validate() const;
};

// Rank data for one population member.
struct FitnessRecord {
    int obj_rank = 0;       // 0 = lexicographically best (switches, tie_break)
    int div_rank = 0;       // 0 = largest diversity contribution
    double diversity = 0.0; // mean broken-pairs distance to mu_close nearest
    double biased = 0.0;    // obj_rank + (1 - mu_elite/|P|) * div_rank
};

// Order crossover with explicit 0-based inclusive cut positions a <= b: the
// child keeps p1[a..b] in place and fills the remaining slots, walking
// positions b+1, b+2, ... with wraparound, with p2's jobs in p2's circular
// order starting after b, skipping jobs already present.
JobSequence ox_crossover_with_cuts(const JobSequence& p1, const JobSequence& p2,
                                   int a, int b);

// Draws the two cut positions uniformly (two draws, then ordered).
JobSequence ox_crossover(const JobSequence& p1, const JobSequence& p2, Rng& rng);

// Undirected Hamiltonian-path edges of s1 that are absent from s2; a reversed
// sequence is at distance 0. Throws std::invalid_argument on length mismatch.
int broken_pairs_distance(const JobSequence& s1, const JobSequence& s2);

// Biased fitness of every member (Eq. over objective and diversity ranks);
// ties within either sort resolve by insertion order, older first. Requires
// |pop| >= mu_close + 1.
std::vector<FitnessRecord> compute_biased_fitness(const Population& pop,
                                                  int mu_elite, int mu_close);

// Two uniform draws with replacement; returns the index of the draw with the
// smaller biased fitness (the first draw on a tie).
std::size_t binary_tournament(const Population& pop,
                              const std::vector<FitnessRecord>& fitness,
                              Rng& rng);

// Removes lambda members one at a time, recomputing biased fitness before
// each removal: if any permutation occurs twice, the worst-fitness member
// among those having a clone goes; otherwise the worst-fitness member
// overall. Requires |pop| = mu + lambda; returns exactly mu members.
Population select_survivors(Population pop, const HgsParams& params);

// One point of the improvement trace: the best-ever evaluation changed at
// this child count.
struct ImprovementPoint {
    std::int64_t iteration;
    Evaluation eval;
    double elapsed_ms;
};

struct SolveReport {
    JobSequence best_sequence;
    Evaluation best{};
    std::int64_t iterations = 0;  // children generated
    double elapsed_ms = 0.0;
    std::vector<ImprovementPoint> trace;
};

// Instrumentation hooks; every callback fires after the population reached
// the stated state. Used by tests and by the CLI trace dump.
class HgsObserver {
public:
    virtual ~HgsObserver() = default;
    virtual void on_initialized(const Population&) {}
    virtual void on_child_inserted(const Population&, const Individual&,
                                   std::int64_t /*iteration*/) {}
    virtual void on_before_selection(const Population&) {}
    virtual void on_after_selection(const Population&) {}
    virtual void on_improvement(const Individual&, std::int64_t /*iteration*/) {}
};

// The full hybrid genetic search: mu random locally-searched individuals,
// then one offspring per generation (binary tournament twice, order
// crossover, local search, insertion, survivor selection at mu + lambda)
// until i_max consecutive children fail to improve the best evaluation or
// the time limit expires.
SolveReport run_hgs(const Instance& inst, const HgsParams& params,
                    HgsObserver* observer = nullptr);

}  // namespace ssp
