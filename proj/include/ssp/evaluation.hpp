#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ssp/instance.hpp"

namespace ssp {

// Tool-loading plan for one job sequence. loaded is row-major m x n:
// loaded[t * n_positions + p] is 1 iff tool t sits in the magazine while the
// p-th job of the sequence runs. Every column sums to at most the magazine
// capacity and covers the tools the job at that position requires.
struct LoadedPlan {
    int n_tools = 0;
    int n_positions = 0;
    std::vector<std::uint8_t> loaded;
    int switches = 0;

    std::uint8_t at(int tool, int position) const {
        return loaded[static_cast<std::size_t>(tool) * static_cast<std::size_t>(n_positions) +
                      static_cast<std::size_t>(position)];
    }
};

// Lexicographic objective pair: fewer switches first, smaller tie-break
// second. The tie-break sums sqrt(len) over all interior zero runs of the
// plan, so it prefers one short plus one long gap over two balanced ones.
struct Evaluation {
    int switches = 0;
    double tie_break = 0.0;

    friend bool operator==(const Evaluation& a, const Evaluation& b) {
        return a.switches == b.switches && a.tie_break == b.tie_break;
    }
    // "less" means strictly better.
    friend bool operator<(const Evaluation& a, const Evaluation& b) {
        if (a.switches != b.switches) return a.switches < b.switches;
        return a.tie_break < b.tie_break;
    }
};

// Decodes a sequence into the loading plan of the keep-tools-needed-soonest
// policy. The first position loads exactly the first job's tools; afterwards
// only required tools are inserted, and when the magazine overflows the
// evicted tools are those needed again furthest in the future (never-needed
// counts as furthest), evicting the lowest-numbered tool on ties.
// Throws std::invalid_argument if seq is not a permutation of the jobs.
LoadedPlan ktns_decode(const Instance& instance, const JobSequence& seq);

// Number of 1 -> 0 transitions summed over the plan's rows: each one is a
// tool removed from the magazine. The initial load is not counted.
int count_switches(const LoadedPlan& plan);

// Sum over rows of sqrt(run length) for every maximal zero run lying
// strictly between two ones. Leading and trailing zero runs do not count.
double tie_break_objective(const LoadedPlan& plan);

// ktns_decode + both objectives. Pure function of (instance, seq).
Evaluation evaluate(const Instance& instance, const JobSequence& seq);

// Reusable scratch for the hot loops of the local search and the genetic
// driver: same decode and objectives as evaluate(), no allocation after
// construction, no matrix materialization. Sequences are trusted to be
// valid permutations (checked only in debug builds).
class DecodeWorkspace {
public:
    explicit DecodeWorkspace(const Instance& instance);

    Evaluation evaluate(const JobSequence& seq);
    const Instance& instance() const { return *instance_; }

private:
    const Instance* instance_;
    std::vector<int> next_needed_;    // (n + 1) x m, position-major
    std::vector<std::uint8_t> magazine_;
    std::vector<int> last_unload_;    // per tool: position of its latest eviction, -1 if none
    std::vector<double> row_tie_break_;
    std::vector<std::pair<int, int>> eviction_order_;  // (next needed, tool)
};

// Plan rendered one tool row per line: '0' absent, '1' loaded and required,
// '+' loaded but not required (kept by the policy). Useful to diff decode
// output against a hand-checked fixture.
std::string format_plan(const Instance& instance, const JobSequence& seq,
                        const LoadedPlan& plan);

}  // namespace ssp
