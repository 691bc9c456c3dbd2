#include "ssp/evaluation.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace ssp {

namespace {

// next[p * m + t] = first position >= p whose job needs tool t, or n if none.
// Row n is an all-n sentinel so lookups at p + 1 stay in bounds.
void build_next_needed(const Instance& inst, const JobSequence& seq,
                       std::vector<int>& next) {
    const int n = inst.n_jobs;
    const int m = inst.n_tools;
    next.assign(static_cast<std::size_t>(n + 1) * static_cast<std::size_t>(m), n);
    for (int p = n - 1; p >= 0; --p) {
        int* row = next.data() + static_cast<std::size_t>(p) * m;
        const int* below = row + m;
        std::copy(below, below + m, row);
        for (int tool : inst.requirements[static_cast<std::size_t>(seq[static_cast<std::size_t>(p)])]) {
            row[tool] = p;
        }
    }
}

// One KTNS pass over the sequence. The magazine starts empty and the first
// position loads exactly the first job's tools; later positions insert only
// missing required tools and, on overflow, evict the loaded tools whose next
// use lies furthest ahead (never used again counts as infinitely far), with
// ties broken toward the lowest-numbered tool. Returns the eviction count,
// which is the switch count under the lazy initial load.
//
// on_insert(tool, pos) fires when a tool enters the magazine, on_evict(tool,
// pos) when it leaves while position pos is being set up, and on_column(pos)
// after the magazine for pos is final.
template <typename OnInsert, typename OnEvict, typename OnColumn>
int ktns_run(const Instance& inst, const JobSequence& seq,
             const std::vector<int>& next_needed,
             std::vector<std::uint8_t>& magazine,
             std::vector<std::pair<int, int>>& eviction_order,
             OnInsert on_insert, OnEvict on_evict, OnColumn on_column) {
    const int n = inst.n_jobs;
    const int m = inst.n_tools;
    magazine.assign(static_cast<std::size_t>(m), 0);
    int loaded = 0;
    int evictions = 0;
    for (int p = 0; p < n; ++p) {
        const int* now = next_needed.data() + static_cast<std::size_t>(p) * m;
        for (int tool : inst.requirements[static_cast<std::size_t>(seq[static_cast<std::size_t>(p)])]) {
            if (!magazine[static_cast<std::size_t>(tool)]) {
                magazine[static_cast<std::size_t>(tool)] = 1;
                ++loaded;
                on_insert(tool, p);
            }
        }
        if (loaded > inst.capacity) {
            // A tool is required right now exactly when its next use is p.
            const int* upcoming = now + m;
            eviction_order.clear();
            for (int t = 0; t < m; ++t) {
                if (magazine[static_cast<std::size_t>(t)] && now[t] != p) {
                    eviction_order.emplace_back(upcoming[t], t);
                }
            }
            const int excess = loaded - inst.capacity;
            std::partial_sort(
                eviction_order.begin(), eviction_order.begin() + excess,
                eviction_order.end(),
                [](const std::pair<int, int>& a, const std::pair<int, int>& b) {
                    if (a.first != b.first) return a.first > b.first;
                    return a.second < b.second;
                });
            for (int i = 0; i < excess; ++i) {
                const int tool = eviction_order[static_cast<std::size_t>(i)].second;
                magazine[static_cast<std::size_t>(tool)] = 0;
                --loaded;
                ++evictions;
                on_evict(tool, p);
            }
            assert(loaded == inst.capacity);
        }
        on_column(p);
    }
    return evictions;
}

void require_valid(const Instance& inst, const JobSequence& seq) {
    if (!is_valid_sequence(inst, seq)) {
        throw std::invalid_argument(
            "sequence is not a permutation of the instance's jobs");
    }
}

}  // namespace

LoadedPlan ktns_decode(const Instance& inst, const JobSequence& seq) {
    require_valid(inst, seq);
    const int n = inst.n_jobs;
    const int m = inst.n_tools;

    std::vector<int> next_needed;
    build_next_needed(inst, seq, next_needed);

    LoadedPlan plan;
    plan.n_tools = m;
    plan.n_positions = n;
    plan.loaded.assign(static_cast<std::size_t>(m) * static_cast<std::size_t>(n), 0);

    std::vector<std::uint8_t> magazine;
    std::vector<std::pair<int, int>> eviction_order;
    const int evictions = ktns_run(
        inst, seq, next_needed, magazine, eviction_order,
        [](int, int) {}, [](int, int) {},
        [&](int p) {
            for (int t = 0; t < m; ++t) {
                plan.loaded[static_cast<std::size_t>(t) * n + static_cast<std::size_t>(p)] =
                    magazine[static_cast<std::size_t>(t)];
            }
        });

    plan.switches = evictions;
    assert(plan.switches == count_switches(plan));
    return plan;
}

int count_switches(const LoadedPlan& plan) {
    int switches = 0;
    for (int t = 0; t < plan.n_tools; ++t) {
        const std::uint8_t* row =
            plan.loaded.data() + static_cast<std::size_t>(t) * plan.n_positions;
        for (int p = 0; p + 1 < plan.n_positions; ++p) {
            if (row[p] == 1 && row[p + 1] == 0) ++switches;
        }
    }
    return switches;
}

double tie_break_objective(const LoadedPlan& plan) {
    double total = 0.0;
    for (int t = 0; t < plan.n_tools; ++t) {
        const std::uint8_t* row =
            plan.loaded.data() + static_cast<std::size_t>(t) * plan.n_positions;
        double row_sum = 0.0;
        int last_one = -1;
        for (int p = 0; p < plan.n_positions; ++p) {
            if (row[p] != 1) continue;
            if (last_one >= 0 && p - last_one > 1) {
                row_sum += std::sqrt(static_cast<double>(p - last_one - 1));
            }
            last_one = p;
        }
        total += row_sum;
    }
    return total;
}

Evaluation evaluate(const Instance& inst, const JobSequence& seq) {
    const LoadedPlan plan = ktns_decode(inst, seq);
    return Evaluation{plan.switches, tie_break_objective(plan)};
}

DecodeWorkspace::DecodeWorkspace(const Instance& inst) : instance_(&inst) {
    const std::size_t m = static_cast<std::size_t>(inst.n_tools);
    next_needed_.reserve((static_cast<std::size_t>(inst.n_jobs) + 1) * m);
    magazine_.reserve(m);
    last_unload_.assign(m, -1);
    row_tie_break_.assign(m, 0.0);
    eviction_order_.reserve(m);
}


Evaluation DecodeWorkspace::evaluate(const JobSequence& seq) {
    const Instance& inst = *instance_;
    assert(is_valid_sequence(inst, seq));
    build_next_needed(inst, seq, next_needed_);

    const std::size_t m = static_cast<std::size_t>(inst.n_tools);
    last_unload_.assign(m, -1);
    row_tie_break_.assign(m, 0.0);

    // A tool re-entering at p after an eviction at e was absent for columns
    // e..p-1, a zero block of size p - e bracketed by ones on both sides, so
    // the tie-break contributions can be accumulated from events alone.
    // Summation runs left to right within a row and then row by row, the
    // same operand order as the matrix-based tie_break_objective, so the
    // two paths agree bitwise.
    const int switches = ktns_run(
        inst, seq, next_needed_, magazine_, eviction_order_,
        [&](int tool, int p) {
            const int evicted_at = last_unload_[static_cast<std::size_t>(tool)];
            if (evicted_at >= 0) {
                row_tie_break_[static_cast<std::size_t>(tool)] +=
                    std::sqrt(static_cast<double>(p - evicted_at));
            }
        },
        [&](int tool, int p) { last_unload_[static_cast<std::size_t>(tool)] = p; },
        [](int) {});

    double total = 0.0;
    for (double row_sum : row_tie_break_) total += row_sum;
    return Evaluation{switches, total};
}

std::string format_plan(const Instance& inst, const JobSequence& seq,
                        const LoadedPlan& plan) {
    require_valid(inst, seq);
    std::ostringstream out;
    for (int t = 0; t < plan.n_tools; ++t) {
        for (int p = 0; p < plan.n_positions; ++p) {
            if (p > 0) out << ' ';
            const bool loaded = plan.at(t, p) != 0;
            const bool required =
                inst.job_requires(seq[static_cast<std::size_t>(p)], t);
            out << (loaded ? (required ? '1' : '+') : '0');
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace ssp
