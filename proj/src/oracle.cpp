#include "ssp/oracle.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <stdexcept>
#include <unordered_map>

#include "ssp/evaluation.hpp"

namespace ssp {

OracleResult exact_best_sequence(const Instance& inst, int max_n) {
    if (inst.n_jobs > max_n) {
        throw std::invalid_argument(
            "exact_best_sequence: instance has " + std::to_string(inst.n_jobs) +
            " jobs, guard allows at most " + std::to_string(max_n));
    }

    DecodeWorkspace workspace(inst);
    JobSequence seq = identity_sequence(inst.n_jobs);

    OracleResult result;
    result.best_switches = std::numeric_limits<int>::max();
    do {
        const Evaluation eval = workspace.evaluate(seq);
        ++result.explored;
        if (eval.switches < result.best_switches) {
            result.best_switches = eval.switches;
            result.best_sequence = seq;
        }
    } while (std::next_permutation(seq.begin(), seq.end()));
    return result;
}

int exact_min_loading(const Instance& inst, const JobSequence& seq,
                      std::size_t max_states) {
    if (inst.n_tools > 64) {
        throw std::invalid_argument(
            "exact_min_loading: supports at most 64 tools");
    }
    if (!is_valid_sequence(inst, seq)) {
        throw std::invalid_argument(
            "exact_min_loading: sequence is not a permutation of the jobs");
    }

    const auto tool_mask = [&](int job) {
        std::uint64_t mask = 0;
        for (int tool : inst.requirements[static_cast<std::size_t>(job)]) {
            mask |= std::uint64_t{1} << tool;
        }
        return mask;
    };

    // states[S] = minimal removals so far with magazine S after the current
    // position. Transitions keep any subset K of the tools not required next
    // (capacity permitting) and pay for the dropped ones.
    std::unordered_map<std::uint64_t, int> states;
    states.emplace(tool_mask(seq[0]), 0);

    std::unordered_map<std::uint64_t, int> next_states;
    for (std::size_t p = 1; p < seq.size(); ++p) {
        const std::uint64_t required = tool_mask(seq[static_cast<int>(p)]);
        const int required_count = std::popcount(required);
        const int keep_budget = inst.capacity - required_count;

        next_states.clear();
        for (const auto& [magazine, cost] : states) {
            const std::uint64_t droppable = magazine & ~required;
            const int droppable_count = std::popcount(droppable);
            // Enumerate every subset K of the droppable tools that fits.
            std::uint64_t keep = droppable;
            while (true) {
                const int kept = std::popcount(keep);
                if (kept <= keep_budget) {
                    const std::uint64_t next_magazine = required | keep;
                    const int next_cost = cost + (droppable_count - kept);
                    auto [it, inserted] =
                        next_states.emplace(next_magazine, next_cost);
                    if (!inserted && next_cost < it->second) {
                        it->second = next_cost;
                    }
                }
                if (keep == 0) break;
                keep = (keep - 1) & droppable;
            }
        }
        if (next_states.empty()) {
            throw std::logic_error("exact_min_loading: no feasible transition");
        }
        if (next_states.size() > max_states) {
            throw std::length_error(
                "exact_min_loading: state count " +
                std::to_string(next_states.size()) + " exceeds guard " +
                std::to_string(max_states));
        }
        states.swap(next_states);
    }

    int best = std::numeric_limits<int>::max();
    for (const auto& [magazine, cost] : states) {
        best = std::min(best, cost);
    }
    return best;
}

}  // namespace ssp
