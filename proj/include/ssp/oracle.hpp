#pragma once

#include <cstddef>
#include <cstdint>

#include "ssp/instance.hpp"

namespace ssp {

// Result of the brute-force sequencing search.
struct OracleResult {
    int best_switches = 0;
    JobSequence best_sequence;
    std::uint64_t explored = 0;  // permutations evaluated
};

// Enumerates every permutation of the jobs, decodes each one, and returns the
// minimum switch count together with the first sequence attaining it (in
// lexicographic enumeration order). No symmetry pruning. Throws
// std::invalid_argument when n_jobs exceeds max_n.
OracleResult exact_best_sequence(const Instance& inst, int max_n = 10);

// Exact minimum number of tool removals for a fixed sequence, by dynamic
// programming over magazine states. The initial magazine is exactly the first
// job's tool set; a transition keeps any subset of the current magazine,
// loads the next job's tools, respects the capacity, and pays one unit per
// removed tool. Independent of KTNS; serves as its correctness check.
// Throws std::invalid_argument if the instance has more than 64 tools or the
// sequence is not a permutation, and std::length_error when the reachable
// state count exceeds max_states.
int exact_min_loading(const Instance& inst, const JobSequence& seq,
                      std::size_t max_states = std::size_t{1} << 22);

}  // namespace ssp
