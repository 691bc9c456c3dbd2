#pragma once

#include <utility>
#include <vector>

#include "ssp/evaluation.hpp"
#include "ssp/instance.hpp"
#include "ssp/rng.hpp"

namespace ssp {

enum class MoveKind { two_opt, relocate, swap_jobs };

// A neighborhood move over 0-based sequence positions.
//   two_opt(i, j): reverse the subsegment i..j, requires i < j
//   relocate(i, j): remove the job at i and reinsert it at position j, i != j
//   swap_jobs(i, j): exchange the jobs at i and j, requires i < j
struct Move {
    MoveKind kind;
    int i;
    int j;
};

// Returns the transformed permutation; the input is left untouched.
// Throws std::out_of_range on invalid indices.
JobSequence apply_move(const JobSequence& seq, const Move& move);

// All moves of one neighborhood for sequences of length n, in a fixed
// deterministic order (callers shuffle).
std::vector<Move> enumerate_moves(MoveKind kind, int n);

// First-improvement descent in a single neighborhood: shuffle the full move
// list, scan it, apply the first move that improves (switches, tie_break)
// lexicographically, then reshuffle and rescan; stops once a complete scan
// finds no improving move. `eval` must equal evaluate(instance, seq).
std::pair<JobSequence, Evaluation> descend_neighborhood(DecodeWorkspace& workspace,
                                                        JobSequence seq,
                                                        Evaluation eval,
                                                        MoveKind kind, Rng& rng);
std::pair<JobSequence, Evaluation> descend_neighborhood(const Instance& inst,
                                                        JobSequence seq,
                                                        Evaluation eval,
                                                        MoveKind kind, Rng& rng);

// Three successive descents in the fixed order 2-opt, relocate, swap. When
// loop_until_stable is set the triple is repeated until a full pass leaves
// the evaluation unchanged (off by default).
std::pair<JobSequence, Evaluation> local_search(DecodeWorkspace& workspace,
                                                JobSequence seq, Rng& rng,
                                                bool loop_until_stable = false);
std::pair<JobSequence, Evaluation> local_search(const Instance& inst,
                                                JobSequence seq, Rng& rng,
                                                bool loop_until_stable = false);

}  // namespace ssp
