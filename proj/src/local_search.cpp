#include "ssp/local_search.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <string>

namespace ssp {

namespace {

void check_index(int value, int n, const char* what) {
    if (value < 0 || value >= n) {
        throw std::out_of_range(std::string(what) + " index " +
                                std::to_string(value) +
                                " outside sequence of length " +
                                std::to_string(n));
    }
}

void apply_move_in_place(JobSequence& seq, const Move& move) {
    const auto begin = seq.begin();
    switch (move.kind) {
        case MoveKind::two_opt:
            std::reverse(begin + move.i, begin + move.j + 1);
            break;
        case MoveKind::relocate:
            if (move.i < move.j) {
                std::rotate(begin + move.i, begin + move.i + 1,
                            begin + move.j + 1);
            } else {
                std::rotate(begin + move.j, begin + move.i, begin + move.i + 1);
            }
            break;
        case MoveKind::swap_jobs:
            std::swap(seq[static_cast<std::size_t>(move.i)],
                      seq[static_cast<std::size_t>(move.j)]);
            break;
    }
}

void validate_move(const Move& move, int n) {
    check_index(move.i, n, "move");
    check_index(move.j, n, "move");
    switch (move.kind) {
        case MoveKind::two_opt:
        case MoveKind::swap_jobs:
            if (move.i >= move.j) {
                throw std::out_of_range("move requires i < j");
            }
            break;
        case MoveKind::relocate:
            if (move.i == move.j) {
                throw std::out_of_range("relocate requires i != j");
            }
            break;
    }
}

}  // namespace

JobSequence apply_move(const JobSequence& seq, const Move& move) {
    validate_move(move, static_cast<int>(seq.size()));
    JobSequence result = seq;
    apply_move_in_place(result, move);
    return result;
}

std::vector<Move> enumerate_moves(MoveKind kind, int n) {
    std::vector<Move> moves;
    if (kind == MoveKind::relocate) {
        moves.reserve(static_cast<std::size_t>(n) * (n - 1));
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                if (i != j) moves.push_back({kind, i, j});
            }
        }
    } else {
        moves.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                moves.push_back({kind, i, j});
            }
        }
    }
    return moves;
}

std::pair<JobSequence, Evaluation> descend_neighborhood(
    DecodeWorkspace& workspace, JobSequence seq, Evaluation eval, MoveKind kind,
    Rng& rng) {
    assert(workspace.evaluate(seq) == eval);
    std::vector<Move> moves = enumerate_moves(kind, static_cast<int>(seq.size()));
    if (moves.empty()) return {std::move(seq), eval};

    JobSequence candidate;
    bool improved = true;
    while (improved) {
        improved = false;
        rng.shuffle(moves);
        for (const Move& move : moves) {
            candidate = seq;
            apply_move_in_place(candidate, move);
            const Evaluation candidate_eval = workspace.evaluate(candidate);
            if (candidate_eval < eval) {
                seq.swap(candidate);
                eval = candidate_eval;
                improved = true;
                break;
            }
        }
    }
    return {std::move(seq), eval};
}

std::pair<JobSequence, Evaluation> descend_neighborhood(const Instance& inst,
                                                        JobSequence seq,
                                                        Evaluation eval,
                                                        MoveKind kind,
                                                        Rng& rng) {
    DecodeWorkspace workspace(inst);
    return descend_neighborhood(workspace, std::move(seq), eval, kind, rng);
}

std::pair<JobSequence, Evaluation> local_search(DecodeWorkspace& workspace,
                                                JobSequence seq, Rng& rng,
                                                bool loop_until_stable) {
    Evaluation eval = workspace.evaluate(seq);
    while (true) {
        const Evaluation before = eval;
        for (MoveKind kind :
             {MoveKind::two_opt, MoveKind::relocate, MoveKind::swap_jobs}) {
            std::tie(seq, eval) =
                descend_neighborhood(workspace, std::move(seq), eval, kind, rng);
        }
        if (!loop_until_stable || eval == before) break;
    }
    return {std::move(seq), eval};
}

std::pair<JobSequence, Evaluation> local_search(const Instance& inst,
                                                JobSequence seq, Rng& rng,
                                                bool loop_until_stable) {
    DecodeWorkspace workspace(inst);
    return local_search(workspace, std::move(seq), rng, loop_until_stable);
}

}  // namespace ssp
