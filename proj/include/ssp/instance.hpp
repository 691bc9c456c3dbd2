#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace ssp {

// A job permutation. Jobs are 0-based internally; files and console output
// use 1-based ids.
using JobSequence = std::vector<int>;

// One sequencing-and-tool-switching instance: n_jobs jobs, n_tools tools,
// a magazine holding at most `capacity` tools, and per-job required tool
// sets. Immutable after construction and safe to share between solver runs.
struct Instance {
    int n_jobs = 0;
    int n_tools = 0;
    int capacity = 0;
    // requirements[j] = sorted 0-based tool ids job j needs, 1 <= size <= capacity.
    std::vector<std::vector<int>> requirements;

    bool job_requires(int job, int tool) const;

    // Throws std::invalid_argument if any structural invariant is broken:
    // positive sizes, capacity <= n_tools, per-job tool sets non-empty,
    // within capacity, sorted, duplicate-free and in range.
    void validate() const;
};

bool is_valid_sequence(const Instance& instance, const JobSequence& seq);
JobSequence identity_sequence(int n_jobs);

// Canonical text format:
//   line 1: "n m C"
//   then m rows of n whitespace-separated binary digits; row t column j is 1
//   iff job j requires tool t. Tool and job ids are 1-based in files.
// Throws std::runtime_error with a descriptive message on malformed input.
Instance parse_instance(std::istream& in);
Instance parse_instance(const std::string& text);
Instance load_instance_file(const std::string& path);

// Inverse of parse_instance; round-trips exactly.
std::string serialize_instance(const Instance& instance);

// Random instance: each job draws its tool count uniformly from
// [min_tools, max_tools], then that many distinct tools uniformly from
// {1..n_tools}. Pure function of its arguments, seed included.
// Requires 1 <= min_tools <= max_tools <= capacity <= n_tools and n_jobs >= 1;
// throws std::invalid_argument otherwise.
Instance generate_instance(int n_jobs, int n_tools, int capacity,
                           int min_tools, int max_tools, std::uint64_t seed);

}  // namespace ssp
