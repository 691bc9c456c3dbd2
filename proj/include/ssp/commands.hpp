#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "ssp/genetic.hpp"

namespace ssp {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitIo = 2;

// One solver run, flattened for CSV output. Column order is fixed:
// instance,run,seed,best_switches,tie_break,iterations,elapsed_ms,
// i_max,mu,lambda,mu_elite,mu_close,ls_loop,time_limit_ms
struct RunRecord {
    std::string instance_id;
    int run_index = 0;
    std::uint64_t seed = 0;
    int best_switches = 0;
    double tie_break = 0.0;
    std::int64_t iterations = 0;
    double elapsed_ms = 0.0;
    std::int64_t i_max = 0;
    int mu = 0;
    int lambda = 0;
    int mu_elite = 0;
    int mu_close = 0;
    bool ls_loop = false;
    std::int64_t time_limit_ms = 0;  // 0 = no limit
};

std::string run_record_header();
std::string to_csv_row(const RunRecord& record);

RunRecord make_run_record(const std::string& instance_id, int run_index,
                          const HgsParams& params, const SolveReport& report,
                          bool no_timing);

// Seed precedence: explicit flag, then the HGS_SSP_SEED environment
// variable, then 1. Throws std::invalid_argument if the variable is set but
// not a valid unsigned integer.
std::uint64_t resolve_seed(std::optional<std::uint64_t> flag_seed);

struct SolveOptions {
    std::string instance_path;
    int runs = 1;
    HgsParams params;       // params.seed is the base seed; run r uses seed + r
    bool no_timing = false; // report elapsed columns as 0 for diffable output
    std::string trace_path; // empty = no population trace
};

struct BenchOptions {
    std::string dir;
    int runs = 10;
    HgsParams params;
    bool no_timing = false;
    int jobs = 1;              // worker threads
    std::string out_path;      // records CSV; empty = stdout
    std::string summary_path;  // group summary CSV; empty = stdout
};

struct GenOptions {
    int n_jobs = 0;
    int n_tools = 0;
    int capacity = 0;
    int count = 1;
    std::uint64_t seed = 1;
    int min_tools = 1;
    int max_tools = 0;  // 0 = capacity
    std::string out_dir = ".";
};

struct OracleOptions {
    std::string instance_path;
    int max_n = 10;
    std::string sequence;  // optional 1-based job list, comma or space separated
};

int cmd_solve(const SolveOptions& options, std::ostream& out, std::ostream& err);
int cmd_bench(const BenchOptions& options, std::ostream& out, std::ostream& err);
int cmd_gen(const GenOptions& options, std::ostream& out, std::ostream& err);
int cmd_oracle(const OracleOptions& options, std::ostream& out, std::ostream& err);

}  // namespace ssp
