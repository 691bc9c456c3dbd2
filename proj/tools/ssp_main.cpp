#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "ssp/commands.hpp"

namespace {

struct ParamFlags {
    std::optional<std::uint64_t> seed;
    ssp::HgsParams params;
    std::int64_t time_limit_ms = 0;

    void attach(CLI::App& cmd) {
        cmd.add_option("--seed", seed,
                       "Base RNG seed (default: HGS_SSP_SEED env, then 1)");
        cmd.add_option("--mu", params.mu, "Population size after selection");
        cmd.add_option("--lambda", params.lambda,
                       "Children between survivor selections");
        cmd.add_option("--mu-elite", params.mu_elite,
                       "Elite count preserved by selection");
        cmd.add_option("--mu-close", params.mu_close,
                       "Neighbors in the diversity contribution");
        cmd.add_option("--imax", params.i_max,
                       "Consecutive non-improving children before stopping");
        cmd.add_option("--time-limit-ms", time_limit_ms,
                       "Wall-clock limit per run, 0 = none");
        cmd.add_flag("--ls-loop", params.ls_loop,
                     "Repeat the three descents until a stable pass");
    }

    ssp::HgsParams resolve() const {
        ssp::HgsParams resolved = params;
        resolved.seed = ssp::resolve_seed(seed);
        if (time_limit_ms > 0) resolved.time_limit_ms = time_limit_ms;
        return resolved;
    }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hybrid genetic search for job sequencing with tool switches"};
    app.require_subcommand(1);

    // solve
    auto* solve = app.add_subcommand("solve", "Solve one instance file");
    ssp::SolveOptions solve_options;
    ParamFlags solve_params;
    solve->add_option("--instance", solve_options.instance_path,
                      "Instance file in canonical format")
        ->required();
    solve->add_option("--runs", solve_options.runs,
                      "Independent runs with seeds seed, seed+1, ...");
    solve->add_flag("--no-timing", solve_options.no_timing,
                    "Report elapsed columns as 0 for diffable output");
    solve->add_option("--trace", solve_options.trace_path,
                      "Write population scatter CSV to this file");
    solve_params.attach(*solve);

    // bench
    auto* bench = app.add_subcommand(
        "bench", "Run every instance under a directory, aggregate per group");
    ssp::BenchOptions bench_options;
    ParamFlags bench_params;
    bench->add_option("--dir", bench_options.dir,
                      "Directory of canonical instance files")
        ->required();
    bench->add_option("--runs", bench_options.runs, "Runs per instance");
    bench->add_option("--jobs", bench_options.jobs, "Worker threads");
    bench->add_option("--out", bench_options.out_path,
                      "Records CSV path (default stdout)");
    bench->add_option("--summary", bench_options.summary_path,
                      "Group summary CSV path (default stdout)");
    bench->add_flag("--no-timing", bench_options.no_timing,
                    "Report elapsed columns as 0 for diffable output");
    bench_params.attach(*bench);

    // gen
    auto* gen = app.add_subcommand("gen", "Generate random instance files");
    ssp::GenOptions gen_options;
    std::optional<std::uint64_t> gen_seed;
    gen->add_option("--n", gen_options.n_jobs, "Jobs")->required();
    gen->add_option("--m", gen_options.n_tools, "Tools")->required();
    gen->add_option("--c", gen_options.capacity, "Magazine capacity")
        ->required();
    gen->add_option("--count", gen_options.count, "Files to generate");
    gen->add_option("--seed", gen_seed,
                    "First seed; file i uses seed + i");
    gen->add_option("--min-tools", gen_options.min_tools,
                    "Minimum tools per job");
    gen->add_option("--max-tools", gen_options.max_tools,
                    "Maximum tools per job (default: capacity)");
    gen->add_option("--out-dir", gen_options.out_dir, "Output directory");

    // oracle
    auto* oracle = app.add_subcommand(
        "oracle", "Exact solvers for spot checks at small sizes");
    ssp::OracleOptions oracle_options;
    oracle->add_option("--instance", oracle_options.instance_path,
                       "Instance file in canonical format")
        ->required();
    oracle->add_option("--max-n", oracle_options.max_n,
                       "Permutation search guard");
    oracle->add_option("--seq", oracle_options.sequence,
                       "Fixed 1-based job sequence: check the tooling DP "
                       "against the greedy decode");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? ssp::kExitOk : ssp::kExitUsage;
    }

    try {
        if (solve->parsed()) {
            solve_options.params = solve_params.resolve();
            return ssp::cmd_solve(solve_options, std::cout, std::cerr);
        }
        if (bench->parsed()) {
            bench_options.params = bench_params.resolve();
            return ssp::cmd_bench(bench_options, std::cout, std::cerr);
        }
        if (gen->parsed()) {
            gen_options.seed = ssp::resolve_seed(gen_seed);
            return ssp::cmd_gen(gen_options, std::cout, std::cerr);
        }
        if (oracle->parsed()) {
            return ssp::cmd_oracle(oracle_options, std::cout, std::cerr);
        }
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << '\n';
        return ssp::kExitUsage;
    }
    return ssp::kExitUsage;
}
