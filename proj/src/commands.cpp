#include "ssp/commands.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>
#include <vector>

#include "ssp/evaluation.hpp"
#include "ssp/instance.hpp"
#include "ssp/oracle.hpp"

namespace fs = std::filesystem;

namespace ssp {

namespace {

// snprintf-based so the output never depends on stream or global locale
// state; the process never calls setlocale, so '.' is the decimal point.
std::string format_double(double value, int decimals) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.*f", decimals, value);
    return buffer;
}

std::string instance_id_of(const fs::path& path) {
    return path.stem().string();
}

// Population scatter dump: one row per member at init and after each
// survivor selection, plus the final population.
class TraceWriter : public HgsObserver {
public:
    TraceWriter(std::ostream& out, const HgsParams& params, int run)
        : out_(&out), params_(&params), run_(run) {}

    static const char* header() {
        return "run,iteration,member,switches,tie_break,diversity,biased";
    }

    void on_initialized(const Population& pop) override { dump(pop); }
    void on_child_inserted(const Population&, const Individual&,
                           std::int64_t iteration) override {
        iteration_ = iteration;
    }
    void on_after_selection(const Population& pop) override { dump(pop); }

    void finish(const Population* final_pop) {
        if (final_pop) dump(*final_pop);
    }

private:
    void dump(const Population& pop) {
        const auto fitness =
            compute_biased_fitness(pop, params_->mu_elite, params_->mu_close);
        for (std::size_t i = 0; i < pop.size(); ++i) {
            *out_ << run_ << ',' << iteration_ << ',' << i << ','
                  << pop.members[i].eval.switches << ','
                  << format_double(pop.members[i].eval.tie_break, 6) << ','
                  << format_double(fitness[i].diversity, 6) << ','
                  << format_double(fitness[i].biased, 6) << '\n';
        }
    }

    std::ostream* out_;
    const HgsParams* params_;
    int run_;
    std::int64_t iteration_ = 0;
};

// Keeps the final population visible to the trace writer.
class FinalPopulationSpy : public HgsObserver {
public:
    explicit FinalPopulationSpy(TraceWriter& writer) : writer_(&writer) {}

    void on_initialized(const Population& pop) override {
        writer_->on_initialized(pop);
        latest_ = pop;
    }
    void on_child_inserted(const Population& pop, const Individual& ind,
                           std::int64_t iteration) override {
        writer_->on_child_inserted(pop, ind, iteration);
        latest_ = pop;
    }
    void on_after_selection(const Population& pop) override {
        writer_->on_after_selection(pop);
        latest_ = pop;
    }

    void finish() { writer_->finish(&latest_); }

private:
    TraceWriter* writer_;
    Population latest_;
};

struct GroupStats {
    int instances = 0;
    double sum_best = 0.0;
    double sum_avg = 0.0;
    double sum_time_s = 0.0;
};

}  // namespace

std::string run_record_header() {
    return "instance,run,seed,best_switches,tie_break,iterations,elapsed_ms,"
           "i_max,mu,lambda,mu_elite,mu_close,ls_loop,time_limit_ms";
}

std::string to_csv_row(const RunRecord& r) {
    std::ostringstream row;
    row << r.instance_id << ',' << r.run_index << ',' << r.seed << ','
        << r.best_switches << ',' << format_double(r.tie_break, 6) << ','
        << r.iterations << ',' << format_double(r.elapsed_ms, 3) << ','
        << r.i_max << ',' << r.mu << ',' << r.lambda << ',' << r.mu_elite << ','
        << r.mu_close << ',' << (r.ls_loop ? 1 : 0) << ',' << r.time_limit_ms;
    return row.str();
}

RunRecord make_run_record(const std::string& instance_id, int run_index,
                          const HgsParams& params, const SolveReport& report,
                          bool no_timing) {
    RunRecord record;
    record.instance_id = instance_id;
    record.run_index = run_index;
    record.seed = params.seed;
    record.best_switches = report.best.switches;
    record.tie_break = report.best.tie_break;
    record.iterations = report.iterations;
    record.elapsed_ms = no_timing ? 0.0 : report.elapsed_ms;
    record.i_max = params.i_max;
    record.mu = params.mu;
    record.lambda = params.lambda;
    record.mu_elite = params.mu_elite;
    record.mu_close = params.mu_close;
    record.ls_loop = params.ls_loop;
    record.time_limit_ms = params.time_limit_ms.value_or(0);
    return record;
}

std::uint64_t resolve_seed(std::optional<std::uint64_t> flag_seed) {
    if (flag_seed) return *flag_seed;
    const char* env = std::getenv("HGS_SSP_SEED");
    if (!env || *env == '\0') return 1;
    char* end = nullptr;
    const unsigned long long value = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0') {
        throw std::invalid_argument(
            "HGS_SSP_SEED is set but not an unsigned integer: " +
            std::string(env));
    }
    return static_cast<std::uint64_t>(value);
}

int cmd_solve(const SolveOptions& options, std::ostream& out,
              std::ostream& err) {
    try {
        options.params.validate();
    } catch (const std::exception& ex) {
        err << "error: " << ex.what() << '\n';
        return kExitUsage;
    }
    if (options.runs < 1) {
        err << "error: --runs must be at least 1\n";
        return kExitUsage;
    }

    Instance inst;
    try {
        inst = load_instance_file(options.instance_path);
    } catch (const std::exception& ex) {
        err << "error: " << ex.what() << '\n';
        return kExitIo;
    }

    std::ofstream trace_file;
    if (!options.trace_path.empty()) {
        trace_file.open(options.trace_path);
        if (!trace_file) {
            err << "error: cannot write trace file " << options.trace_path
                << '\n';
            return kExitIo;
        }
        trace_file << TraceWriter::header() << '\n';
    }

    const std::string id = instance_id_of(options.instance_path);
    out << run_record_header() << '\n';

    int best = 0;
    double sum_switches = 0.0;
    double sum_elapsed_ms = 0.0;
    for (int run = 0; run < options.runs; ++run) {
        HgsParams params = options.params;
        params.seed = options.params.seed + static_cast<std::uint64_t>(run);

        SolveReport report;
        if (trace_file.is_open()) {
            TraceWriter writer(trace_file, params, run);
            FinalPopulationSpy spy(writer);
            report = run_hgs(inst, params, &spy);
            spy.finish();
        } else {
            report = run_hgs(inst, params, nullptr);
        }

        const RunRecord record =
            make_run_record(id, run, params, report, options.no_timing);
        out << to_csv_row(record) << '\n';

        best = run == 0 ? record.best_switches
                        : std::min(best, record.best_switches);
        sum_switches += record.best_switches;
        sum_elapsed_ms += record.elapsed_ms;
    }

    out << "# summary best=" << best << " avg="
        << format_double(sum_switches / options.runs, 2) << " time_s="
        << format_double(sum_elapsed_ms / options.runs / 1000.0, 3) << '\n';
    return kExitOk;
}

int cmd_bench(const BenchOptions& options, std::ostream& out,
              std::ostream& err) {
    try {
        options.params.validate();
    } catch (const std::exception& ex) {
        err << "error: " << ex.what() << '\n';
        return kExitUsage;
    }
    if (options.runs < 1 || options.jobs < 1) {
        err << "error: --runs and --jobs must be at least 1\n";
        return kExitUsage;
    }

    const fs::path root(options.dir);
    std::error_code ec;
    if (!fs::is_directory(root, ec)) {
        err << "error: not a directory: " << options.dir << '\n';
        return kExitIo;
    }

    std::vector<fs::path> files;
    for (const auto& entry : fs::recursive_directory_iterator(root)) {
        if (entry.is_regular_file()) files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end(),
              [](const fs::path& a, const fs::path& b) {
                  return a.generic_string() < b.generic_string();
              });

    struct BenchInstance {
        fs::path path;
        std::string group;
        Instance instance;
    };
    std::vector<BenchInstance> instances;
    int skipped = 0;
    for (const fs::path& file : files) {
        try {
            Instance inst = load_instance_file(file.string());
            const fs::path rel = fs::relative(file.parent_path(), root);
            std::string group = rel.generic_string();
            if (group.empty()) group = ".";
            instances.push_back({file, std::move(group), std::move(inst)});
        } catch (const std::exception& ex) {
            err << "warning: skipping " << file.generic_string() << ": "
                << ex.what() << '\n';
            ++skipped;
        }
    }
    if (instances.empty()) {
        err << "error: no readable instances in " << options.dir;
        if (skipped > 0) err << " (" << skipped << " skipped)";
        err << '\n';
        return kExitIo;
    }

    // Tasks in (instance, run) order; worker completion order never matters
    // because records land in preassigned slots.
    const std::size_t task_count = instances.size() * static_cast<std::size_t>(options.runs);
    std::vector<RunRecord> records(task_count);
    std::atomic<std::size_t> next_task{0};
    std::atomic<bool> failed{false};
    std::string failure_message;
    std::mutex failure_mutex;

    const auto worker = [&] {
        while (true) {
            const std::size_t task = next_task.fetch_add(1);
            if (task >= task_count || failed.load()) return;
            const BenchInstance& bi =
                instances[task / static_cast<std::size_t>(options.runs)];
            const int run =
                static_cast<int>(task % static_cast<std::size_t>(options.runs));
            HgsParams params = options.params;
            params.seed = options.params.seed + static_cast<std::uint64_t>(run);
            try {
                const SolveReport report = run_hgs(bi.instance, params, nullptr);
                records[task] = make_run_record(instance_id_of(bi.path), run,
                                                params, report,
                                                options.no_timing);
            } catch (const std::exception& ex) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                failure_message = ex.what();
                failed.store(true);
                return;
            }
        }
    };

    if (options.jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(options.jobs));
        for (int i = 0; i < options.jobs; ++i) pool.emplace_back(worker);
        for (std::thread& t : pool) t.join();
    }
    if (failed.load()) {
        err << "error: " << failure_message << '\n';
        return kExitUsage;
    }

    const auto write_records = [&](std::ostream& sink) {
        sink << run_record_header() << '\n';
        for (const RunRecord& record : records) {
            sink << to_csv_row(record) << '\n';
        }
    };
    if (options.out_path.empty()) {
        write_records(out);
    } else {
        std::ofstream file(options.out_path);
        if (!file) {
            err << "error: cannot write " << options.out_path << '\n';
            return kExitIo;
        }
        write_records(file);
    }

    // Group aggregation: per instance, best over runs and mean over runs;
    // per group, means of those across instances.
    std::map<std::string, GroupStats> groups;
    for (std::size_t i = 0; i < instances.size(); ++i) {
        int inst_best = 0;
        double inst_sum = 0.0;
        double inst_time_ms = 0.0;
        for (int run = 0; run < options.runs; ++run) {
            const RunRecord& record =
                records[i * static_cast<std::size_t>(options.runs) +
                        static_cast<std::size_t>(run)];
            inst_best = run == 0 ? record.best_switches
                                 : std::min(inst_best, record.best_switches);
            inst_sum += record.best_switches;
            inst_time_ms += record.elapsed_ms;
        }
        GroupStats& g = groups[instances[i].group];
        g.instances += 1;
        g.sum_best += inst_best;
        g.sum_avg += inst_sum / options.runs;
        g.sum_time_s += inst_time_ms / options.runs / 1000.0;
    }

    const auto write_summary = [&](std::ostream& sink) {
        sink << "group,instances,best,avg,time_s\n";
        for (const auto& [name, g] : groups) {
            sink << name << ',' << g.instances << ','
                 << format_double(g.sum_best / g.instances, 2) << ','
                 << format_double(g.sum_avg / g.instances, 2) << ','
                 << format_double(g.sum_time_s / g.instances, 3) << '\n';
        }
    };
    if (options.summary_path.empty()) {
        write_summary(out);
    } else {
        std::ofstream file(options.summary_path);
        if (!file) {
            err << "error: cannot write " << options.summary_path << '\n';
            return kExitIo;
        }
        write_summary(file);
    }

    if (skipped > 0) {
        err << "warning: skipped " << skipped << " unreadable file"
            << (skipped == 1 ? "" : "s") << '\n';
    }
    return kExitOk;
}

int cmd_gen(const GenOptions& options, std::ostream& out, std::ostream& err) {
    if (options.count < 1) {
        err << "error: --count must be at least 1\n";
        return kExitUsage;
    }
    const int max_tools =
        options.max_tools == 0 ? options.capacity : options.max_tools;

    std::error_code ec;
    fs::create_directories(options.out_dir, ec);
    if (ec) {
        err << "error: cannot create " << options.out_dir << ": "
            << ec.message() << '\n';
        return kExitIo;
    }

    for (int i = 0; i < options.count; ++i) {
        const std::uint64_t seed = options.seed + static_cast<std::uint64_t>(i);
        Instance inst;
        try {
            inst = generate_instance(options.n_jobs, options.n_tools,
                                     options.capacity, options.min_tools,
                                     max_tools, seed);
        } catch (const std::exception& ex) {
            err << "error: " << ex.what() << '\n';
            return kExitUsage;
        }

        std::ostringstream name;
        name << "ssp_n" << options.n_jobs << "_m" << options.n_tools << "_c"
             << options.capacity << "_s" << seed << ".ssp";
        const fs::path path = fs::path(options.out_dir) / name.str();
        std::ofstream file(path);
        if (!file) {
            err << "error: cannot write " << path.generic_string() << '\n';
            return kExitIo;
        }
        file << serialize_instance(inst);
        if (!file.flush()) {
            err << "error: failed writing " << path.generic_string() << '\n';
            return kExitIo;
        }
        out << path.generic_string() << '\n';
    }
    return kExitOk;
}

int cmd_oracle(const OracleOptions& options, std::ostream& out,
               std::ostream& err) {
    Instance inst;
    try {
        inst = load_instance_file(options.instance_path);
    } catch (const std::exception& ex) {
        err << "error: " << ex.what() << '\n';
        return kExitIo;
    }

    try {
        if (!options.sequence.empty()) {
            // 1-based job list, comma or space separated.
            std::string text = options.sequence;
            std::replace(text.begin(), text.end(), ',', ' ');
            std::istringstream in(text);
            JobSequence seq;
            int job = 0;
            while (in >> job) seq.push_back(job - 1);
            if (!in.eof()) {
                err << "error: malformed --seq job list\n";
                return kExitUsage;
            }
            if (!is_valid_sequence(inst, seq)) {
                err << "error: --seq is not a permutation of 1.."
                    << inst.n_jobs << '\n';
                return kExitUsage;
            }
            const int dp = exact_min_loading(inst, seq);
            const Evaluation eval = evaluate(inst, seq);
            out << "dp_min_switches," << dp << '\n';
            out << "ktns_switches," << eval.switches << '\n';
            out << "tie_break," << format_double(eval.tie_break, 6) << '\n';
            out << "match," << (dp == eval.switches ? 1 : 0) << '\n';
            return kExitOk;
        }

        const OracleResult result = exact_best_sequence(inst, options.max_n);
        out << "optimal_switches," << result.best_switches << '\n';
        out << "optimal_sequence,";
        for (std::size_t i = 0; i < result.best_sequence.size(); ++i) {
            if (i > 0) out << ' ';
            out << result.best_sequence[i] + 1;
        }
        out << '\n';
        out << "permutations," << result.explored << '\n';
        return kExitOk;
    } catch (const std::exception& ex) {
        err << "error: " << ex.what() << '\n';
        return kExitUsage;
    }
}

}  // namespace ssp
