#include "ssp/instance.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "ssp/rng.hpp"

namespace ssp {

bool Instance::job_requires(int job, int tool) const {
    const auto& tools = requirements[static_cast<std::size_t>(job)];
    return std::binary_search(tools.begin(), tools.end(), tool);
}

void Instance::validate() const {
    if (n_jobs < 1) throw std::invalid_argument("instance needs at least one job");
    if (n_tools < 1) throw std::invalid_argument("instance needs at least one tool");
    if (capacity < 1) throw std::invalid_argument("magazine capacity must be positive");
    if (capacity > n_tools) {
        throw std::invalid_argument("magazine capacity exceeds the number of tools");
    }
    if (static_cast<int>(requirements.size()) != n_jobs) {
        throw std::invalid_argument("requirement list size does not match n_jobs");
    }
    for (int j = 0; j < n_jobs; ++j) {
        const auto& tools = requirements[static_cast<std::size_t>(j)];
        if (tools.empty()) {
            throw std::invalid_argument("job " + std::to_string(j + 1) + " requires no tool");
        }
        if (static_cast<int>(tools.size()) > capacity) {
            throw std::invalid_argument("job " + std::to_string(j + 1) +
                                        " requires more tools than the magazine holds");
        }
        if (!std::is_sorted(tools.begin(), tools.end()) ||
            std::adjacent_find(tools.begin(), tools.end()) != tools.end()) {
            throw std::invalid_argument("job " + std::to_string(j + 1) +
                                        " has an unsorted or duplicated tool set");
        }
        if (tools.front() < 0 || tools.back() >= n_tools) {
            throw std::invalid_argument("job " + std::to_string(j + 1) +
                                        " references a tool outside 1.." +
                                        std::to_string(n_tools));
        }
    }
}

bool is_valid_sequence(const Instance& instance, const JobSequence& seq) {
    if (static_cast<int>(seq.size()) != instance.n_jobs) return false;
    std::vector<char> seen(static_cast<std::size_t>(instance.n_jobs), 0);
    for (int job : seq) {
        if (job < 0 || job >= instance.n_jobs) return false;
        if (seen[static_cast<std::size_t>(job)]) return false;
        seen[static_cast<std::size_t>(job)] = 1;
    }
    return true;
}

JobSequence identity_sequence(int n_jobs) {
    JobSequence seq(static_cast<std::size_t>(n_jobs));
    std::iota(seq.begin(), seq.end(), 0);
    return seq;
}

namespace {

[[noreturn]] void parse_fail(const std::string& what) {
    throw std::runtime_error("instance parse error: " + what);
}

}  // namespace

Instance parse_instance(std::istream& in) {
    Instance instance;
    if (!(in >> instance.n_jobs >> instance.n_tools >> instance.capacity)) {
        parse_fail("header must be three integers `n m C`");
    }
    if (instance.n_jobs < 1 || instance.n_tools < 1 || instance.capacity < 1) {
        parse_fail("header values must be positive");
    }
    if (instance.capacity > instance.n_tools) {
        parse_fail("capacity " + std::to_string(instance.capacity) + " exceeds tool count " +
                   std::to_string(instance.n_tools));
    }

    instance.requirements.assign(static_cast<std::size_t>(instance.n_jobs), {});
    for (int tool = 0; tool < instance.n_tools; ++tool) {
        for (int job = 0; job < instance.n_jobs; ++job) {
            std::string cell;
            if (!(in >> cell)) {
                parse_fail("matrix truncated: expected " + std::to_string(instance.n_tools) +
                           " rows of " + std::to_string(instance.n_jobs) + " entries");
            }
            if (cell == "1") {
                instance.requirements[static_cast<std::size_t>(job)].push_back(tool);
            } else if (cell != "0") {
                parse_fail("matrix cell at row " + std::to_string(tool + 1) + ", column " +
                           std::to_string(job + 1) + " is `" + cell + "`, expected 0 or 1");
            }
        }
    }

    std::string extra;
    if (in >> extra) {
        parse_fail("unexpected trailing content `" + extra + "` after the matrix");
    }

    for (int job = 0; job < instance.n_jobs; ++job) {
        const auto count = instance.requirements[static_cast<std::size_t>(job)].size();
        if (count == 0) {
            parse_fail("job " + std::to_string(job + 1) + " requires no tool");
        }
        if (static_cast<int>(count) > instance.capacity) {
            parse_fail("job " + std::to_string(job + 1) + " requires " + std::to_string(count) +
                       " tools but the magazine holds " + std::to_string(instance.capacity));
        }
    }
    return instance;
}

Instance parse_instance(const std::string& text) {
    std::istringstream in(text);
    return parse_instance(in);
}

Instance load_instance_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open instance file: " + path);
    }
    try {
        return parse_instance(in);
    } catch (const std::runtime_error& err) {
        throw std::runtime_error(path + ": " + err.what());
    }
}

std::string serialize_instance(const Instance& instance) {
    std::ostringstream out;
    out << instance.n_jobs << ' ' << instance.n_tools << ' ' << instance.capacity << '\n';
    for (int tool = 0; tool < instance.n_tools; ++tool) {
        for (int job = 0; job < instance.n_jobs; ++job) {
            if (job > 0) out << ' ';
            out << (instance.job_requires(job, tool) ? '1' : '0');
        }
        out << '\n';
    }
    return out.str();
}

Instance generate_instance(int n_jobs, int n_tools, int capacity,
                           int min_tools, int max_tools, std::uint64_t seed) {
    if (n_jobs < 1) throw std::invalid_argument("generator: n_jobs must be >= 1");
    if (min_tools < 1) throw std::invalid_argument("generator: min_tools must be >= 1");
    if (max_tools < min_tools) {
        throw std::invalid_argument("generator: max_tools must be >= min_tools");
    }
    if (capacity < max_tools) {
        throw std::invalid_argument("generator: max_tools must not exceed the capacity");
    }
    if (n_tools < capacity) {
        throw std::invalid_argument("generator: capacity must not exceed n_tools");
    }

    Instance instance;
    instance.n_jobs = n_jobs;
    instance.n_tools = n_tools;
    instance.capacity = capacity;
    instance.requirements.reserve(static_cast<std::size_t>(n_jobs));

    Rng rng(seed);
    std::vector<int> pool(static_cast<std::size_t>(n_tools));
    std::iota(pool.begin(), pool.end(), 0);
    for (int job = 0; job < n_jobs; ++job) {
        const auto count =
            static_cast<std::size_t>(rng.uniform_int(min_tools, max_tools));
        // Partial Fisher-Yates: the first `count` pool entries become the job's tools.
        for (std::size_t i = 0; i < count; ++i) {
            const std::size_t pick = i + rng.uniform_index(pool.size() - i);
            std::swap(pool[i], pool[pick]);
        }
        std::vector<int> tools(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(count));
        std::sort(tools.begin(), tools.end());
        instance.requirements.push_back(std::move(tools));
    }
    return instance;
}

}  // namespace ssp
