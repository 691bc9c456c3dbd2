#pragma once

#include <cstdint>
#include <limits>
#include <random>
#include <utility>
#include <vector>

namespace ssp {

// Deterministic random source shared by the generator, the local searches
// and the genetic driver. Every run owns exactly one Rng seeded from its
// parameters, so results are reproducible across platforms: mt19937_64 has
// a standard-mandated output sequence, and the bounded draws below avoid
// std::uniform_int_distribution / std::shuffle, whose mappings are
// implementation-defined.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform draw from [0, n). Rejection sampling, unbiased. n must be > 0.
    std::size_t uniform_index(std::size_t n) {
        const std::uint64_t n64 = static_cast<std::uint64_t>(n);
        const std::uint64_t limit =
            std::numeric_limits<std::uint64_t>::max() -
            std::numeric_limits<std::uint64_t>::max() % n64;
        std::uint64_t draw = engine_();
        while (draw >= limit) draw = engine_();
        return static_cast<std::size_t>(draw % n64);
    }

    // Uniform draw from [lo, hi], both ends included.
    long long uniform_int(long long lo, long long hi) {
        const auto span = static_cast<std::uint64_t>(hi - lo) + 1u;
        return lo + static_cast<long long>(uniform_index(static_cast<std::size_t>(span)));
    }

    // Fisher-Yates, driven by uniform_index so the permutation stream is
    // identical on every platform.
    template <typename T>
    void shuffle(std::vector<T>& values) {
        for (std::size_t i = values.size(); i > 1; --i) {
            std::swap(values[i - 1], values[uniform_index(i)]);
        }
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace ssp
