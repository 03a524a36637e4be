// Copyright 2026 the streamsim authors
// SPDX-License-Identifier: Apache-2.0

#ifndef STREAMSIM_RNG_HPP
#define STREAMSIM_RNG_HPP

#include <cstdint>
#include <random>
#include <vector>

namespace streamsim {

// mt19937_64 with hand-rolled value mapping. std::uniform_*_distribution is
// implementation-defined, which would break the bit-identical-artifacts
// contract across standard libraries.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next() { return gen_(); }

    // Unbiased integer in [0, n) via rejection sampling.
    std::uint64_t bounded(std::uint64_t n) {
        const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                    std::numeric_limits<std::uint64_t>::max() % n;
        std::uint64_t x;
        do {
            x = gen_();
        } while (x >= limit);
        return x % n;
    }

    double uniform() { return (gen_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // k distinct values picked from `pool` (partial Fisher-Yates); preserves
    // the draw order for reproducibility checks.
    template <typename T>
    std::vector<T> sample_without_replacement(std::vector<T> pool, std::size_t k) {
        std::vector<T> out;
        out.reserve(k);
        for (std::size_t i = 0; i < k && !pool.empty(); ++i) {
            std::size_t j = static_cast<std::size_t>(bounded(pool.size()));
            out.push_back(pool[j]);
            pool[j] = pool.back();
            pool.pop_back();
        }
        return out;
    }

  private:
    std::mt19937_64 gen_;
};

}  // namespace streamsim

#endif
