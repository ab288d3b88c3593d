#pragma once

#include <algorithm>
#include <vector>

#include "kummerlab/fp.hpp"

namespace kummerlab {

/// Counter-based generator (SplitMix64 finalizer over seed + i * golden).
/// Stateless per draw: the i-th value is a pure function of (seed, i), so
/// sampled runs reproduce bit-for-bit on every platform.
class CounterRng {
public:
    explicit CounterRng(u64 seed) : seed_(seed) {}

    u64 at(u64 counter) const noexcept {
        u64 z = seed_ + (counter + 1) * 0x9E3779B97F4A7C15ull;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound) via 128-bit multiply-shift.
    u64 below(u64 counter, u64 bound) const noexcept {
        return static_cast<u64>((static_cast<u128>(at(counter)) * bound) >> 64);
    }

    // k distinct indices from [0, n), returned sorted ascending
    // (partial Fisher-Yates on the index vector).
    std::vector<u64> sample_indices(u64 n, u64 k) const {
        if (k >= n) {
            std::vector<u64> all(n);
            for (u64 i = 0; i < n; ++i) all[i] = i;
            return all;
        }
        std::vector<u64> pool(n);
        for (u64 i = 0; i < n; ++i) pool[i] = i;
        for (u64 i = 0; i < k; ++i) {
            u64 j = i + below(i, n - i);
            std::swap(pool[i], pool[j]);
        }
        pool.resize(k);
        std::sort(pool.begin(), pool.end());
        return pool;
    }

private:
    u64 seed_;
};

}  // namespace kummerlab
