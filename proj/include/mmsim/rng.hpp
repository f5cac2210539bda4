#pragma once

#include <cstdint>
#include <vector>

namespace mmsim {

// splitmix64: the one PRNG used anywhere in the simulator. Small, fast, and
// trivially reproducible from a single 64-bit seed.
struct SplitMix64 {
    std::uint64_t state = 0;

    explicit SplitMix64(std::uint64_t seed = 0) : state(seed) {}

    std::uint64_t next() {
        state += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
};

// In-place Fisher-Yates shuffle, i = n-1 .. 1, j = next() mod (i+1).
// Sequences of length <= 1 draw nothing from the stream.
template <typename T>
void fisher_yates(std::vector<T>& items, SplitMix64& rng) {
    for (std::size_t i = items.size(); i-- > 1;) {
        std::size_t j = static_cast<std::size_t>(rng.next() % (i + 1));
        std::swap(items[i], items[j]);
    }
}

}  // namespace mmsim
