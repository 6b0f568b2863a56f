#pragma once

#include <cstdint>
#include <vector>

namespace lfqa {

/// Counter-based pseudo-random generator (SplitMix64 output function).
///
/// The i-th output is mix64(key + i * GOLDEN), so a stream is fully
/// determined by its 64-bit key and the draw counter. Substreams are
/// derived as key' = mix64(key ^ mix64(index + SALT)), which makes every
/// (seed, trial, purpose) combination reproducible on any platform
/// without relying on std:: distribution internals.
class CounterRng {
public:
    explicit CounterRng(std::uint64_t key) : key_(key) {}

    std::uint64_t next_u64() {
        counter_ += kGolden;
        return mix64(key_ + counter_);
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Uniform integer in [0, n). Unbiased via rejection sampling.
    std::uint64_t next_below(std::uint64_t n) {
        if (n <= 1) return 0;
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t x = next_u64();
        while (x >= limit) x = next_u64();
        return x % n;
    }

    CounterRng substream(std::uint64_t index) const {
        return CounterRng(mix64(key_ ^ mix64(index + kSubstreamSalt)));
    }

    /// Fisher-Yates shuffle with explicitly defined draws, so the
    /// permutation depends only on the stream, not on the C++ library.
    template <typename T>
    void shuffle(std::vector<T>& items) {
        for (std::size_t i = items.size(); i > 1; --i) {
            const std::size_t j = static_cast<std::size_t>(next_below(i));
            std::swap(items[i - 1], items[j]);
        }
    }

    std::uint64_t key() const { return key_; }

private:
    static constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;
    static constexpr std::uint64_t kSubstreamSalt = 0x632BE59BD9B4E019ULL;

    static std::uint64_t mix64(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    std::uint64_t key_ = 0;
    std::uint64_t counter_ = 0;
};

}  // namespace lfqa
