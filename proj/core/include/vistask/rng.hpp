#pragma once

// Counter-based random number generation (Philox4x32-10) plus the seed
// derivation hash. Everything that consumes randomness in this library goes
// through this header, with a documented draw order per sampler, so that a
// dataset is reproducible bit-for-bit across platforms, compilers and worker
// counts. Standard-library distributions are deliberately not used anywhere:
// their outputs are implementation-defined.

#include <array>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace vistask {

// SplitMix64 finalizer; the fixed mixing function behind stable_hash.
inline constexpr std::uint64_t mix64(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ull;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBull;
    z ^= z >> 31;
    return z;
}

// Portable 64-bit seed derivation: stable_hash(master, i) keys the generator
// of sample i. Constants are the SplitMix64 increment and finalizer; any
// implementation of the same two lines reproduces the streams.
inline constexpr std::uint64_t stable_hash(std::uint64_t seed, std::uint64_t index) {
    return mix64(seed + 0x9E3779B97F4A7C15ull * (index + 1));
}

// Philox4x32-10 (Salmon et al. constants). A 64-bit key selects the stream
// and a 128-bit block counter indexes it; each block yields four 32-bit
// words, consumed in order out[0], out[1], out[2], out[3].
class Philox4x32 {
public:
    explicit Philox4x32(std::uint64_t key) : key_(key) {}

    std::uint32_t next_u32() {
        if (pos_ == 4) {
            block_ = generate_block(counter_++, key_);
            pos_ = 0;
        }
        return block_[pos_++];
    }

    std::uint64_t next_u64() {
        const std::uint64_t lo = next_u32();
        const std::uint64_t hi = next_u32();
        return (hi << 32) | lo;
    }

    // Unbiased integer in [0, n) by rejection below 2^64 mod n.
    std::uint64_t uniform_u64(std::uint64_t n) {
        if (n == 0) throw std::invalid_argument("uniform_u64: n must be positive");
        const std::uint64_t threshold = (0 - n) % n;
        for (;;) {
            const std::uint64_t r = next_u64();
            if (r >= threshold) return r % n;
        }
    }

    // Inclusive integer range.
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
        if (lo > hi) throw std::invalid_argument("uniform_int: empty range");
        return lo + static_cast<std::int64_t>(
                        uniform_u64(static_cast<std::uint64_t>(hi - lo) + 1));
    }

    // Uniform double in [0, 1) with 53 random mantissa bits.
    double uniform_real() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    double uniform_real(double lo, double hi) {
        return lo + (hi - lo) * uniform_real();
    }

    // Fisher-Yates, high index down, one uniform_u64 draw per step.
    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            const std::size_t j = static_cast<std::size_t>(uniform_u64(i));
            std::swap(v[i - 1], v[j]);
        }
    }

    static std::array<std::uint32_t, 4> generate_block(std::uint64_t counter,
                                                       std::uint64_t key) {
        return round10({static_cast<std::uint32_t>(counter),
                        static_cast<std::uint32_t>(counter >> 32), 0, 0},
                       {static_cast<std::uint32_t>(key),
                        static_cast<std::uint32_t>(key >> 32)});
    }

    // The bare 10-round bijection on a full 128-bit counter, exposed so the
    // published known-answer vectors can be checked directly.
    static std::array<std::uint32_t, 4> round10(std::array<std::uint32_t, 4> ctr,
                                                std::array<std::uint32_t, 2> key) {
        std::uint32_t c0 = ctr[0], c1 = ctr[1], c2 = ctr[2], c3 = ctr[3];
        std::uint32_t k0 = key[0], k1 = key[1];
        for (int round = 0; round < 10; ++round) {
            const std::uint64_t p0 = 0xD2511F53ull * c0;
            const std::uint64_t p1 = 0xCD9E8D57ull * c2;
            const std::uint32_t n0 =
                static_cast<std::uint32_t>(p1 >> 32) ^ c1 ^ k0;
            const std::uint32_t n1 = static_cast<std::uint32_t>(p1);
            const std::uint32_t n2 =
                static_cast<std::uint32_t>(p0 >> 32) ^ c3 ^ k1;
            const std::uint32_t n3 = static_cast<std::uint32_t>(p0);
            c0 = n0; c1 = n1; c2 = n2; c3 = n3;
            k0 += 0x9E3779B9u;
            k1 += 0xBB67AE85u;
        }
        return {c0, c1, c2, c3};
    }

private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
    std::array<std::uint32_t, 4> block_{};
    int pos_ = 4;
};

}  // namespace vistask
