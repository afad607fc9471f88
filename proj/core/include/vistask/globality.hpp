#pragma once

// How global is the cycles task? Exact mutual information between a partial
// symbolic observation and the label, by enumerating every structure the
// generator can emit, plus the patch-masking transform used to probe trained
// models.

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "vistask/canvas.hpp"
#include "vistask/cycles.hpp"
#include "vistask/rng.hpp"

namespace vistask {

struct CycleStructure {
    std::vector<EdgePair> edges;
    int label = 0;
    double probability = 0.0;  // under the generator, labels balanced 1/2
};

inline constexpr int kMaxExactNHalf = 6;

// Every edge set the cycles sampler can produce at this size with its exact
// generation probability. Streaming form for the large sizes.
void enumerate_cycle_structures(int n_half,
                                const std::function<void(const CycleStructure&)>& visit);
std::vector<CycleStructure> enumerate_cycle_structures(int n_half);

enum class MiMode { exact, monte_carlo };

struct MiResult {
    double bits = 0.0;
    std::vector<int> revealed;  // the canonical subset used
};

// I(observation; label) where each revealed node exposes the identities of
// its two neighbors. By exchangeability of node labels every k-subset gives
// the same value; exact mode checks that on random subsets and returns the
// canonical {0..k-1}. Monte-Carlo mode estimates from `samples` draws of the
// real sampler.
MiResult conditional_mi(int n_half, int k, MiMode mode, int samples = 0,
                        std::uint64_t seed = 0);

inline constexpr int kPatchSize = 16;    // pixels
inline constexpr int kMaskCanvas = 224;  // 14 x 14 = 196 patches

// Masks each 16x16 patch of a 224x224 canvas independently with probability
// p (mid-gray fill). One uniform draw per patch in row-major order; the
// returned bitmap records masked patches.
std::pair<Canvas, std::vector<bool>> patch_mask(const Canvas& canvas, double p,
                                                Philox4x32& rng);

}  // namespace vistask
