#include "vistask/globality.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>

namespace vistask {

namespace {

double factorial(int n) {
    double f = 1.0;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

// Undirected cyclic orders of `ids`, each visited exactly once: the first
// element is fixed and the direction is canonicalized by second < last.
void for_each_cycle(const std::vector<int>& ids,
                    const std::function<void(const std::vector<int>&)>& visit) {
    const int m = static_cast<int>(ids.size());
    std::vector<int> rest(ids.begin() + 1, ids.end());
    std::sort(rest.begin(), rest.end());
    std::vector<int> order(m);
    order[0] = ids[0];
    do {
        if (rest.front() > rest.back()) continue;
        std::copy(rest.begin(), rest.end(), order.begin() + 1);
        visit(order);
    } while (std::next_permutation(rest.begin(), rest.end()));
}

std::vector<EdgePair> edges_of_order(const std::vector<int>& order) {
    std::vector<EdgePair> edges;
    const int m = static_cast<int>(order.size());
    edges.reserve(m);
    for (int i = 0; i < m; ++i) edges.push_back({order[i], order[(i + 1) % m]});
    return edges;
}

}  // namespace

void enumerate_cycle_structures(int n_half,
                                const std::function<void(const CycleStructure&)>& visit) {
    if (n_half < 3) throw std::invalid_argument("enumerate_cycle_structures: n_half >= 3");
    if (n_half > kMaxExactNHalf)
        throw std::invalid_argument("enumerate_cycle_structures: beyond exact budget");
    const int n = 2 * n_half;

    // label 1: (2n-1)!/2 single cycles
    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 0);
    const double p1 = 0.5 / (factorial(n - 1) / 2.0);
    for_each_cycle(all, [&](const std::vector<int>& order) {
        visit({edges_of_order(order), 1, p1});
    });

    // label 0: partitions {A, B} with 0 in A, cyclic orders inside each part
    const double cycles_per_group = n_half >= 3 ? factorial(n_half - 1) / 2.0 : 1.0;
    double partitions = 1.0;  // C(2n-1, n-1)
    for (int i = 1; i < n_half; ++i)
        partitions = partitions * (n - i) / i;
    const double p0 = 0.5 / (partitions * cycles_per_group * cycles_per_group);

    std::vector<int> pick(n_half - 1);
    std::iota(pick.begin(), pick.end(), 0);  // indices into {1..2n-1}
    for (;;) {
        std::vector<int> group_a{0};
        std::vector<char> in_a(n, 0);
        in_a[0] = 1;
        for (int idx : pick) {
            group_a.push_back(idx + 1);
            in_a[idx + 1] = 1;
        }
        std::vector<int> group_b;
        for (int v = 1; v < n; ++v)
            if (!in_a[v]) group_b.push_back(v);

        for_each_cycle(group_a, [&](const std::vector<int>& order_a) {
            const std::vector<EdgePair> ea = edges_of_order(order_a);
            for_each_cycle(group_b, [&](const std::vector<int>& order_b) {
                std::vector<EdgePair> edges = ea;
                const std::vector<EdgePair> eb = edges_of_order(order_b);
                edges.insert(edges.end(), eb.begin(), eb.end());
                visit({std::move(edges), 0, p0});
            });
        });

        // next (n_half-1)-combination of {0..2n-2}
        int i = n_half - 2;
        while (i >= 0 && pick[i] == n - 1 - (n_half - 1 - i)) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < n_half - 1; ++j) pick[j] = pick[j - 1] + 1;
    }
}

std::vector<CycleStructure> enumerate_cycle_structures(int n_half) {
    std::vector<CycleStructure> out;
    enumerate_cycle_structures(n_half, [&](const CycleStructure& s) { out.push_back(s); });
    return out;
}

namespace {

// Observation: per revealed node (ascending), the sorted pair of its
// neighbors. Encoded as a flat byte key.
using ObsKey = std::vector<std::uint8_t>;

ObsKey observe(const std::vector<EdgePair>& edges, const std::vector<int>& revealed) {
    ObsKey key;
    key.reserve(revealed.size() * 2);
    for (int v : revealed) {
        std::array<int, 2> nb{-1, -1};
        int found = 0;
        for (const EdgePair& e : edges) {
            if (e.a == v) nb[found++] = e.b;
            else if (e.b == v) nb[found++] = e.a;
            if (found == 2) break;
        }
        if (nb[0] > nb[1]) std::swap(nb[0], nb[1]);
        key.push_back(static_cast<std::uint8_t>(nb[0]));
        key.push_back(static_cast<std::uint8_t>(nb[1]));
    }
    return key;
}

double mi_from_table(const std::map<ObsKey, std::array<double, 2>>& table) {
    double mass = 0.0;
    std::array<double, 2> label_mass{0.0, 0.0};
    for (const auto& [key, w] : table) {
        mass += w[0] + w[1];
        label_mass[0] += w[0];
        label_mass[1] += w[1];
    }
    double mi = 0.0;
    for (const auto& [key, w] : table) {
        const double po = (w[0] + w[1]) / mass;
        for (int y = 0; y < 2; ++y) {
            const double pj = w[y] / mass;
            if (pj > 0.0) mi += pj * std::log2(pj / (po * (label_mass[y] / mass)));
        }
    }
    return mi;
}

double exact_mi_for_subset(int n_half, const std::vector<int>& revealed) {
    std::map<ObsKey, std::array<double, 2>> table;
    enumerate_cycle_structures(n_half, [&](const CycleStructure& s) {
        table[observe(s.edges, revealed)][s.label] += s.probability;
    });
    return mi_from_table(table);
}

}  // namespace

MiResult conditional_mi(int n_half, int k, MiMode mode, int samples, std::uint64_t seed) {
    const int n = 2 * n_half;
    if (k < 0 || k > n) throw std::invalid_argument("conditional_mi: k outside [0, 2n]");

    MiResult result;
    result.revealed.resize(k);
    std::iota(result.revealed.begin(), result.revealed.end(), 0);
    if (k == 0) return result;  // no observation, zero information

    if (mode == MiMode::exact) {
        if (n_half > kMaxExactNHalf)
            throw std::invalid_argument("conditional_mi: exact mode needs n_half <= 6");
        result.bits = exact_mi_for_subset(n_half, result.revealed);

        // The generator is exchangeable over node ids, so every k-subset
        // carries the same information; spot-check random ones (fewer at the
        // largest size, where each enumeration pass is ~2e7 structures).
        Philox4x32 rng(stable_hash(seed, 0x73756273));
        const int trials = n_half <= 5 ? 10 : 2;
        for (int trial = 0; trial < trials; ++trial) {
            std::vector<int> ids(n);
            std::iota(ids.begin(), ids.end(), 0);
            rng.shuffle(ids);
            std::vector<int> subset(ids.begin(), ids.begin() + k);
            std::sort(subset.begin(), subset.end());
            const double other = exact_mi_for_subset(n_half, subset);
            if (std::abs(other - result.bits) > 1e-9)
                throw std::logic_error("conditional_mi: symmetry violated across subsets");
        }
        return result;
    }

    if (samples < 1) throw std::invalid_argument("conditional_mi: monte_carlo needs samples");
    Philox4x32 rng(seed);
    std::map<ObsKey, std::array<double, 2>> table;
    for (int s = 0; s < samples; ++s) {
        const int label = static_cast<int>(rng.uniform_u64(2));
        const std::vector<EdgePair> edges = sample_cycle_topology(n_half, label, rng);
        table[observe(edges, result.revealed)][label] += 1.0;
    }
    result.bits = mi_from_table(table);
    return result;
}

std::pair<Canvas, std::vector<bool>> patch_mask(const Canvas& canvas, double p,
                                                Philox4x32& rng) {
    if (canvas.width() != kMaskCanvas || canvas.height() != kMaskCanvas)
        throw std::invalid_argument("patch_mask: canvas must be 224x224");
    if (!(p >= 0.0 && p <= 1.0))
        throw std::invalid_argument("patch_mask: p must be in [0, 1]");

    const int grid = kMaskCanvas / kPatchSize;  // 14
    Canvas out = canvas;
    std::vector<bool> mask(static_cast<std::size_t>(grid) * grid, false);
    for (int py = 0; py < grid; ++py)
        for (int px = 0; px < grid; ++px) {
            if (rng.uniform_real() >= p) continue;
            mask[static_cast<std::size_t>(py) * grid + px] = true;
            for (int y = py * kPatchSize; y < (py + 1) * kPatchSize; ++y)
                for (int x = px * kPatchSize; x < (px + 1) * kPatchSize; ++x)
                    out.at(x, y) = colors::gray;
        }
    return {std::move(out), std::move(mask)};
}

}  // namespace vistask
