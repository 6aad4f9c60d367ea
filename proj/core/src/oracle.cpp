#include "ktr/oracle.hpp"

#include <cmath>
#include <random>
#include <string>

#include "ktr/errors.hpp"

namespace ktr {

bool connectedTargets(const AdjacencyView& adj, const std::vector<bool>& alive,
                      std::span<const Label> targets) {
    if (targets.size() <= 1) return true;
    UnionFind uf(adj.n);
    for (Label v = 0; v < adj.n; ++v) {
        if (!alive[v]) continue;
        for (Label w : adj.neighbors[v]) {
            if (w > v && alive[w]) uf.unite(v, w);
        }
    }
    const std::size_t root = uf.find(targets.front());
    for (Label t : targets.subspan(1)) {
        if (uf.find(t) != root) return false;
    }
    return true;
}

double ktrBrute(const ReliabilityInstance& inst) {
    if (inst.targets.size() <= 1) return 1.0;
    const Label n = inst.size();
    const std::vector<bool> isTarget = inst.targetMask();
    std::vector<Label> free;
    for (Label r = 0; r < n; ++r) {
        if (!isTarget[r]) free.push_back(r);
    }
    if (free.size() > kBruteForceLimit) {
        throw TooLarge("brute force over " + std::to_string(free.size()) +
                       " non-targets exceeds the limit of " + std::to_string(kBruteForceLimit));
    }

    const AdjacencyView adj = toAdjacency(inst);
    std::vector<bool> alive = isTarget;
    double total = 0.0;
    const std::uint64_t subsets = std::uint64_t{1} << free.size();
    for (std::uint64_t mask = 0; mask < subsets; ++mask) {
        double weight = 1.0;
        for (std::size_t b = 0; b < free.size(); ++b) {
            const bool on = (mask >> b) & 1U;
            alive[free[b]] = on;
            weight *= on ? 1.0 - inst.q[free[b]] : inst.q[free[b]];
        }
        if (weight == 0.0) continue;
        if (connectedTargets(adj, alive, inst.targets)) total += weight;
    }
    return total;
}

MonteCarloEstimate ktrMonteCarlo(const ReliabilityInstance& inst, std::uint64_t samples,
                                 std::uint64_t seed) {
    if (samples == 0) throw ValidationError("sample count must be positive");
    MonteCarloEstimate out;
    out.samples = samples;
    out.seed = seed;

    const Label n = inst.size();
    const AdjacencyView adj = toAdjacency(inst);
    const std::vector<bool> isTarget = inst.targetMask();
    // Isolated non-targets cannot affect connectivity and draw no numbers,
    // so padding an instance with them leaves the stream unchanged.
    std::vector<Label> sampled;
    std::vector<bool> alive(n, false);
    for (Label r = 0; r < n; ++r) {
        if (isTarget[r]) alive[r] = true;
        else if (!adj.neighbors[r].empty()) sampled.push_back(r);
    }

    std::mt19937_64 rng(seed);
    std::uint64_t hits = 0;
    for (std::uint64_t s = 0; s < samples; ++s) {
        for (Label r : sampled) {
            // 53 high bits give a uniform double in [0, 1).
            const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
            alive[r] = u >= inst.q[r];
        }
        if (connectedTargets(adj, alive, inst.targets)) ++hits;
    }
    const double p = static_cast<double>(hits) / static_cast<double>(samples);
    out.estimate = p;
    out.standardError = std::sqrt(p * (1.0 - p) / static_cast<double>(samples));
    return out;
}

}  // namespace ktr
