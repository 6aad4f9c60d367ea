#include "ktr/generator.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "ktr/errors.hpp"

namespace ktr {

namespace {

constexpr int kReachAttempts = 256;

std::uint64_t uniformBelow(std::mt19937_64& rng, std::uint64_t bound) {
    constexpr auto top = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t limit = top - top % bound;
    std::uint64_t x = rng();
    while (x >= limit) x = rng();
    return x % bound;
}

Label uniformIn(std::mt19937_64& rng, Label lo, Label hi) {
    return lo + static_cast<Label>(uniformBelow(rng, static_cast<std::uint64_t>(hi - lo + 1)));
}

double uniformUnit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Reach sequence with d_{r+1} >= d_r - 1 for every r, including r = n-1 -> 0.
std::vector<Label> sampleReaches(std::mt19937_64& rng, Label n, Label lo, Label hi) {
    std::vector<Label> reach(n);
    for (int attempt = 0; attempt < kReachAttempts; ++attempt) {
        reach[0] = uniformIn(rng, lo, hi);
        for (Label r = 1; r < n; ++r) reach[r] = uniformIn(rng, std::max(lo, reach[r - 1] - 1), hi);
        if (reach[0] >= reach[n - 1] - 1) return reach;
    }
    throw GenerationError("could not satisfy the cyclic reach constraint after " +
                          std::to_string(kReachAttempts) + " attempts");
}

ArcFamily layoutArcs(const std::vector<Label>& reach) {
    const Label n = static_cast<Label>(reach.size());
    // Endpoint events ordered around the circle. Each start is followed by
    // the ends of the arcs whose last covered start it is; ends that wrapped
    // past label n-1 precede the ones that did not.
    enum Phase { kStart = 0, kWrappedEnd = 1, kEnd = 2 };
    std::vector<std::tuple<Label, int, Label>> events;
    events.reserve(2 * static_cast<std::size_t>(n));
    for (Label r = 0; r < n; ++r) {
        events.emplace_back(r, kStart, r);
        const Label last = r + reach[r];
        events.emplace_back(last % n, last >= n ? kWrappedEnd : kEnd, r);
    }
    std::sort(events.begin(), events.end());

    ArcFamily fam;
    fam.slots = 2 * static_cast<Position>(n);
    fam.arcs.resize(n);
    for (std::size_t pos = 0; pos < events.size(); ++pos) {
        const auto& [gap, phase, r] = events[pos];
        (phase == kStart ? fam.arcs[r].start : fam.arcs[r].end) = static_cast<Position>(pos);
    }
    return fam;
}

}  // namespace

ReliabilityInstance generateInstance(const GeneratorOptions& options) {
    const Label n = options.n;
    const Label k = options.k;
    if (n < 2 || k < 2 || k > n) {
        throw GenerationError("need 2 <= k <= n, got n=" + std::to_string(n) +
                              " k=" + std::to_string(k));
    }
    if (options.reach < 1) throw GenerationError("reach bound must be at least 1");
    const Label hi = std::min(options.reach, n - 1);
    const Label lo = options.minReach;
    if (lo < 0 || lo > hi) throw GenerationError("minimum reach outside [0, reach]");

    std::mt19937_64 rng(options.seed);
    const std::vector<Label> reach = sampleReaches(rng, n, lo, hi);

    ReliabilityInstance inst;
    inst.family = layoutArcs(reach);
    if (!checkProper(inst.arcs())) throw GenerationError("generated family is not proper");

    std::vector<Label> labels(n);
    std::iota(labels.begin(), labels.end(), 0);
    for (Label i = 0; i < k; ++i) {
        const Label j = i + static_cast<Label>(uniformBelow(rng, static_cast<std::uint64_t>(n - i)));
        std::swap(labels[i], labels[j]);
    }
    inst.targets.assign(labels.begin(), labels.begin() + k);
    std::sort(inst.targets.begin(), inst.targets.end());

    const std::vector<bool> isTarget = inst.targetMask();
    inst.q.resize(n);
    for (Label r = 0; r < n; ++r) inst.q[r] = isTarget[r] ? 0.0 : uniformUnit(rng);

    return validateInstance(std::move(inst), true);
}

}  // namespace ktr
