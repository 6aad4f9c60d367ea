#include "ktr/exact.hpp"

#include <algorithm>

#include "ktr/errors.hpp"

namespace ktr {

namespace {

void countSteps(std::uint64_t* steps, std::uint64_t amount) {
    if (steps) *steps += amount;
}

void requireProperArcs(const ReliabilityInstance& inst) {
    if (!inst.isArcFamily()) {
        throw UnsupportedInput("exact solver requires a proper circular-arc family");
    }
    const ArcFamily& arcs = inst.arcs();
    if (!isLabeled(arcs)) throw ValidationError("instance is not labeled; validate it first");
    if (!checkProper(arcs)) throw ValidationError("not proper: some arc contains another");
    if (!std::is_sorted(inst.targets.begin(), inst.targets.end())) {
        throw ValidationError("targets must be ascending");
    }
}

}  // namespace

std::vector<Region> buildRegions(Label n, std::span<const Label> targets) {
    const std::size_t k = targets.size();
    std::vector<Region> regions(k);
    for (std::size_t i = 0; i < k; ++i) {
        Region& region = regions[i];
        region.index = i;
        region.source = targets[i];
        region.sink = targets[(i + 1) % k];
        Label r = region.source;
        region.members.push_back(r);
        do {
            r = (r + 1) % n;
            region.members.push_back(r);
        } while (r != region.sink);
    }
    return regions;
}

AlphaBetaTable computeAlphaBeta(const Region& region, const Neighborhoods& closed,
                                std::uint64_t* steps) {
    const Label n = static_cast<Label>(closed.size());
    const std::size_t sinkOffset = region.members.size() - 1;
    const std::size_t swept = sinkOffset;

    AlphaBetaTable table;
    table.alpha.resize(swept);
    table.beta.resize(swept);
    for (std::size_t i = 0; i < swept; ++i) {
        const Label r = region.members[i];
        std::size_t first = i;
        std::size_t last = i;
        for (Label other : closed[r]) {
            const std::size_t off = region.offset(other, n);
            // Neighbors past the sink lie outside the region.
            if (off > sinkOffset) continue;
            first = std::min(first, off);
            last = std::max(last, off);
        }
        countSteps(steps, closed[r].size());
        table.alpha[i] = region.members[first];
        table.beta[i] = region.members[last];
    }
    return table;
}

std::vector<double> gapSweep(const Region& region, const AlphaBetaTable& table,
                             std::span<const double> q, std::uint64_t* steps) {
    const Label n = static_cast<Label>(q.size());
    const std::size_t swept = region.members.size() - 1;

    // fail[i + 1] holds Pr[F(members[i])]; fail[0] is the boundary cell before the source.
    std::vector<double> fail(swept + 1);
    fail[0] = 0.0;
    for (std::size_t i = 0; i < swept; ++i) {
        const Label r = region.members[i];
        const std::size_t alpha = region.offset(table.alpha[i], n);
        const std::size_t beta = region.offset(table.beta[i], n);

        // Product of q over the labels in (r, beta(r)]; empty when beta(r) == r.
        double tail = 1.0;
        for (std::size_t j = i + 1; j <= beta; ++j) tail *= q[region.members[j]];
        countSteps(steps, beta - i);

        fail[i + 1] = fail[i] + (1.0 - fail[alpha]) * (1.0 - q[r]) * tail;
    }
    fail.erase(fail.begin());
    return fail;
}

double gapDisconnectProb(const Region& region, const AlphaBetaTable& table,
                         std::span<const double> q, std::uint64_t* steps) {
    if (!table.beta.empty() && table.beta.front() == region.sink) return 0.0;
    const std::vector<double> fail = gapSweep(region, table, q, steps);
    return std::clamp(fail.back(), 0.0, 1.0);
}

AtLeastTable atLeastProb(std::span<const double> gaps) {
    AtLeastTable table;
    table.rows.resize(gaps.size() + 1);
    table.rows[0] = {1.0, 0.0, 0.0};
    for (std::size_t j = 1; j <= gaps.size(); ++j) {
        const double qj = gaps[j - 1];
        const auto& prev = table.rows[j - 1];
        auto& row = table.rows[j];
        row[0] = 1.0;
        row[1] = qj * prev[0] + (1.0 - qj) * prev[1];
        row[2] = qj * prev[1] + (1.0 - qj) * prev[2];
    }
    return table;
}

ExactResult ktrExact(const ReliabilityInstance& inst) {
    requireProperArcs(inst);
    if (inst.targets.size() <= 1) return {};
    return ktrExact(inst, closedNeighborhoods(inst.arcs()));
}

ExactResult ktrExact(const ReliabilityInstance& inst, const Neighborhoods& closed) {
    requireProperArcs(inst);
    ExactResult result;
    const std::size_t k = inst.targets.size();
    if (k <= 1) return result;

    const ArcFamily& fam = inst.arcs();
    const Label n = fam.size();
    if (static_cast<Label>(closed.size()) != n) {
        throw ValidationError("neighborhood structure does not match the family");
    }

    result.gaps.reserve(k);
    for (const Region& region : buildRegions(n, inst.targets)) {
        if (arcsIntersect(fam.arcs[region.source], fam.arcs[region.sink])) {
            result.gaps.push_back(0.0);
            continue;
        }
        const AlphaBetaTable table = computeAlphaBeta(region, closed, &result.steps);
        result.gaps.push_back(gapDisconnectProb(region, table, inst.q, &result.steps));
    }

    const AtLeastTable atLeast = atLeastProb(result.gaps);
    result.reliability = 1.0 - atLeast.at(k, 2);
    return result;
}

}  // namespace ktr
