#include "ktr/model.hpp"

#include <algorithm>
#include <string>

#include "ktr/errors.hpp"

namespace ktr {

Label ReliabilityInstance::size() const {
    return std::visit([](const auto& fam) { return fam.size(); }, family);
}

std::vector<bool> ReliabilityInstance::targetMask() const {
    std::vector<bool> mask(size(), false);
    for (Label t : targets) mask[t] = true;
    return mask;
}

ReliabilityInstance validateInstance(ReliabilityInstance inst, bool requireProper) {
    const Label n = inst.size();
    std::visit([](const auto& fam) { checkEndpoints(fam); }, inst.family);

    if (static_cast<Label>(inst.q.size()) != n) {
        throw ValidationError("expected " + std::to_string(n) + " failure probabilities, got " +
                              std::to_string(inst.q.size()));
    }
    for (Label r = 0; r < n; ++r) {
        // Negated form also rejects NaN.
        if (!(inst.q[r] >= 0.0 && inst.q[r] <= 1.0)) {
            throw ValidationError("failure probability of element " + std::to_string(r) +
                                  " outside [0, 1]");
        }
    }
    std::sort(inst.targets.begin(), inst.targets.end());
    if (std::adjacent_find(inst.targets.begin(), inst.targets.end()) != inst.targets.end()) {
        throw ValidationError("duplicate target");
    }
    for (Label t : inst.targets) {
        if (t < 0 || t >= n) throw ValidationError("target " + std::to_string(t) + " out of range");
        if (inst.q[t] != 0.0) {
            throw ValidationError("target must be perfect (element " + std::to_string(t) +
                                  " has nonzero q)");
        }
    }

    if (auto* arcs = std::get_if<ArcFamily>(&inst.family)) {
        if (requireProper && !checkProper(*arcs)) {
            throw ValidationError("not proper: some arc contains another");
        }
        if (!isLabeled(*arcs)) {
            Labeling lab = labelArcs(*arcs);
            std::vector<double> q(n);
            for (Label i = 0; i < n; ++i) q[lab.permutation[i]] = inst.q[i];
            for (Label& t : inst.targets) t = lab.permutation[t];
            std::sort(inst.targets.begin(), inst.targets.end());
            inst.family = std::move(lab.family);
            inst.q = std::move(q);
        }
    }
    return inst;
}

std::size_t coerceTargetFailures(ReliabilityInstance& inst) {
    std::size_t changed = 0;
    for (Label t : inst.targets) {
        if (t >= 0 && t < static_cast<Label>(inst.q.size()) && inst.q[t] != 0.0) {
            inst.q[t] = 0.0;
            ++changed;
        }
    }
    return changed;
}

Neighborhoods closedNeighborhoods(const ReliabilityInstance& inst) {
    return std::visit([](const auto& fam) { return closedNeighborhoods(fam); }, inst.family);
}

AdjacencyView toAdjacency(const Neighborhoods& closed) {
    AdjacencyView adj;
    adj.n = static_cast<Label>(closed.size());
    adj.neighbors.resize(closed.size());
    std::size_t degreeSum = 0;
    for (Label r = 0; r < adj.n; ++r) {
        auto& out = adj.neighbors[r];
        out.reserve(closed[r].size() - 1);
        for (Label x : closed[r]) {
            if (x != r) out.push_back(x);
        }
        degreeSum += out.size();
    }
    adj.m = degreeSum / 2;
    return adj;
}

AdjacencyView toAdjacency(const ReliabilityInstance& inst) {
    return toAdjacency(closedNeighborhoods(inst));
}

ReliabilityInstance rotate(const ReliabilityInstance& inst, Position offset) {
    ReliabilityInstance out = inst;
    std::visit([&](auto& fam) { fam = rotate(fam, offset); }, out.family);
    return validateInstance(std::move(out), false);
}

}  // namespace ktr
