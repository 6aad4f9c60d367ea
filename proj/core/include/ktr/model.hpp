#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "ktr/geometry.hpp"

namespace ktr {

/// An intersection model with per-element failure probabilities and a target set.
///
/// Targets never fail: every target carries q = 0. Before validation the
/// arcs may be in any order; validateInstance relabels arc families so
/// that label order is clockwise start order, and permutes `q` and
/// `targets` along with them.
struct ReliabilityInstance {
    std::variant<ArcFamily, ChordFamily> family;
    std::vector<double> q;
    std::vector<Label> targets;  // ascending

    Label size() const;
    bool isArcFamily() const { return std::holds_alternative<ArcFamily>(family); }
    const ArcFamily& arcs() const { return std::get<ArcFamily>(family); }
    const ChordFamily& chords() const { return std::get<ChordFamily>(family); }

    /// Per-label target flag.
    std::vector<bool> targetMask() const;

    friend bool operator==(const ReliabilityInstance&, const ReliabilityInstance&) = default;
};

/// Simple undirected graph derived from an intersection model.
struct AdjacencyView {
    Label n = 0;
    std::size_t m = 0;
    std::vector<std::vector<Label>> neighbors;  // open neighborhoods, ascending
};

ReliabilityInstance validateInstance(ReliabilityInstance inst, bool requireProper);

/// Sets q = 0 on every target that carries a nonzero failure probability.
/// Returns how many were changed.
std::size_t coerceTargetFailures(ReliabilityInstance& inst);

Neighborhoods closedNeighborhoods(const ReliabilityInstance& inst);
AdjacencyView toAdjacency(const ReliabilityInstance& inst);
AdjacencyView toAdjacency(const Neighborhoods& closed);

/// Rotates the circle by `offset` slots and relabels.
ReliabilityInstance rotate(const ReliabilityInstance& inst, Position offset);

}  // namespace ktr
