#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "ktr/geometry.hpp"
#include "ktr/model.hpp"

namespace ktr {

/// The labels met walking clockwise from target `source` to the next target `sink`.
///
/// Consecutive regions share exactly one member, the target between them.
/// Only `source` and `sink` are targets.
struct Region {
    std::size_t index = 0;
    Label source = 0;
    Label sink = 0;
    std::vector<Label> members;  // source first, sink last

    /// Offset of `label` from `source` walking clockwise over n labels.
    std::size_t offset(Label label, Label n) const {
        return static_cast<std::size_t>((label - source + n) % n);
    }
};

/// For every member before the sink: the first and last member of the
/// region it intersects, in clockwise order from the source. Index i
/// refers to `members[i]`.
struct AlphaBetaTable {
    std::vector<Label> alpha;
    std::vector<Label> beta;
};

/// f(j, h) = probability that at least h of the first j gap events occur,
/// for h in {0, 1, 2}.
struct AtLeastTable {
    std::vector<std::array<double, 3>> rows;  // rows[j][h], j = 0..k

    double at(std::size_t j, std::size_t h) const { return rows[j][h]; }
};

struct ExactResult {
    double reliability = 1.0;
    /// Inner-loop iterations spent on neighborhood scans and tail products.
    std::uint64_t steps = 0;
    /// Q_1..Q_k; gaps[i] is the disconnection probability of region i.
    std::vector<double> gaps;
};

/// Requires `targets` ascending with at least two entries.
std::vector<Region> buildRegions(Label n, std::span<const Label> targets);

AlphaBetaTable computeAlphaBeta(const Region& region, const Neighborhoods& closed,
                                std::uint64_t* steps = nullptr);

/// Probabilities Pr[F(r)] for each member r before the sink, in member order.
/// The last entry is the probability that source and sink are disconnected
/// inside the region.
std::vector<double> gapSweep(const Region& region, const AlphaBetaTable& table,
                             std::span<const double> q, std::uint64_t* steps = nullptr);

/// Zero when source and sink intersect, else the last value of gapSweep.
double gapDisconnectProb(const Region& region, const AlphaBetaTable& table,
                         std::span<const double> q, std::uint64_t* steps = nullptr);

AtLeastTable atLeastProb(std::span<const double> gaps);

/// Exact K-terminal reliability of a proper circular-arc instance in O(n + m).
///
/// The instance must be validated (labeled) and proper. Fewer than two
/// targets give reliability 1. Chord families throw UnsupportedInput.
ExactResult ktrExact(const ReliabilityInstance& inst);

/// Same, reusing precomputed closed neighborhoods of the instance's family.
ExactResult ktrExact(const ReliabilityInstance& inst, const Neighborhoods& closed);

}  // namespace ktr
