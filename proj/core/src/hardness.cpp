#include "ktr/hardness.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include "ktr/errors.hpp"
#include "ktr/oracle.hpp"

namespace ktr {

namespace {

void checkEdgeLimit(std::size_t edges, std::size_t limit, const char* what) {
    if (edges > limit) {
        throw TooLarge(std::string(what) + " over " + std::to_string(edges) +
                       " edges exceeds the limit of " + std::to_string(limit));
    }
}

std::string describe(const ChordRole& role) {
    switch (role.kind) {
        case ChordRole::Kind::X: return "x_" + std::to_string(role.u);
        case ChordRole::Kind::Y: return "y_" + std::to_string(role.v);
        case ChordRole::Kind::Z: return "z";
        case ChordRole::Kind::W:
            return "w_" + std::to_string(role.u) + "," + std::to_string(role.v);
    }
    return "?";
}

/// Whether chords with these roles must cross under the reduction.
bool mustCross(const ChordRole& a, const ChordRole& b) {
    using Kind = ChordRole::Kind;
    if (a.kind == Kind::W && b.kind == Kind::W) return false;  // unconstrained
    if (b.kind == Kind::W) return mustCross(b, a);
    if (a.kind != Kind::W) return false;  // x, y, z are pairwise disjoint
    switch (b.kind) {
        case Kind::X: return b.u == a.u;
        case Kind::Y: return b.v == a.v;
        default: return true;  // z
    }
}

void verifyLayout(const ReductionOutput& out) {
    using Kind = ChordRole::Kind;
    const Label n = out.chords.size();
    for (Label a = 0; a < n; ++a) {
        for (Label b = a + 1; b < n; ++b) {
            const ChordRole& ra = out.roles[a];
            const ChordRole& rb = out.roles[b];
            if (ra.kind == Kind::W && rb.kind == Kind::W) continue;
            const bool crosses = chordsIntersect(out.chords.chords[a], out.chords.chords[b]);
            if (crosses != mustCross(ra, rb)) {
                throw ConstructionError("chords " + describe(ra) + " and " + describe(rb) +
                                        (crosses ? " cross" : " do not cross"));
            }
        }
    }
}

}  // namespace

void validateBipartite(const BipartiteGraph& graph) {
    if (graph.nU < 0 || graph.nV < 0) throw ValidationError("negative part size");
    std::set<std::pair<int, int>> seen;
    for (const auto& [u, v] : graph.edges) {
        if (u < 0 || u >= graph.nU || v < 0 || v >= graph.nV) {
            throw ValidationError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                                  ") out of range");
        }
        if (!seen.emplace(u, v).second) {
            throw ValidationError("duplicate edge (" + std::to_string(u) + ", " +
                                  std::to_string(v) + ")");
        }
    }
}

ReliabilityInstance ReductionOutput::instance() const {
    return ReliabilityInstance{chords, q, targets};
}

ReductionOutput buildCircleRep(const BipartiteGraph& graph) {
    validateBipartite(graph);
    const int nU = graph.nU;
    const int nV = graph.nV;
    const auto nE = static_cast<int>(graph.edges.size());
    const Label total = nU + nV + 1 + nE;
    const Label zLabel = nU + nV;

    ReductionOutput out;
    out.chords.slots = 2 * static_cast<Position>(total);
    out.chords.chords.resize(total);
    out.roles.resize(total);
    out.q.assign(total, 0.0);
    out.edgeChord.resize(nE);

    for (int i = 0; i < nU; ++i) out.roles[i] = {ChordRole::Kind::X, i, -1};
    for (int j = 0; j < nV; ++j) out.roles[nU + j] = {ChordRole::Kind::Y, -1, j};
    out.roles[zLabel] = {ChordRole::Kind::Z, -1, -1};
    for (int e = 0; e < nE; ++e) {
        const auto [u, v] = graph.edges[e];
        const Label w = zLabel + 1 + e;
        out.roles[w] = {ChordRole::Kind::W, u, v};
        out.edgeChord[e] = w;
        out.q[w] = 0.5;
    }
    for (Label t = 0; t <= zLabel; ++t) out.targets.push_back(t);

    // Clockwise from the top: z, the y blocks, z again at the bottom, then the x blocks.
    // A block is the vertex chord's two endpoints enclosing one w endpoint per incident edge.
    Position next = 0;
    std::vector<bool> wStarted(nE, false);
    auto placeW = [&](int e) {
        Chord& c = out.chords.chords[out.edgeChord[e]];
        (wStarted[e] ? c.p2 : c.p1) = next++;
        wStarted[e] = true;
    };

    out.chords.chords[zLabel].p1 = next++;
    for (int j = 0; j < nV; ++j) {
        Chord& y = out.chords.chords[nU + j];
        y.p1 = next++;
        for (int e = 0; e < nE; ++e) {
            if (graph.edges[e].second == j) placeW(e);
        }
        y.p2 = next++;
    }
    out.chords.chords[zLabel].p2 = next++;
    for (int i = nU - 1; i >= 0; --i) {
        Chord& x = out.chords.chords[i];
        x.p1 = next++;
        for (int e = 0; e < nE; ++e) {
            if (graph.edges[e].first == i) placeW(e);
        }
        x.p2 = next++;
    }

    checkEndpoints(out.chords);
    verifyLayout(out);
    return out;
}

std::uint64_t countEdgeCovers(const BipartiteGraph& graph) {
    validateBipartite(graph);
    const std::size_t nE = graph.edges.size();
    checkEdgeLimit(nE, kEdgeEnumerationLimit, "edge cover enumeration");

    std::uint64_t count = 0;
    std::vector<char> coveredU(graph.nU);
    std::vector<char> coveredV(graph.nV);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << nE); ++mask) {
        std::fill(coveredU.begin(), coveredU.end(), 0);
        std::fill(coveredV.begin(), coveredV.end(), 0);
        for (std::size_t e = 0; e < nE; ++e) {
            if ((mask >> e) & 1U) {
                coveredU[graph.edges[e].first] = 1;
                coveredV[graph.edges[e].second] = 1;
            }
        }
        const bool covers = std::all_of(coveredU.begin(), coveredU.end(), [](char c) { return c; }) &&
                            std::all_of(coveredV.begin(), coveredV.end(), [](char c) { return c; });
        if (covers) ++count;
    }
    return count;
}

std::uint64_t countSuccessSets(const ReductionOutput& reduction) {
    const std::size_t nW = reduction.edgeChord.size();
    checkEdgeLimit(nW, kEdgeEnumerationLimit, "success set enumeration");

    const AdjacencyView adj = toAdjacency(closedNeighborhoods(reduction.chords));
    std::vector<bool> alive(adj.n, false);
    for (Label t : reduction.targets) alive[t] = true;

    std::uint64_t count = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << nW); ++mask) {
        for (std::size_t b = 0; b < nW; ++b) alive[reduction.edgeChord[b]] = (mask >> b) & 1U;
        if (connectedTargets(adj, alive, reduction.targets)) ++count;
    }
    return count;
}

IdentityReport verifyIdentity(const BipartiteGraph& graph) {
    validateBipartite(graph);
    checkEdgeLimit(graph.edges.size(), kIdentityEdgeLimit, "identity check");

    IdentityReport report;
    report.edgeCount = graph.edges.size();
    report.edgeCovers = countEdgeCovers(graph);
    const ReductionOutput reduction = buildCircleRep(graph);
    report.successSets = countSuccessSets(reduction);
    report.reliability = ktrBrute(reduction.instance());

    const double scaled = std::ldexp(report.reliability, static_cast<int>(report.edgeCount));
    report.pass = report.edgeCovers == report.successSets &&
                  std::abs(static_cast<double>(report.edgeCovers) - scaled) <= kIdentityTolerance;
    return report;
}

}  // namespace ktr
