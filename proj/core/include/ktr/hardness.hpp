#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "ktr/geometry.hpp"
#include "ktr/model.hpp"

namespace ktr {

/// Bipartite graph with parts U = {0..nU-1} and V = {0..nV-1}.
struct BipartiteGraph {
    int nU = 0;
    int nV = 0;
    std::vector<std::pair<int, int>> edges;  // (u, v)

    friend bool operator==(const BipartiteGraph&, const BipartiteGraph&) = default;
};

/// Throws ValidationError on out-of-range endpoints or duplicate edges.
void validateBipartite(const BipartiteGraph& graph);

struct ChordRole {
    enum class Kind { X, Y, Z, W };
    Kind kind = Kind::Z;
    int u = -1;  // set for X and W
    int v = -1;  // set for Y and W
};

/// Circle representation compiled from a bipartite graph.
///
/// Chord labels: x_0..x_{nU-1}, then y_0..y_{nV-1}, then z, then one w
/// chord per edge in edge-list order. Targets are every x, y and z chord.
struct ReductionOutput {
    ChordFamily chords;
    std::vector<ChordRole> roles;
    std::vector<Label> targets;
    std::vector<double> q;
    std::vector<Label> edgeChord;  // edgeChord[e] = label of w chord for edge e

    ReliabilityInstance instance() const;
};

/// Largest edge count the counting routines will enumerate.
inline constexpr std::size_t kEdgeEnumerationLimit = 25;
inline constexpr std::size_t kIdentityEdgeLimit = 20;

/// Lays out the chords so that w_ij crosses exactly x_i and y_j among X and
/// Y, z crosses every w and no x or y, and X, Y chords are pairwise
/// disjoint. The layout is checked pairwise before returning; a violation
/// throws ConstructionError.
ReductionOutput buildCircleRep(const BipartiteGraph& graph);

std::uint64_t countEdgeCovers(const BipartiteGraph& graph);

/// Subsets S of the w chords whose operation alone connects every target.
std::uint64_t countSuccessSets(const ReductionOutput& reduction);

struct IdentityReport {
    std::uint64_t edgeCovers = 0;
    std::uint64_t successSets = 0;
    double reliability = 0.0;  // with every w chord at q = 1/2
    std::size_t edgeCount = 0;
    bool pass = false;
};

inline constexpr double kIdentityTolerance = 1e-6;

/// Checks |EC(B)| = |SS(C)| exactly and |EC(B)| = R * 2^|E| within kIdentityTolerance.
IdentityReport verifyIdentity(const BipartiteGraph& graph);

}  // namespace ktr
