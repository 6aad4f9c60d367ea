#pragma once

// Test-only oracles. Nothing here calls into the solver paths it checks:
// geometry is recomputed from materialized position sets and connectivity
// by breadth-first search.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <queue>
#include <random>
#include <set>
#include <vector>

#include "ktr/geometry.hpp"
#include "ktr/model.hpp"

namespace ktr::testing {

inline std::set<Position> covered(const Arc& a, Position slots) {
    std::set<Position> out;
    for (Position p = a.start;; p = (p + 1) % slots) {
        out.insert(p);
        if (p == a.end) break;
    }
    return out;
}

inline bool setsIntersect(const Arc& a, const Arc& b, Position slots) {
    const auto sa = covered(a, slots);
    const auto sb = covered(b, slots);
    return std::any_of(sa.begin(), sa.end(), [&](Position p) { return sb.count(p) > 0; });
}

inline bool setContains(const Arc& a, const Arc& b, Position slots) {
    const auto sa = covered(a, slots);
    const auto sb = covered(b, slots);
    return std::includes(sa.begin(), sa.end(), sb.begin(), sb.end());
}

/// Chords cross iff exactly one endpoint of d is among the slots walked
/// from c.p1 (exclusive) to c.p2 (exclusive).
inline bool chordsCrossBySweep(const Chord& c, const Chord& d, Position slots) {
    std::set<Position> side;
    for (Position p = (c.p1 + 1) % slots; p != c.p2; p = (p + 1) % slots) side.insert(p);
    return (side.count(d.p1) > 0) != (side.count(d.p2) > 0);
}

/// Containment as the library defines it: b's positions lie inside a's,
/// except that an arc over every slot does not contain an arc holding both
/// of its endpoints.
inline bool containsBySets(const Arc& a, const Arc& b, Position slots) {
    if (!setContains(a, b, slots)) return false;
    const auto sb = covered(b, slots);
    return !(sb.count(a.start) > 0 && sb.count(a.end) > 0);
}

inline bool properBySets(const ArcFamily& fam) {
    for (std::size_t a = 0; a < fam.arcs.size(); ++a) {
        for (std::size_t b = 0; b < fam.arcs.size(); ++b) {
            if (a != b && containsBySets(fam.arcs[a], fam.arcs[b], fam.slots)) return false;
        }
    }
    return true;
}

/// Adjacency lists recomputed from position sets (arcs) or sweeps (chords).
inline std::vector<std::vector<Label>> adjacencyBySets(const ReliabilityInstance& inst) {
    const Label n = inst.size();
    std::vector<std::vector<Label>> adj(n);
    for (Label a = 0; a < n; ++a) {
        for (Label b = a + 1; b < n; ++b) {
            bool meet = false;
            if (inst.isArcFamily()) {
                meet = setsIntersect(inst.arcs().arcs[a], inst.arcs().arcs[b], inst.arcs().slots);
            } else {
                meet = chordsCrossBySweep(inst.chords().chords[a], inst.chords().chords[b],
                                          inst.chords().slots);
            }
            if (meet) {
                adj[a].push_back(b);
                adj[b].push_back(a);
            }
        }
    }
    return adj;
}

inline bool targetsConnectedBfs(const std::vector<std::vector<Label>>& adj,
                                const std::vector<bool>& alive, const std::vector<Label>& targets) {
    if (targets.size() <= 1) return true;
    std::vector<bool> seen(adj.size(), false);
    std::queue<Label> todo;
    todo.push(targets.front());
    seen[targets.front()] = true;
    while (!todo.empty()) {
        const Label v = todo.front();
        todo.pop();
        for (Label w : adj[v]) {
            if (alive[w] && !seen[w]) {
                seen[w] = true;
                todo.push(w);
            }
        }
    }
    return std::all_of(targets.begin(), targets.end(), [&](Label t) { return seen[t]; });
}

/// Reliability by enumerating failure patterns with a BFS connectivity test.
inline double reliabilityBySets(const ReliabilityInstance& inst) {
    const auto adj = adjacencyBySets(inst);
    const std::vector<bool> isTarget = inst.targetMask();
    std::vector<Label> free;
    for (Label r = 0; r < inst.size(); ++r) {
        if (!isTarget[r]) free.push_back(r);
    }
    double total = 0.0;
    std::vector<bool> alive = isTarget;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << free.size()); ++mask) {
        double w = 1.0;
        for (std::size_t b = 0; b < free.size(); ++b) {
            const bool on = (mask >> b) & 1U;
            alive[free[b]] = on;
            w *= on ? 1.0 - inst.q[free[b]] : inst.q[free[b]];
        }
        if (targetsConnectedBfs(adj, alive, inst.targets)) total += w;
    }
    return total;
}

/// Random arc family with distinct endpoints on `slots` positions.
inline ArcFamily randomArcFamily(std::mt19937_64& rng, int n, Position slots) {
    std::vector<Position> pos(slots);
    for (Position p = 0; p < slots; ++p) pos[p] = p;
    std::shuffle(pos.begin(), pos.end(), rng);
    ArcFamily fam;
    fam.slots = slots;
    for (int i = 0; i < n; ++i) fam.arcs.push_back(Arc{pos[2 * i], pos[2 * i + 1]});
    return fam;
}

/// The four-arc cycle (0,3),(2,5),(4,7),(6,1) on 8 slots.
inline ArcFamily cycleFour() {
    return ArcFamily{8, {{0, 3}, {2, 5}, {4, 7}, {6, 1}}};
}

inline ReliabilityInstance cycleFourInstance() {
    return validateInstance(ReliabilityInstance{cycleFour(), {0.0, 0.5, 0.0, 0.5}, {0, 2}}, true);
}

/// s = (0,2), r = (1,4), t = (3,5) on 6 slots; only r joins s and t.
inline ReliabilityInstance chainInstance(double qr) {
    return validateInstance(
        ReliabilityInstance{ArcFamily{6, {{0, 2}, {1, 4}, {3, 5}}}, {0.0, qr, 0.0}, {0, 2}}, true);
}

/// Copy of `inst` with one extra non-target arc that meets nothing, or
/// std::nullopt when every gap between neighboring slots is spanned by an arc.
/// The new arc gets the highest label, so existing labels are unchanged
/// only when it lands after every start; callers compare label-free results.
inline std::optional<ReliabilityInstance> tryAddIsolatedArc(const ReliabilityInstance& inst,
                                                            double q) {
    const ArcFamily& fam = inst.arcs();
    const Position slots = fam.slots;
    for (Position g = slots; g >= 1; --g) {
        // Insertion point between slot g-1 and slot g (mod slots).
        const Position before = g - 1;
        const Position after = g % slots;
        const bool spanned = std::any_of(fam.arcs.begin(), fam.arcs.end(), [&](const Arc& a) {
            return pointInArc(before, a) && pointInArc(after, a);
        });
        if (spanned) continue;

        ReliabilityInstance out = inst;
        ArcFamily& grown = std::get<ArcFamily>(out.family);
        grown.slots = slots + 2;
        for (Arc& a : grown.arcs) {
            if (a.start >= g) a.start += 2;
            if (a.end >= g) a.end += 2;
        }
        grown.arcs.push_back(Arc{g, g + 1});
        out.q.push_back(q);
        return validateInstance(std::move(out), false);
    }
    return std::nullopt;
}

inline ReliabilityInstance withIsolatedArc(const ReliabilityInstance& inst, double q) {
    auto out = tryAddIsolatedArc(inst, q);
    if (!out) throw std::logic_error("no free gap for an isolated arc");
    return *out;
}

}  // namespace ktr::testing
