#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace ktr {

/// Slot index on a circle with P slots, increasing clockwise.
using Position = std::int64_t;

/// Index of an arc or chord inside its family.
using Label = std::int32_t;

/// Arc covering the slots from `start` clockwise to `end`, both inclusive.
struct Arc {
    Position start = 0;
    Position end = 0;

    friend bool operator==(const Arc&, const Arc&) = default;
};

/// Chord between two slots; the endpoint order carries no meaning.
struct Chord {
    Position p1 = 0;
    Position p2 = 0;

    friend bool operator==(const Chord&, const Chord&) = default;
};

struct ArcFamily {
    Position slots = 0;
    std::vector<Arc> arcs;

    Label size() const { return static_cast<Label>(arcs.size()); }
    friend bool operator==(const ArcFamily&, const ArcFamily&) = default;
};

struct ChordFamily {
    Position slots = 0;
    std::vector<Chord> chords;

    Label size() const { return static_cast<Label>(chords.size()); }
    friend bool operator==(const ChordFamily&, const ChordFamily&) = default;
};

/// Closed neighborhoods: entry r lists r itself and every element meeting r, ascending.
using Neighborhoods = std::vector<std::vector<Label>>;

bool pointInArc(Position p, const Arc& a);
bool arcsIntersect(const Arc& a, const Arc& b);

/// True iff b is a subset of a. Two arcs that together cover the whole
/// circle, each holding both endpoints of the other, do not contain each other.
/// An arc over every slot therefore does not contain an arc that covers
/// both of its endpoints.
bool arcContains(const Arc& a, const Arc& b);

bool chordsIntersect(const Chord& c, const Chord& d);

/// True iff no arc of the family contains another.
///
/// Runs in O(n log n): after sorting by start, a family has a containing
/// pair iff some arc contains its clockwise successor.
bool checkProper(const ArcFamily& fam);

/// Throws ValidationError when positions fall outside [0, slots), an arc or
/// chord is degenerate, or two endpoints share a slot.
void checkEndpoints(const ArcFamily& fam);
void checkEndpoints(const ChordFamily& fam);

struct Labeling {
    ArcFamily family;
    /// permutation[fileIndex] = label.
    std::vector<Label> permutation;
};

/// Orders arcs clockwise by start position, beginning at slot 0.
Labeling labelArcs(const ArcFamily& fam);

/// True iff arc starts are strictly increasing, i.e. labelArcs is the identity.
bool isLabeled(const ArcFamily& fam);

/// Requires a labeled family. Runs in O(n log n + m).
Neighborhoods closedNeighborhoods(const ArcFamily& fam);

/// Quadratic pairwise test; circle graphs carry no order to exploit.
Neighborhoods closedNeighborhoods(const ChordFamily& fam);

/// Shifts every position by `offset` modulo the slot count.
ArcFamily rotate(const ArcFamily& fam, Position offset);
ChordFamily rotate(const ChordFamily& fam, Position offset);

}  // namespace ktr
