#include "ktr/geometry.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "ktr/errors.hpp"

namespace ktr {

namespace {

/// Strictly inside the clockwise open arc from `from` to `to`.
bool strictlyBetween(Position p, Position from, Position to) {
    if (from < to) return from < p && p < to;
    return p > from || p < to;
}

Position wrap(Position p, Position slots) {
    Position r = p % slots;
    return r < 0 ? r + slots : r;
}

void checkSlot(Position p, Position slots, const char* what) {
    if (p < 0 || p >= slots) {
        throw ValidationError(std::string(what) + " position " + std::to_string(p) +
                              " outside [0, " + std::to_string(slots) + ")");
    }
}

void checkDistinct(std::vector<Position> endpoints) {
    std::sort(endpoints.begin(), endpoints.end());
    auto dup = std::adjacent_find(endpoints.begin(), endpoints.end());
    if (dup != endpoints.end()) {
        throw ValidationError("duplicate endpoint at position " + std::to_string(*dup));
    }
}

void finishNeighborhoods(Neighborhoods& nbrs) {
    for (Label r = 0; r < static_cast<Label>(nbrs.size()); ++r) {
        auto& list = nbrs[r];
        list.push_back(r);
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
    }
}

}  // namespace

bool pointInArc(Position p, const Arc& a) {
    if (a.start <= a.end) return a.start <= p && p <= a.end;
    return p >= a.start || p <= a.end;
}

bool arcsIntersect(const Arc& a, const Arc& b) {
    return pointInArc(b.start, a) || pointInArc(a.start, b);
}

bool arcContains(const Arc& a, const Arc& b) {
    return pointInArc(b.start, a) && pointInArc(b.end, a) &&
           !(pointInArc(a.start, b) && pointInArc(a.end, b));
}

bool chordsIntersect(const Chord& c, const Chord& d) {
    return strictlyBetween(d.p1, c.p1, c.p2) != strictlyBetween(d.p2, c.p1, c.p2);
}

bool checkProper(const ArcFamily& fam) {
    const auto n = fam.arcs.size();
    if (n < 2) return true;
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        return fam.arcs[x].start < fam.arcs[y].start;
    });
    for (std::size_t i = 0; i < n; ++i) {
        const Arc& a = fam.arcs[order[i]];
        const Arc& next = fam.arcs[order[(i + 1) % n]];
        if (arcContains(a, next)) return false;
    }
    return true;
}

void checkEndpoints(const ArcFamily& fam) {
    if (fam.slots <= 0) throw ValidationError("slot count must be positive");
    std::vector<Position> endpoints;
    endpoints.reserve(2 * fam.arcs.size());
    for (const Arc& a : fam.arcs) {
        checkSlot(a.start, fam.slots, "arc");
        checkSlot(a.end, fam.slots, "arc");
        if (a.start == a.end) throw ValidationError("arc with start == end");
        endpoints.push_back(a.start);
        endpoints.push_back(a.end);
    }
    if (fam.slots < static_cast<Position>(endpoints.size())) {
        throw ValidationError("slot count smaller than number of endpoints");
    }
    checkDistinct(std::move(endpoints));
}

void checkEndpoints(const ChordFamily& fam) {
    if (fam.slots <= 0) throw ValidationError("slot count must be positive");
    std::vector<Position> endpoints;
    endpoints.reserve(2 * fam.chords.size());
    for (const Chord& c : fam.chords) {
        checkSlot(c.p1, fam.slots, "chord");
        checkSlot(c.p2, fam.slots, "chord");
        if (c.p1 == c.p2) throw ValidationError("chord with p1 == p2");
        endpoints.push_back(c.p1);
        endpoints.push_back(c.p2);
    }
    if (fam.slots < static_cast<Position>(endpoints.size())) {
        throw ValidationError("slot count smaller than number of endpoints");
    }
    checkDistinct(std::move(endpoints));
}

Labeling labelArcs(const ArcFamily& fam) {
    const auto n = fam.arcs.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        return fam.arcs[x].start < fam.arcs[y].start;
    });

    Labeling out;
    out.family.slots = fam.slots;
    out.family.arcs.reserve(n);
    out.permutation.resize(n);
    for (std::size_t label = 0; label < n; ++label) {
        out.family.arcs.push_back(fam.arcs[order[label]]);
        out.permutation[order[label]] = static_cast<Label>(label);
    }
    return out;
}

bool isLabeled(const ArcFamily& fam) {
    return std::adjacent_find(fam.arcs.begin(), fam.arcs.end(), [](const Arc& a, const Arc& b) {
               return a.start >= b.start;
           }) == fam.arcs.end();
}

Neighborhoods closedNeighborhoods(const ArcFamily& fam) {
    if (!isLabeled(fam)) throw ValidationError("arc family must be labeled by start position");
    const Label n = fam.size();
    std::vector<Position> starts(n);
    for (Label r = 0; r < n; ++r) starts[r] = fam.arcs[r].start;

    // Labels whose start lies in (lo, hi], as a half-open label range.
    auto startsIn = [&](Position lo, Position hi) {
        auto first = std::upper_bound(starts.begin(), starts.end(), lo);
        auto last = std::upper_bound(starts.begin(), starts.end(), hi);
        return std::pair<Label, Label>(static_cast<Label>(first - starts.begin()),
                                       static_cast<Label>(last - starts.begin()));
    };

    Neighborhoods nbrs(n);
    auto link = [&](Label a, std::pair<Label, Label> range) {
        for (Label b = range.first; b < range.second; ++b) {
            nbrs[a].push_back(b);
            nbrs[b].push_back(a);
        }
    };
    for (Label a = 0; a < n; ++a) {
        const Arc& arc = fam.arcs[a];
        if (arc.start <= arc.end) {
            link(a, startsIn(arc.start, arc.end));
        } else {
            link(a, startsIn(arc.start, fam.slots));
            link(a, startsIn(-1, arc.end));
        }
    }
    finishNeighborhoods(nbrs);
    return nbrs;
}

Neighborhoods closedNeighborhoods(const ChordFamily& fam) {
    const Label n = fam.size();
    Neighborhoods nbrs(n);
    for (Label a = 0; a < n; ++a) {
        for (Label b = a + 1; b < n; ++b) {
            if (chordsIntersect(fam.chords[a], fam.chords[b])) {
                nbrs[a].push_back(b);
                nbrs[b].push_back(a);
            }
        }
    }
    finishNeighborhoods(nbrs);
    return nbrs;
}

ArcFamily rotate(const ArcFamily& fam, Position offset) {
    ArcFamily out = fam;
    for (Arc& a : out.arcs) {
        a.start = wrap(a.start + offset, fam.slots);
        a.end = wrap(a.end + offset, fam.slots);
    }
    return out;
}

ChordFamily rotate(const ChordFamily& fam, Position offset) {
    ChordFamily out = fam;
    for (Chord& c : out.chords) {
        c.p1 = wrap(c.p1 + offset, fam.slots);
        c.p2 = wrap(c.p2 + offset, fam.slots);
    }
    return out;
}

}  // namespace ktr
