#pragma once

#include <cstdint>

#include "ktr/model.hpp"

namespace ktr {

struct GeneratorOptions {
    Label n = 0;
    Label k = 2;
    /// Upper bound D on the number of successors each arc reaches.
    Label reach = 1;
    std::uint64_t seed = 0;
    /// Lower bound on the reach. With 0 an arc may end before the next
    /// start, which puts a deterministic cut into its region.
    Label minReach = 1;
};

/// Random proper circular-arc instance on P = 2n slots.
///
/// Arc r starts before arc r + 1 and covers the starts of the next d_r
/// arcs, d_r in [minReach, min(reach, n - 1)]. The reaches satisfy
/// d_{r+1} >= d_r - 1 cyclically, so end order follows start order and no
/// arc contains another. Targets are a uniform k-subset with q = 0; the
/// other arcs get q uniform in [0, 1). Deterministic per options.
ReliabilityInstance generateInstance(const GeneratorOptions& options);

}  // namespace ktr
