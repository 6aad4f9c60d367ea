#pragma once

#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <string_view>
#include <vector>

#include "ktr/model.hpp"

namespace ktr {

/// Disjoint-set forest with path halving and union by size.
class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n), size_(n, 1) {
        std::iota(parent_.begin(), parent_.end(), std::size_t{0});
    }

    std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (size_[a] < size_[b]) std::swap(a, b);
        parent_[b] = a;
        size_[a] += size_[b];
    }

    bool connected(std::size_t a, std::size_t b) { return find(a) == find(b); }

private:
    std::vector<std::size_t> parent_;
    std::vector<std::size_t> size_;
};

/// Largest number of non-target elements the exhaustive solvers will enumerate.
inline constexpr std::size_t kBruteForceLimit = 25;

/// True iff every target lies in one component of the subgraph induced by
/// the alive vertices. Targets are expected to be alive.
bool connectedTargets(const AdjacencyView& adj, const std::vector<bool>& alive,
                      std::span<const Label> targets);

/// Exact reliability by summing over all 2^(n-k) operating subsets of the
/// non-targets. Works for arc and chord families; throws TooLarge past
/// kBruteForceLimit non-targets.
double ktrBrute(const ReliabilityInstance& inst);

struct MonteCarloEstimate {
    double estimate = 0.0;
    double standardError = 0.0;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
};

/// Name of the pseudo-random generator behind ktrMonteCarlo.
inline constexpr std::string_view kMonteCarloGenerator = "mt19937_64";

/// Crude Monte Carlo. Bit-identical output for identical (inst, samples, seed).
MonteCarloEstimate ktrMonteCarlo(const ReliabilityInstance& inst, std::uint64_t samples,
                                 std::uint64_t seed);

}  // namespace ktr
