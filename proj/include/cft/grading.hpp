#pragma once

#include <optional>
#include <vector>

#include "cft/fusion_ring.hpp"

namespace cft {

struct GradedSystem {
    const FusionRing* ring = nullptr;
    std::vector<int> grade;  // 0/1 per label

    bool valid() const;
};

// Z/2 gradings are solutions of a GF(2) linear system: g(c) = g(a)+g(b) for
// every admissible channel, g(unit) = 0. Returns the grading with at least
// one odd label whose odd set has the lexicographically least bitset, or
// nullopt if only the trivial grading exists.
std::optional<GradedSystem> detect_grading(const FusionRing& ring);

// All Z/2 gradings (including the trivial one), as grade vectors.
std::vector<std::vector<int>> all_gradings(const FusionRing& ring);

}  // namespace cft
