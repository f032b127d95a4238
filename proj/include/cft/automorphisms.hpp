#pragma once

#include <vector>

#include "cft/fusion_ring.hpp"

namespace cft {

// All label permutations pi with pi(unit) = unit, pi . dual = dual . pi and
// N(pi a, pi b, pi c) = N(a,b,c), in lexicographic order (identity first).
// The search prunes on quantum dimensions.
std::vector<std::vector<int>> fusion_automorphisms(const FusionRing& ring);

bool is_fusion_automorphism(const FusionRing& ring, const std::vector<int>& pi);

}  // namespace cft
