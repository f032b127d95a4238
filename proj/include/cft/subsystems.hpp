#pragma once

#include <vector>

#include "cft/fusion_ring.hpp"

namespace cft {

struct Subsystem {
    std::vector<int> members;  // sorted label indices of the parent ring
    FusionRing induced;
    bool is_trivial = false;  // members == {unit}
    bool is_full = false;
};

// Smallest fusion-closed, dual-closed, unit-containing superset.
std::vector<int> fusion_closure(const FusionRing& ring, std::vector<int> seed);

// All subsystems (including the trivial and the full one, flagged), in
// canonical order: sorted by member count then lexicographically by member
// list. Enumeration walks the closed-set lattice from {unit} upward, so the
// cost scales with the number of subsystems rather than 2^n. The public
// operation contract caps the ring size; callers inside the library may
// lift the cap (max_labels <= 0) for the large catalog systems.
std::vector<Subsystem> enumerate_subsystems(const FusionRing& ring, int max_labels = 64);

FusionRing induced_ring(const FusionRing& ring, const std::vector<int>& members);

}  // namespace cft
