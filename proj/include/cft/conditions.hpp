#pragma once

#include <string>
#include <vector>

#include "cft/fusion_ring.hpp"

namespace cft {

enum class TriState { Holds, Fails, NotEvaluated };

const char* to_string(TriState t);

// Outcome of testing a self-conjugate generator sigma against the
// combinatorial conditions of the cohomology-vanishing theorem. Condition 3
// (nonvanishing connection cells) lives with the connection machinery and is
// filled in by callers that have cells available.
struct ConditionReport {
    int sigma = -1;
    TriState cond1 = TriState::NotEvaluated;   // multiplication by sigma multiplicity-free
    TriState cond2a = TriState::NotEvaluated;  // sigma < sigma^2
    TriState cond2b = TriState::NotEvaluated;  // Z/2 grading with sigma odd
    TriState cond3 = TriState::NotEvaluated;
    TriState cond4 = TriState::NotEvaluated;   // Bratteli diamond condition
    bool sigma_generates = false;
    std::vector<std::string> witnesses;

    bool vanishing_hypotheses() const {
        return cond1 == TriState::Holds && (cond2a == TriState::Holds || cond2b == TriState::Holds) &&
               cond3 == TriState::Holds && cond4 == TriState::Holds && sigma_generates;
    }
};

// Level sets L_n = { lambda : lambda < sigma^n } with n = 0..depth.
std::vector<std::vector<int>> bratteli_levels(const FusionRing& ring, int sigma, int depth);

// Condition 4: whenever nu1, nu2 in L_n share a successor in L_{n+1}, they
// share a predecessor in L_{n-1}. depth <= 0 means labels + 2.
bool bratteli_condition4(const FusionRing& ring, int sigma, int depth, std::vector<std::string>* witnesses = nullptr);

// Conditions 1, 2a, 2b, 4 for the given sigma (must be self-conjugate).
ConditionReport generator_analysis(const FusionRing& ring, int sigma);

// smallest k >= 1 with lambda < sigma^k, or -1 if sigma does not reach it
int generator_exponent(const FusionRing& ring, int sigma, int lambda);

}  // namespace cft
