#pragma once

#include <complex>
#include <string>
#include <vector>

#include "cft/fraction.hpp"
#include "cft/fusion_ring.hpp"

namespace cft {

struct KacLabel {
    int p = 1;  // 1..m-1
    int q = 1;  // 1..m
};

// Modular data for one chiral algebra: unitary symmetric S, diagonal T,
// central charge and exact conformal weights. Both chiral copies coincide
// for every model built here.
struct ModularData {
    std::string model;            // "su2-level-k" or "minimal-m"
    int parameter = 0;            // k or m
    std::vector<std::string> labels;
    std::vector<KacLabel> kac;    // minimal models only
    std::vector<std::vector<std::complex<double>>> S;
    std::vector<std::complex<double>> T;
    Fraction c;                   // central charge
    std::vector<Fraction> h;      // conformal weights

    int size() const { return static_cast<int>(labels.size()); }

    struct Validation {
        double unitarity = 0.0;      // max |SS^dag - I|
        double symmetry = 0.0;       // max |S - S^T|
        double st_cubed = 0.0;       // max |(ST)^3 - S^2|
        double s4 = 0.0;             // max |S^4 - I|
        bool s2_permutation = false; // S^2 is a 0/1 permutation matrix
        bool s_row0_positive = false;
        bool ok(double tol = 1e-9) const {
            return unitarity < tol && symmetry < tol && st_cubed < tol && s4 < tol && s2_permutation &&
                   s_row0_positive;
        }
    };
    Validation validate() const;
};

// SU(2) level k WZW data, labels 0..k (twice the spin). 1 <= k <= 64.
ModularData su2k_data(int k);

// Virasoro minimal model M(m, m+1), canonical Kac labels. 3 <= m <= 32.
ModularData minimal_model_data(int m);

// Verlinde fusion ring from the S matrix; enforces integrality within tol.
// Serial reference and the OpenMP kernel must agree bit-for-bit.
FusionRing verlinde_fusion(const ModularData& data, double tol = 1e-6);
FusionRing verlinde_fusion_serial(const ModularData& data, double tol = 1e-6);

// Largest |N - round(N)| over all Verlinde coefficients, plus the most
// negative rounded coefficient (should be 0). Streams without materializing
// the table, so it is usable at m = 32.
struct VerlindeResidual {
    double max_residual = 0.0;
    double min_value = 0.0;
};
VerlindeResidual verlinde_residual(const ModularData& data);

// exp(2 pi i (h_nu - h_lambda - h_mu)) for an admissible channel.
std::complex<double> monodromy_phase(const ModularData& data, const FusionRing& ring, int lambda, int mu, int nu);

}  // namespace cft
