#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace cft {

// A fusion ring: finitely many labels with nonnegative integer structure
// constants N[a][b][c], a distinguished unit, an involutive conjugation and
// (once computed) Perron-Frobenius quantum dimensions.
class FusionRing {
public:
    FusionRing() = default;
    FusionRing(std::vector<std::string> labels, int unit, std::vector<int> dual,
               std::vector<std::int32_t> fusion_table);

    int size() const { return n_; }
    int unit() const { return unit_; }
    int dual(int a) const { return dual_[a]; }
    const std::vector<int>& duals() const { return dual_; }
    const std::string& label(int a) const { return labels_[a]; }
    const std::vector<std::string>& labels() const { return labels_; }

    std::int32_t N(int a, int b, int c) const { return table_[(static_cast<std::size_t>(a) * n_ + b) * n_ + c]; }

    // all c with N(a,b,c) > 0
    std::vector<int> product(int a, int b) const;

    bool commutative() const;

    // Perron-Frobenius dimensions, normalized d[unit] = 1. Computed by power
    // iteration on the stacked fusion matrices (tol 1e-12, <= 1e5 sweeps) and
    // cached. Throws if the fusion graph is not irreducible.
    const std::vector<double>& dims() const;
    bool dims_computed() const { return !dims_.empty(); }
    void set_dims(std::vector<double> d) { dims_ = std::move(d); }

    double global_index() const;  // w = sum d_a^2
    double mu_index() const { return global_index(); }

    struct AxiomReport {
        bool ok = true;
        std::string violation;  // empty when ok
    };
    AxiomReport check_axioms(double tol = 1e-9) const;

    nlohmann::json to_json() const;
    static FusionRing from_json(const nlohmann::json& j);

    bool same_table(const FusionRing& other) const;

private:
    int n_ = 0;
    int unit_ = 0;
    std::vector<std::string> labels_;
    std::vector<int> dual_;
    std::vector<std::int32_t> table_;
    mutable std::vector<double> dims_;
};

// Convenience builder used by tests and the catalog: fusion given as a
// function of (a,b,c).
FusionRing make_ring(const std::vector<std::string>& labels, int unit, const std::vector<int>& dual,
                     const std::function<int(int, int, int)>& N);

}  // namespace cft
