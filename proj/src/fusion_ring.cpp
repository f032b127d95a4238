#include "cft/fusion_ring.hpp"

#include <cmath>
#include <queue>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace cft {

FusionRing::FusionRing(std::vector<std::string> labels, int unit, std::vector<int> dual,
                       std::vector<std::int32_t> fusion_table)
    : n_(static_cast<int>(labels.size())),
      unit_(unit),
      labels_(std::move(labels)),
      dual_(std::move(dual)),
      table_(std::move(fusion_table)) {
    if (static_cast<std::size_t>(n_) * n_ * n_ != table_.size())
        throw std::invalid_argument("FusionRing: table size does not match label count");
    if (dual_.size() != static_cast<std::size_t>(n_))
        throw std::invalid_argument("FusionRing: dual size does not match label count");
    if (unit_ < 0 || unit_ >= n_) throw std::invalid_argument("FusionRing: unit out of range");
}

std::vector<int> FusionRing::product(int a, int b) const {
    std::vector<int> out;
    for (int c = 0; c < n_; ++c)
        if (N(a, b, c) > 0) out.push_back(c);
    return out;
}

bool FusionRing::commutative() const {
    for (int a = 0; a < n_; ++a)
        for (int b = a + 1; b < n_; ++b)
            for (int c = 0; c < n_; ++c)
                if (N(a, b, c) != N(b, a, c)) return false;
    return true;
}

const std::vector<double>& FusionRing::dims() const {
    if (!dims_.empty()) return dims_;
    // connectivity of the fusion graph (edges a->c whenever some b links them)
    std::vector<int> seen(n_, 0);
    std::queue<int> q;
    q.push(unit_);
    seen[unit_] = 1;
    while (!q.empty()) {
        int a = q.front();
        q.pop();
        for (int b = 0; b < n_; ++b)
            for (int c = 0; c < n_; ++c)
                if (N(a, b, c) > 0 && !seen[c]) {
                    seen[c] = 1;
                    q.push(c);
                }
    }
    for (int a = 0; a < n_; ++a)
        if (!seen[a])
            throw std::runtime_error("quantum_dimensions: fusion graph not irreducible, label '" + labels_[a] +
                                     "' unreachable from the unit");

    // power iteration on M v = sum_ab N[a][b][c] v_a-ish stacked operator:
    // we iterate v_c <- sum_{a,b} N(a,b,c) v_a v_b / v_unit style updates via
    // the PF eigenvector of sum_a N_a (nonnegative irreducible).
    std::vector<double> v(n_, 1.0), w(n_, 0.0);
    const int max_iter = 100000;
    const double tol = 1e-12;
    for (int it = 0; it < max_iter; ++it) {
        for (int c = 0; c < n_; ++c) w[c] = 0.0;
        for (int a = 0; a < n_; ++a)
            for (int b = 0; b < n_; ++b) {
                double va = v[a];
                if (va == 0.0) continue;
                const std::int32_t* row = &table_[(static_cast<std::size_t>(a) * n_ + b) * n_];
                for (int c = 0; c < n_; ++c)
                    if (row[c]) w[c] += row[c] * va;
            }
        double norm = 0.0;
        for (int c = 0; c < n_; ++c) norm += w[c] * w[c];
        norm = std::sqrt(norm);
        double diff = 0.0;
        for (int c = 0; c < n_; ++c) {
            w[c] /= norm;
            diff = std::max(diff, std::abs(w[c] - v[c]));
        }
        v = w;
        if (diff < tol) break;
    }
    double vu = v[unit_];
    if (vu <= 0) throw std::runtime_error("quantum_dimensions: power iteration degenerate at unit");
    dims_.resize(n_);
    for (int a = 0; a < n_; ++a) dims_[a] = v[a] / vu;
    return dims_;
}

double FusionRing::global_index() const {
    const auto& d = dims();
    double w = 0.0;
    for (double x : d) w += x * x;
    return w;
}

FusionRing::AxiomReport FusionRing::check_axioms(double tol) const {
    AxiomReport r;
    auto fail = [&](std::string msg) {
        r.ok = false;
        r.violation = std::move(msg);
        return r;
    };
    // unit row
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b) {
            int expect = (a == b) ? 1 : 0;
            if (N(unit_, a, b) != expect || N(a, unit_, b) != expect)
                return fail("unit axiom at (" + std::to_string(a) + "," + std::to_string(b) + ")");
        }
    // dual involution and unit
    if (dual_[unit_] != unit_) return fail("dual(unit) != unit");
    for (int a = 0; a < n_; ++a) {
        if (dual_[a] < 0 || dual_[a] >= n_ || dual_[dual_[a]] != a)
            return fail("dual not involutive at " + std::to_string(a));
        for (int b = 0; b < n_; ++b) {
            int expect = (b == dual_[a]) ? 1 : 0;
            if (N(a, b, unit_) != expect)
                return fail("conjugation axiom N(a,b,unit) at (" + std::to_string(a) + "," + std::to_string(b) + ")");
        }
    }
    // Frobenius symmetry N(a,b,c) = N(dual a, c, b) = N(c, dual b, a)
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b)
            for (int c = 0; c < n_; ++c) {
                std::int32_t x = N(a, b, c);
                if (x != N(dual_[a], c, b) || x != N(c, dual_[b], a))
                    return fail("Frobenius symmetry at (" + std::to_string(a) + "," + std::to_string(b) + "," +
                                std::to_string(c) + ")");
            }
    // associativity, exploiting sparsity of the product supports
    {
        std::vector<std::vector<int>> supp(static_cast<std::size_t>(n_) * n_);
        for (int a = 0; a < n_; ++a)
            for (int b = 0; b < n_; ++b)
                for (int c = 0; c < n_; ++c)
                    if (N(a, b, c)) supp[static_cast<std::size_t>(a) * n_ + b].push_back(c);

        int bad_a = -1, bad_b = -1, bad_c = -1, bad_d = -1;
#pragma omp parallel
        {
            std::vector<long> lhs(static_cast<std::size_t>(n_) * n_), rhs(lhs.size());
#pragma omp for schedule(dynamic)
            for (int a = 0; a < n_; ++a) {
                if (bad_a >= 0) continue;
                for (int b = 0; b < n_; ++b) {
                    std::fill(lhs.begin(), lhs.end(), 0L);
                    std::fill(rhs.begin(), rhs.end(), 0L);
                    for (int e : supp[static_cast<std::size_t>(a) * n_ + b]) {
                        long w = N(a, b, e);
                        for (int c = 0; c < n_; ++c)
                            for (int d : supp[static_cast<std::size_t>(e) * n_ + c])
                                lhs[static_cast<std::size_t>(c) * n_ + d] += w * N(e, c, d);
                    }
                    for (int c = 0; c < n_; ++c)
                        for (int f : supp[static_cast<std::size_t>(b) * n_ + c]) {
                            long w = N(b, c, f);
                            for (int d : supp[static_cast<std::size_t>(a) * n_ + f])
                                rhs[static_cast<std::size_t>(c) * n_ + d] += w * N(a, f, d);
                        }
                    for (std::size_t i = 0; i < lhs.size(); ++i)
                        if (lhs[i] != rhs[i]) {
#pragma omp critical
                            if (bad_a < 0) {
                                bad_a = a;
                                bad_b = b;
                                bad_c = static_cast<int>(i) / n_;
                                bad_d = static_cast<int>(i) % n_;
                            }
                            break;
                        }
                }
            }
        }
        if (bad_a >= 0)
            return fail("associativity at (" + std::to_string(bad_a) + "," + std::to_string(bad_b) + "," +
                        std::to_string(bad_c) + "," + std::to_string(bad_d) + ")");
    }
    // dimension homomorphism
    const auto& d = dims();
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b) {
            double s = 0.0;
            for (int c = 0; c < n_; ++c) s += N(a, b, c) * d[c];
            if (std::abs(s - d[a] * d[b]) > tol * std::max(1.0, d[a] * d[b]))
                return fail("dimension homomorphism at (" + std::to_string(a) + "," + std::to_string(b) + ")");
        }
    return r;
}

nlohmann::json FusionRing::to_json() const {
    nlohmann::json j;
    j["format"] = "cft.fusion_ring";
    j["version"] = 1;
    j["labels"] = labels_;
    j["unit"] = unit_;
    j["dual"] = dual_;
    nlohmann::json N3 = nlohmann::json::array();
    for (int a = 0; a < n_; ++a) {
        nlohmann::json N2 = nlohmann::json::array();
        for (int b = 0; b < n_; ++b) {
            nlohmann::json row = nlohmann::json::array();
            for (int c = 0; c < n_; ++c) row.push_back(N(a, b, c));
            N2.push_back(std::move(row));
        }
        N3.push_back(std::move(N2));
    }
    j["N"] = std::move(N3);
    if (!dims_.empty()) j["dims"] = dims_;
    return j;
}

FusionRing FusionRing::from_json(const nlohmann::json& j) {
    if (j.value("format", "") != "cft.fusion_ring")
        throw std::invalid_argument("fusion ring json: bad format tag");
    if (j.value("version", 0) != 1) throw std::invalid_argument("fusion ring json: unsupported version");
    std::vector<std::string> labels = j.at("labels").get<std::vector<std::string>>();
    int unit = j.at("unit").get<int>();
    std::vector<int> dual = j.at("dual").get<std::vector<int>>();
    int n = static_cast<int>(labels.size());
    std::vector<std::int32_t> table(static_cast<std::size_t>(n) * n * n);
    const auto& N3 = j.at("N");
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                table[(static_cast<std::size_t>(a) * n + b) * n + c] = N3.at(a).at(b).at(c).get<std::int32_t>();
    FusionRing r(std::move(labels), unit, std::move(dual), std::move(table));
    if (j.contains("dims")) r.set_dims(j.at("dims").get<std::vector<double>>());
    return r;
}

bool FusionRing::same_table(const FusionRing& other) const {
    return n_ == other.n_ && unit_ == other.unit_ && dual_ == other.dual_ && table_ == other.table_;
}

FusionRing make_ring(const std::vector<std::string>& labels, int unit, const std::vector<int>& dual,
                     const std::function<int(int, int, int)>& N) {
    int n = static_cast<int>(labels.size());
    std::vector<std::int32_t> table(static_cast<std::size_t>(n) * n * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                table[(static_cast<std::size_t>(a) * n + b) * n + c] = N(a, b, c);
    return FusionRing(labels, unit, dual, std::move(table));
}

}  // namespace cft
