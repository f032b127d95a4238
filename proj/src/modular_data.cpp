#include "cft/modular_data.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace cft {

namespace {

constexpr double kPi = std::numbers::pi;

std::complex<double> phase_of(const Fraction& f) {
    double a = 2.0 * kPi * f.mod1().value();
    return {std::cos(a), std::sin(a)};
}

}  // namespace

ModularData::Validation ModularData::validate() const {
    Validation v;
    int n = size();
    // SS^dag, S - S^T, S^2
    std::vector<std::vector<std::complex<double>>> s2(n, std::vector<std::complex<double>>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::complex<double> uu = 0, sq = 0;
            for (int k = 0; k < n; ++k) {
                uu += S[i][k] * std::conj(S[j][k]);
                sq += S[i][k] * S[k][j];
            }
            if (i == j) uu -= 1.0;
            v.unitarity = std::max(v.unitarity, std::abs(uu));
            v.symmetry = std::max(v.symmetry, std::abs(S[i][j] - S[j][i]));
            s2[i][j] = sq;
        }
    // S^2 permutation, S^4 = I
    v.s2_permutation = true;
    for (int i = 0; i < n; ++i) {
        int ones = 0;
        for (int j = 0; j < n; ++j) {
            double a = std::abs(s2[i][j]);
            if (a > 1e-9 && std::abs(a - 1.0) > 1e-9) v.s2_permutation = false;
            if (a > 0.5) {
                ++ones;
                if (std::abs(s2[i][j] - 1.0) > 1e-9) v.s2_permutation = false;  // entries must be +1
            }
            std::complex<double> s4 = 0;
            for (int k = 0; k < n; ++k) s4 += s2[i][k] * s2[k][j];
            if (i == j) s4 -= 1.0;
            v.s4 = std::max(v.s4, std::abs(s4));
        }
        if (ones != 1) v.s2_permutation = false;
    }
    // (ST)^3 = S^2, with T diagonal
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::complex<double> acc = 0;
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b) acc += S[i][a] * T[a] * S[a][b] * T[b] * S[b][j] * T[j];
            v.st_cubed = std::max(v.st_cubed, std::abs(acc - s2[i][j]));
        }
    v.s_row0_positive = true;
    for (int j = 0; j < n; ++j)
        if (!(S[0][j].real() > 0.0) || std::abs(S[0][j].imag()) > 1e-12) v.s_row0_positive = false;
    return v;
}

ModularData su2k_data(int k) {
    if (k < 1 || k > 64) throw std::invalid_argument("su2k_data: k out of range [1,64]");
    ModularData d;
    d.model = "su2-level-k";
    d.parameter = k;
    int n = k + 1;
    d.labels.resize(n);
    d.h.resize(n);
    d.c = Fraction(3 * k, k + 2);
    d.S.assign(n, std::vector<std::complex<double>>(n));
    d.T.resize(n);
    double norm = std::sqrt(2.0 / (k + 2));
    for (int a = 0; a < n; ++a) {
        d.labels[a] = std::to_string(a);
        d.h[a] = Fraction(static_cast<std::int64_t>(a) * (a + 2), 4 * (k + 2));
        d.T[a] = phase_of(d.h[a] - d.c / Fraction(24));
        for (int b = 0; b < n; ++b)
            d.S[a][b] = norm * std::sin(kPi * (a + 1.0) * (b + 1.0) / (k + 2));
    }
    return d;
}

ModularData minimal_model_data(int m) {
    if (m < 3 || m > 32) throw std::invalid_argument("minimal_model_data: m out of range [3,32]");
    ModularData d;
    d.model = "minimal-m";
    d.parameter = m;
    d.c = Fraction(1) - Fraction(6, static_cast<std::int64_t>(m) * (m + 1));
    // canonical Kac representatives: of (p,q) ~ (m-p, m+1-q) keep the one
    // with the smaller p; at p = m/2 (m even) the reflection fixes p and the
    // smaller q wins. Equivalent to the p <= ceil((m-1)/2) convention.
    for (int p = 1; p <= m - 1; ++p)
        for (int q = 1; q <= m; ++q) {
            bool canonical = (p < m - p) || (p == m - p && q < m + 1 - q);
            if (!canonical) continue;
            KacLabel kl{p, q};
            d.kac.push_back(kl);
            d.labels.push_back("(" + std::to_string(p) + "," + std::to_string(q) + ")");
            std::int64_t x = static_cast<std::int64_t>(p) * (m + 1) - static_cast<std::int64_t>(q) * m;
            d.h.push_back(Fraction(x * x - 1, 4LL * m * (m + 1)));
        }
    int n = static_cast<int>(d.labels.size());
    if (n != m * (m - 1) / 2) throw std::logic_error("minimal_model_data: label count mismatch");
    // vacuum (1,1) must sit first
    for (int i = 0; i < n; ++i)
        if (d.kac[i].p == 1 && d.kac[i].q == 1) {
            std::swap(d.kac[0], d.kac[i]);
            std::swap(d.labels[0], d.labels[i]);
            std::swap(d.h[0], d.h[i]);
            break;
        }
    d.S.assign(n, std::vector<std::complex<double>>(n));
    d.T.resize(n);
    double norm = 2.0 * std::sqrt(2.0 / (static_cast<double>(m) * (m + 1)));
    for (int i = 0; i < n; ++i) {
        d.T[i] = phase_of(d.h[i] - d.c / Fraction(24));
        auto [p, q] = d.kac[i];
        for (int j = 0; j < n; ++j) {
            auto [r, s] = d.kac[j];
            double sign = ((1 + q * r + p * s) % 2 == 0) ? 1.0 : -1.0;
            d.S[i][j] = norm * sign * std::sin(kPi * (m + 1.0) * p * r / m) * std::sin(kPi * m * q * s / (m + 1.0));
        }
    }
    return d;
}

namespace {

FusionRing verlinde_impl(const ModularData& data, double tol, bool parallel) {
    int n = data.size();
    for (int j = 0; j < n; ++j)
        if (std::abs(data.S[0][j]) < 1e-14)
            throw std::runtime_error("verlinde_fusion: vanishing S[0][j] at j=" + std::to_string(j));
    std::vector<std::int32_t> table(static_cast<std::size_t>(n) * n * n);
    double worst = 0.0;
    int worst_abc[3] = {0, 0, 0};
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (int a = 0; a < n; ++a) {
        double local_worst = 0.0;
        int local_abc[3] = {0, 0, 0};
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                std::complex<double> acc = 0;
                for (int x = 0; x < n; ++x) acc += data.S[a][x] * data.S[b][x] * std::conj(data.S[c][x]) / data.S[0][x];
                double re = acc.real();
                long r = std::lround(re);
                double resid = std::max(std::abs(re - r), std::abs(acc.imag()));
                if (resid > local_worst) {
                    local_worst = resid;
                    local_abc[0] = a;
                    local_abc[1] = b;
                    local_abc[2] = c;
                }
                table[(static_cast<std::size_t>(a) * n + b) * n + c] = static_cast<std::int32_t>(r < 0 ? 0 : r);
                if (r < 0) local_worst = std::max(local_worst, std::abs(re));  // negative coefficient
            }
#pragma omp critical
        if (local_worst > worst) {
            worst = local_worst;
            worst_abc[0] = local_abc[0];
            worst_abc[1] = local_abc[1];
            worst_abc[2] = local_abc[2];
        }
    }
    if (worst > tol)
        throw std::runtime_error("verlinde_fusion: integrality residual " + std::to_string(worst) + " at (" +
                                 std::to_string(worst_abc[0]) + "," + std::to_string(worst_abc[1]) + "," +
                                 std::to_string(worst_abc[2]) + "); wrong S convention?");
    // charge conjugation from S^2
    std::vector<int> dual(n);
    for (int i = 0; i < n; ++i) {
        int best = -1;
        for (int j = 0; j < n; ++j) {
            std::complex<double> s2 = 0;
            for (int x = 0; x < n; ++x) s2 += data.S[i][x] * data.S[x][j];
            if (std::abs(s2) > 0.5) best = j;
        }
        if (best < 0) throw std::runtime_error("verlinde_fusion: S^2 is not a permutation");
        dual[i] = best;
    }
    FusionRing ring(data.labels, 0, std::move(dual), std::move(table));
    std::vector<double> dims(n);
    for (int a = 0; a < n; ++a) dims[a] = data.S[a][0].real() / data.S[0][0].real();
    ring.set_dims(std::move(dims));
    return ring;
}

}  // namespace

FusionRing verlinde_fusion(const ModularData& data, double tol) { return verlinde_impl(data, tol, true); }
FusionRing verlinde_fusion_serial(const ModularData& data, double tol) { return verlinde_impl(data, tol, false); }

VerlindeResidual verlinde_residual(const ModularData& data) {
    int n = data.size();
    VerlindeResidual out;
#pragma omp parallel
    {
        VerlindeResidual local;
#pragma omp for schedule(dynamic)
        for (int a = 0; a < n; ++a)
            for (int b = a; b < n; ++b)
                for (int c = 0; c < n; ++c) {
                    std::complex<double> acc = 0;
                    for (int x = 0; x < n; ++x)
                        acc += data.S[a][x] * data.S[b][x] * std::conj(data.S[c][x]) / data.S[0][x];
                    double re = acc.real();
                    double resid = std::max(std::abs(re - std::lround(re)), std::abs(acc.imag()));
                    local.max_residual = std::max(local.max_residual, resid);
                    local.min_value = std::min(local.min_value, re);
                }
#pragma omp critical
        {
            out.max_residual = std::max(out.max_residual, local.max_residual);
            out.min_value = std::min(out.min_value, local.min_value);
        }
    }
    return out;
}

std::complex<double> monodromy_phase(const ModularData& data, const FusionRing& ring, int lambda, int mu, int nu) {
    if (ring.N(lambda, mu, nu) != 1)
        throw std::invalid_argument("monodromy_phase: channel (" + ring.label(lambda) + "," + ring.label(mu) + ";" +
                                    ring.label(nu) + ") not admissible with multiplicity 1");
    return phase_of(data.h[nu] - data.h[lambda] - data.h[mu]);
}

}  // namespace cft
