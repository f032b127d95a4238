#include "cft/conditions.hpp"

#include <stdexcept>

#include "cft/grading.hpp"

namespace cft {

const char* to_string(TriState t) {
    switch (t) {
        case TriState::Holds: return "holds";
        case TriState::Fails: return "fails";
        default: return "not-evaluated";
    }
}

std::vector<std::vector<int>> bratteli_levels(const FusionRing& ring, int sigma, int depth) {
    int n = ring.size();
    std::vector<std::vector<int>> levels;
    std::vector<long> v(n, 0);
    v[ring.unit()] = 1;
    levels.push_back({ring.unit()});
    for (int step = 1; step <= depth; ++step) {
        std::vector<long> w(n, 0);
        bool overflow = false;
        for (int a = 0; a < n; ++a) {
            if (!v[a]) continue;
            for (int c = 0; c < n; ++c) {
                std::int32_t m = ring.N(sigma, a, c);
                if (m) {
                    w[c] += m * v[a];
                    if (w[c] > (1L << 56)) overflow = true;
                }
            }
        }
        if (overflow)
            for (auto& x : w)
                if (x > 1) x = 1;  // only supports matter from here on
        std::vector<int> lvl;
        for (int c = 0; c < n; ++c)
            if (w[c]) lvl.push_back(c);
        levels.push_back(lvl);
        v = std::move(w);
    }
    return levels;
}

bool bratteli_condition4(const FusionRing& ring, int sigma, int depth, std::vector<std::string>* witnesses) {
    if (depth <= 0) depth = ring.size() + 2;
    auto levels = bratteli_levels(ring, sigma, depth + 1);
    bool ok = true;
    for (int nstep = 1; nstep <= depth; ++nstep) {
        const auto& Ln = levels[nstep];
        const auto& Lprev = levels[nstep - 1];
        for (std::size_t i = 0; i < Ln.size(); ++i)
            for (std::size_t j = i + 1; j < Ln.size(); ++j) {
                int nu1 = Ln[i], nu2 = Ln[j];
                // shared successor?
                bool share_succ = false;
                for (int lam = 0; lam < ring.size() && !share_succ; ++lam)
                    if (ring.N(sigma, nu1, lam) > 0 && ring.N(sigma, nu2, lam) > 0) share_succ = true;
                if (!share_succ) continue;
                bool share_pred = false;
                for (int mu : Lprev)
                    if (ring.N(sigma, mu, nu1) > 0 && ring.N(sigma, mu, nu2) > 0) {
                        share_pred = true;
                        break;
                    }
                if (!share_pred) {
                    ok = false;
                    if (witnesses)
                        witnesses->push_back("level " + std::to_string(nstep) + ": " + ring.label(nu1) + ", " +
                                             ring.label(nu2) + " share a successor but no predecessor");
                }
            }
    }
    return ok;
}

int generator_exponent(const FusionRing& ring, int sigma, int lambda) {
    auto levels = bratteli_levels(ring, sigma, 2 * ring.size() + 2);
    for (std::size_t k = 1; k < levels.size(); ++k)
        for (int x : levels[k])
            if (x == lambda) return static_cast<int>(k);
    return -1;
}

ConditionReport generator_analysis(const FusionRing& ring, int sigma) {
    if (ring.dual(sigma) != sigma)
        throw std::invalid_argument("generator_analysis: sigma = '" + ring.label(sigma) + "' is not self-conjugate");
    ConditionReport rep;
    rep.sigma = sigma;

    // does sigma generate?
    auto closure_levels = bratteli_levels(ring, sigma, 2 * ring.size() + 2);
    std::vector<char> reached(ring.size(), 0);
    for (const auto& lvl : closure_levels)
        for (int x : lvl) reached[x] = 1;
    rep.sigma_generates = true;
    for (int a = 0; a < ring.size(); ++a)
        if (!reached[a]) {
            rep.sigma_generates = false;
            rep.witnesses.push_back("label " + ring.label(a) + " not reached by any power of sigma");
        }

    // condition 1: no multiplicities
    rep.cond1 = TriState::Holds;
    for (int a = 0; a < ring.size() && rep.cond1 == TriState::Holds; ++a)
        for (int b = 0; b < ring.size(); ++b)
            if (ring.N(a, sigma, b) > 1 || ring.N(sigma, a, b) > 1) {
                rep.cond1 = TriState::Fails;
                rep.witnesses.push_back("multiplicity " + std::to_string(ring.N(a, sigma, b)) + " in " +
                                        ring.label(a) + " x sigma -> " + ring.label(b));
                break;
            }

    rep.cond2a = ring.N(sigma, sigma, sigma) >= 1 ? TriState::Holds : TriState::Fails;

    rep.cond2b = TriState::Fails;
    for (const auto& g : all_gradings(ring))
        if (g[sigma] == 1) {
            rep.cond2b = TriState::Holds;
            break;
        }

    std::vector<std::string> w4;
    rep.cond4 = bratteli_condition4(ring, sigma, 0, &w4) ? TriState::Holds : TriState::Fails;
    for (auto& w : w4) rep.witnesses.push_back(std::move(w));
    return rep;
}

}  // namespace cft
