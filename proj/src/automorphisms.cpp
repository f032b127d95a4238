#include "cft/automorphisms.hpp"

#include <algorithm>
#include <cmath>

namespace cft {

bool is_fusion_automorphism(const FusionRing& ring, const std::vector<int>& pi) {
    int n = ring.size();
    if (static_cast<int>(pi.size()) != n) return false;
    if (pi[ring.unit()] != ring.unit()) return false;
    for (int a = 0; a < n; ++a)
        if (pi[ring.dual(a)] != ring.dual(pi[a])) return false;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (ring.N(a, b, c) != ring.N(pi[a], pi[b], pi[c])) return false;
    return true;
}

namespace {

struct AutSearch {
    const FusionRing& ring;
    int n;
    const std::vector<double>& d;
    std::vector<int> pi;
    std::vector<char> used;
    std::vector<std::vector<int>>& out;

    // partial consistency: every fully-mapped triple must match
    bool consistent(int a) const {
        for (int x = 0; x <= a; ++x)
            for (int y = 0; y <= a; ++y)
                for (int z = 0; z <= a; ++z)
                    if (ring.N(x, y, z) != ring.N(pi[x], pi[y], pi[z])) return false;
        return true;
    }

    void run(int a) {
        if (a == n) {
            out.push_back(pi);
            return;
        }
        if (pi[a] >= 0) {  // forced earlier (unit or dual partner)
            run(a + 1);
            return;
        }
        for (int img = 0; img < n; ++img) {
            if (used[img]) continue;
            if (std::abs(d[img] - d[a]) > 1e-9) continue;
            int ad = ring.dual(a), imgd = ring.dual(img);
            bool dual_clash = false;
            if (pi[ad] >= 0 && pi[ad] != imgd) dual_clash = true;
            if (pi[ad] < 0 && used[imgd] && imgd != img) dual_clash = true;
            if (dual_clash) continue;
            pi[a] = img;
            used[img] = 1;
            int set_dual = 0;
            if (pi[ad] < 0 && ad != a) {
                pi[ad] = imgd;
                used[imgd] = 1;
                set_dual = 1;
            }
            // cheap partial check only over mapped prefix
            bool ok = true;
            for (int x = 0; x <= a && ok; ++x)
                for (int y = 0; y <= a && ok; ++y) {
                    if (pi[x] < 0 || pi[y] < 0) continue;
                    for (int z = 0; z <= a; ++z) {
                        if (pi[z] < 0) continue;
                        if (ring.N(x, y, z) != ring.N(pi[x], pi[y], pi[z])) {
                            ok = false;
                            break;
                        }
                    }
                }
            if (ok) run(a + 1);
            pi[a] = -1;
            used[img] = 0;
            if (set_dual) {
                pi[ad] = -1;
                used[imgd] = 0;
            }
        }
    }
};

}  // namespace

std::vector<std::vector<int>> fusion_automorphisms(const FusionRing& ring) {
    int n = ring.size();
    std::vector<std::vector<int>> out;
    std::vector<int> pi(n, -1);
    std::vector<char> used(n, 0);
    pi[ring.unit()] = ring.unit();
    used[ring.unit()] = 1;
    AutSearch s{ring, n, ring.dims(), pi, used, out};
    s.pi = pi;
    s.used = used;
    s.run(0);
    // filter with the full exact predicate, order canonically
    std::vector<std::vector<int>> checked;
    for (auto& p : out)
        if (is_fusion_automorphism(ring, p)) checked.push_back(p);
    std::sort(checked.begin(), checked.end());
    checked.erase(std::unique(checked.begin(), checked.end()), checked.end());
    return checked;
}

}  // namespace cft
