#include "cft/subsystems.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace cft {

std::vector<int> fusion_closure(const FusionRing& ring, std::vector<int> seed) {
    int n = ring.size();
    std::vector<char> in(n, 0);
    in[ring.unit()] = 1;
    std::vector<int> work{ring.unit()};
    for (int s : seed)
        if (!in[s]) {
            in[s] = 1;
            work.push_back(s);
        }
    // saturate under dual and fusion
    for (std::size_t i = 0; i < work.size(); ++i) {
        int a = work[i];
        int ad = ring.dual(a);
        if (!in[ad]) {
            in[ad] = 1;
            work.push_back(ad);
        }
        for (std::size_t j = 0; j <= i; ++j) {
            int b = work[j];
            for (int c = 0; c < n; ++c)
                if (!in[c] && (ring.N(a, b, c) > 0 || ring.N(b, a, c) > 0)) {
                    in[c] = 1;
                    work.push_back(c);
                }
        }
    }
    std::vector<int> out;
    for (int a = 0; a < n; ++a)
        if (in[a]) out.push_back(a);
    return out;
}

FusionRing induced_ring(const FusionRing& ring, const std::vector<int>& members) {
    int m = static_cast<int>(members.size());
    std::vector<int> pos(ring.size(), -1);
    for (int i = 0; i < m; ++i) pos[members[i]] = i;
    std::vector<std::string> labels(m);
    std::vector<int> dual(m);
    int unit = -1;
    for (int i = 0; i < m; ++i) {
        labels[i] = ring.label(members[i]);
        dual[i] = pos[ring.dual(members[i])];
        if (dual[i] < 0) throw std::invalid_argument("induced_ring: member set not dual-closed");
        if (members[i] == ring.unit()) unit = i;
    }
    if (unit < 0) throw std::invalid_argument("induced_ring: member set misses the unit");
    std::vector<std::int32_t> table(static_cast<std::size_t>(m) * m * m, 0);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            for (int c = 0; c < ring.size(); ++c) {
                std::int32_t v = ring.N(members[i], members[j], c);
                if (v == 0) continue;
                if (pos[c] < 0) throw std::invalid_argument("induced_ring: member set not fusion-closed");
                table[(static_cast<std::size_t>(i) * m + j) * m + pos[c]] = v;
            }
    FusionRing out(std::move(labels), unit, std::move(dual), std::move(table));
    if (ring.dims_computed()) {
        std::vector<double> d(m);
        for (int i = 0; i < m; ++i) d[i] = ring.dims()[members[i]];
        out.set_dims(std::move(d));
    }
    return out;
}

std::vector<Subsystem> enumerate_subsystems(const FusionRing& ring, int max_labels) {
    if (max_labels > 0 && ring.size() > max_labels)
        throw std::invalid_argument("enumerate_subsystems: ring has " + std::to_string(ring.size()) +
                                    " labels, over the capacity limit of " + std::to_string(max_labels));
    std::set<std::vector<int>> closed;
    std::vector<std::vector<int>> frontier;
    auto base = fusion_closure(ring, {});
    closed.insert(base);
    frontier.push_back(base);
    while (!frontier.empty()) {
        std::vector<std::vector<int>> next;
        for (const auto& s : frontier) {
            std::vector<char> in(ring.size(), 0);
            for (int a : s) in[a] = 1;
            for (int x = 0; x < ring.size(); ++x) {
                if (in[x]) continue;
                auto grown = s;
                grown.push_back(x);
                auto cl = fusion_closure(ring, grown);
                if (closed.insert(cl).second) next.push_back(cl);
            }
        }
        frontier = std::move(next);
    }
    std::vector<Subsystem> out;
    for (const auto& s : closed) {
        Subsystem sub;
        sub.members = s;
        sub.induced = induced_ring(ring, s);
        sub.is_trivial = (s.size() == 1);
        sub.is_full = (static_cast<int>(s.size()) == ring.size());
        out.push_back(std::move(sub));
    }
    std::sort(out.begin(), out.end(), [](const Subsystem& a, const Subsystem& b) {
        if (a.members.size() != b.members.size()) return a.members.size() < b.members.size();
        return a.members < b.members;
    });
    return out;
}

}  // namespace cft
