#include "cft/grading.hpp"

#include <algorithm>

namespace cft {

bool GradedSystem::valid() const {
    if (!ring) return false;
    const auto& r = *ring;
    if (grade[r.unit()] != 0) return false;
    for (int a = 0; a < r.size(); ++a)
        for (int b = 0; b < r.size(); ++b)
            for (int c = 0; c < r.size(); ++c)
                if (r.N(a, b, c) > 0 && ((grade[a] + grade[b]) & 1) != grade[c]) return false;
    return true;
}

// Gaussian elimination over GF(2); variables = labels, one equation
// g(a)+g(b)+g(c) = 0 per admissible channel plus g(unit) = 0.
std::vector<std::vector<int>> all_gradings(const FusionRing& ring) {
    int n = ring.size();
    std::vector<std::vector<char>> rows;  // each row: n coefficient bits
    auto add_row = [&](int a, int b, int c) {
        std::vector<char> r(n, 0);
        r[a] ^= 1;
        r[b] ^= 1;
        r[c] ^= 1;
        if (std::any_of(r.begin(), r.end(), [](char x) { return x != 0; })) rows.push_back(std::move(r));
    };
    {
        std::vector<char> r(n, 0);
        r[ring.unit()] = 1;
        rows.push_back(std::move(r));
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (ring.N(a, b, c) > 0) add_row(a, b, c);

    // eliminate
    std::vector<int> pivot_col;
    std::size_t rank = 0;
    for (int col = 0; col < n && rank < rows.size(); ++col) {
        std::size_t piv = rank;
        while (piv < rows.size() && !rows[piv][col]) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[rank], rows[piv]);
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (i != rank && rows[i][col])
                for (int j = 0; j < n; ++j) rows[i][j] ^= rows[rank][j];
        pivot_col.push_back(col);
        ++rank;
    }
    rows.resize(rank);

    std::vector<int> free_cols;
    {
        std::vector<char> is_pivot(n, 0);
        for (int c : pivot_col) is_pivot[c] = 1;
        for (int c = 0; c < n; ++c)
            if (!is_pivot[c]) free_cols.push_back(c);
    }
    // enumerate the solution space (free vars are few for catalog rings)
    std::vector<std::vector<int>> out;
    if (free_cols.size() > 20) return out;  // would be 2^20+ gradings; not a catalog ring
    for (std::size_t mask = 0; mask < (std::size_t{1} << free_cols.size()); ++mask) {
        std::vector<int> g(n, 0);
        for (std::size_t i = 0; i < free_cols.size(); ++i) g[free_cols[i]] = (mask >> i) & 1;
        for (std::size_t i = 0; i < rank; ++i) {
            int v = 0;
            for (int j = 0; j < n; ++j)
                if (j != pivot_col[i] && rows[i][j]) v ^= g[j];
            g[pivot_col[i]] = v;
        }
        out.push_back(std::move(g));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<GradedSystem> detect_grading(const FusionRing& ring) {
    auto gs = all_gradings(ring);
    for (const auto& g : gs) {
        if (std::none_of(g.begin(), g.end(), [](int x) { return x == 1; })) continue;
        GradedSystem out;
        out.ring = &ring;
        out.grade = g;  // first in sorted order = lexicographically least odd bitset
        return out;
    }
    return std::nullopt;
}

}  // namespace cft
