#pragma once

// Independent, deliberately naive reference implementations used only by
// tests. Each one recomputes a quantity the library derives by a different
// algorithm, so agreement is meaningful.

#include <cstdint>
#include <random>
#include <vector>

#include "ratlink/bipoly.hpp"

namespace oracle {

// Determinant by first-row cofactor expansion. O(n!) but exact; fine to 6x6.
inline ratlink::BiPoly det_cofactor(const ratlink::PolyMatrix& m) {
    using ratlink::BiPoly;
    std::size_t n = m.size();
    if (n == 0) return BiPoly::one();
    if (n == 1) return m[0][0];
    BiPoly acc;
    for (std::size_t c = 0; c < n; ++c) {
        if (m[0][c].is_zero()) continue;
        ratlink::PolyMatrix minor(n - 1, std::vector<BiPoly>(n - 1));
        for (std::size_t i = 1; i < n; ++i) {
            std::size_t jj = 0;
            for (std::size_t j = 0; j < n; ++j) {
                if (j == c) continue;
                minor[i - 1][jj++] = m[i][j];
            }
        }
        BiPoly term = mul(m[0][c], det_cofactor(minor));
        acc = c % 2 == 0 ? add(acc, term) : sub(acc, term);
    }
    return acc;
}

// Schoolbook product accumulated on a dense grid (independent of the library's
// term-map accumulation).
inline ratlink::BiPoly mul_naive(const ratlink::BiPoly& p, const ratlink::BiPoly& q) {
    using ratlink::Coeff;
    if (p.is_zero() || q.is_zero()) return {};
    int lo_i = p.min_x() + q.min_x(), hi_i = p.max_x() + q.max_x();
    int lo_j = p.min_y() + q.min_y(), hi_j = p.max_y() + q.max_y();
    std::vector<std::vector<Coeff>> grid(hi_i - lo_i + 1,
                                         std::vector<Coeff>(hi_j - lo_j + 1, Coeff(0)));
    for (const auto& [a, ca] : p.terms())
        for (const auto& [b, cb] : q.terms()) grid[a.i + b.i - lo_i][a.j + b.j - lo_j] += ca * cb;
    ratlink::BiPoly r;
    for (int i = lo_i; i <= hi_i; ++i)
        for (int j = lo_j; j <= hi_j; ++j) r.add_term(grid[i - lo_i][j - lo_j], i, j);
    return r;
}

// Number of perfect matchings of a square 0/1 incidence pattern (permanent),
// by column-subset dynamic programming. Rows/cols up to ~20.
inline std::uint64_t permanent01(const std::vector<std::vector<int>>& a) {
    std::size_t n = a.size();
    std::vector<std::uint64_t> dp(std::size_t(1) << n, 0);
    dp[0] = 1;
    for (std::size_t mask = 0; mask < dp.size(); ++mask) {
        if (dp[mask] == 0) continue;
        std::size_t row = static_cast<std::size_t>(__builtin_popcountll(mask));
        if (row == n) continue;
        for (std::size_t c = 0; c < n; ++c)
            if (a[row][c] && !(mask & (std::size_t(1) << c))) dp[mask | (std::size_t(1) << c)] += dp[mask];
    }
    return dp[dp.size() - 1];
}

// All perfect matchings as explicit column assignments (row r -> cols[r]).
inline void enumerate_matchings_rec(const std::vector<std::vector<int>>& a, std::size_t row,
                                    std::size_t used, std::vector<int>& cols,
                                    std::vector<std::vector<int>>& out) {
    std::size_t n = a.size();
    if (row == n) {
        out.push_back(cols);
        return;
    }
    for (std::size_t c = 0; c < n; ++c) {
        if (!a[row][c] || (used & (std::size_t(1) << c))) continue;
        cols[row] = static_cast<int>(c);
        enumerate_matchings_rec(a, row + 1, used | (std::size_t(1) << c), cols, out);
    }
}

inline std::vector<std::vector<int>> enumerate_matchings(const std::vector<std::vector<int>>& a) {
    std::vector<std::vector<int>> out;
    std::vector<int> cols(a.size(), -1);
    enumerate_matchings_rec(a, 0, 0, cols, out);
    return out;
}

// ---- random generators for property tests (fixed seeds at call sites) ----

inline ratlink::BiPoly random_poly(std::mt19937& rng, int max_terms = 4, int min_exp = -2,
                                   int max_exp = 3) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<int> expd(min_exp, max_exp);
    std::uniform_int_distribution<int> coeffd(-3, 3);
    ratlink::BiPoly p;
    int k = nterms(rng);
    for (int t = 0; t < k; ++t) {
        int c = coeffd(rng);
        if (c == 0) c = 1;
        p.add_term(ratlink::Coeff(c), expd(rng), expd(rng));
    }
    return p;
}

inline ratlink::BiPoly random_nonzero_poly(std::mt19937& rng, int max_terms = 4, int min_exp = -2,
                                           int max_exp = 3) {
    for (;;) {
        auto p = random_poly(rng, max_terms, min_exp, max_exp);
        if (!p.is_zero()) return p;
    }
}

// Random nonzero poly obeying the parity sign pattern up to a global unit,
// i.e. an input on which normalize_unit succeeds.
inline ratlink::BiPoly random_parity_poly(std::mt19937& rng) {
    std::uniform_int_distribution<int> nterms(1, 5);
    std::uniform_int_distribution<int> expd(0, 3);
    std::uniform_int_distribution<int> magd(1, 4);
    std::uniform_int_distribution<int> flip(0, 1);
    std::uniform_int_distribution<int> shiftd(-2, 2);
    ratlink::BiPoly p;
    int s = flip(rng) ? 1 : -1;
    int k = nterms(rng);
    for (int t = 0; t < k; ++t) {
        int i = expd(rng), j = expd(rng);
        int sign = (i + j) % 2 == 0 ? s : -s;
        p.add_term(ratlink::Coeff(sign * magd(rng)), i, j);
    }
    if (p.is_zero()) p.add_term(ratlink::Coeff(s), 0, 0);
    return shift(p, shiftd(rng), shiftd(rng));
}

// Entry drawn from {0, +-1, +-x, +-y}.
inline ratlink::BiPoly random_monomial_entry(std::mt19937& rng) {
    std::uniform_int_distribution<int> d(0, 6);
    switch (d(rng)) {
        case 0: return {};
        case 1: return ratlink::BiPoly::constant(1);
        case 2: return ratlink::BiPoly::constant(-1);
        case 3: return ratlink::BiPoly::x();
        case 4: return neg(ratlink::BiPoly::x());
        case 5: return ratlink::BiPoly::y();
        default: return neg(ratlink::BiPoly::y());
    }
}

inline ratlink::PolyMatrix random_monomial_matrix(std::mt19937& rng, std::size_t n) {
    ratlink::PolyMatrix m(n, std::vector<ratlink::BiPoly>(n));
    for (auto& row : m)
        for (auto& e : row) e = random_monomial_entry(rng);
    return m;
}

} // namespace oracle
