#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

#include "ratlink/error.hpp"

namespace ratlink {

using Coeff = mpz_class;

// Exponent pair of a Laurent monomial x^i y^j. Negative exponents allowed.
struct Monomial {
    int i = 0;
    int j = 0;
    friend bool operator==(const Monomial&, const Monomial&) = default;
};

// Graded lexicographic order by (i+j, i), iterated from low total degree up
// and with higher x-power first inside a degree class, so "1 - x - y + x*y".
// Also the leading-term order for exact division.
struct GrlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        if (a.i + a.j != b.i + b.j) return a.i + a.j < b.i + b.j;
        return a.i > b.i;
    }
};

// Exact integer-coefficient bivariate Laurent polynomial. Term map never
// stores zero coefficients.
class BiPoly {
  public:
    using TermMap = std::map<Monomial, Coeff, GrlexLess>;

    BiPoly() = default;

    static BiPoly constant(long c) { return monomial(Coeff(c), 0, 0); }
    static BiPoly monomial(Coeff c, int i, int j) {
        BiPoly p;
        if (c != 0) p.terms_[{i, j}] = std::move(c);
        return p;
    }
    static BiPoly one() { return constant(1); }
    static BiPoly x() { return monomial(1, 1, 0); }
    static BiPoly y() { return monomial(1, 0, 1); }

    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    Coeff coeff(int i, int j) const {
        auto it = terms_.find({i, j});
        return it == terms_.end() ? Coeff(0) : it->second;
    }

    // Exponent ranges; all require a nonzero polynomial.
    int min_x() const;
    int max_x() const;
    int min_y() const;
    int max_y() const;

    void add_term(const Coeff& c, int i, int j); // fuses and drops zeros

    friend bool operator==(const BiPoly&, const BiPoly&) = default;

  private:
    TermMap terms_;
};

BiPoly add(const BiPoly& p, const BiPoly& q);
BiPoly sub(const BiPoly& p, const BiPoly& q);
BiPoly mul(const BiPoly& p, const BiPoly& q);
BiPoly neg(const BiPoly& p);

inline BiPoly operator+(const BiPoly& p, const BiPoly& q) { return add(p, q); }
inline BiPoly operator-(const BiPoly& p, const BiPoly& q) { return sub(p, q); }
inline BiPoly operator*(const BiPoly& p, const BiPoly& q) { return mul(p, q); }
inline BiPoly operator-(const BiPoly& p) { return neg(p); }

// Multiply by the monomial x^di y^dj (a ring unit).
BiPoly shift(const BiPoly& p, int di, int dj);

// Exact division in the Laurent ring; throws Errc::NotDivisible when d does
// not divide p (including d = 0 with p != 0).
BiPoly divide_exact(const BiPoly& p, const BiPoly& d);

// Exact evaluation at integer points. Negative exponents require the matching
// base to be +1 or -1; any other base (0 included) throws Errc::UndefinedAtZero.
Coeff evaluate(const BiPoly& p, long a, long b);

// Multiply by a unit +-x^a y^b so min exponents become (0,0) and every term of
// even total degree i+j has a positive coefficient. Throws
// Errc::SignPatternViolation when no global sign flip achieves the pattern,
// and std::invalid_argument on the zero polynomial.
BiPoly normalize_unit(const BiPoly& p);

// Dense coefficient array: entry at column i, row j holds the coefficient of
// x^(min_i + i) y^(min_j + j). rows_top_down lists rows from the highest
// y-power down to y^min_j (the bottom row).
struct CoefficientMatrix {
    int min_i = 0;
    int min_j = 0;
    std::vector<std::vector<Coeff>> rows_top_down;

    std::size_t height() const { return rows_top_down.size(); }
    std::size_t width() const { return rows_top_down.empty() ? 0 : rows_top_down[0].size(); }
    // Row for y^(min_j + k), counting from the bottom.
    const std::vector<Coeff>& row_from_bottom(std::size_t k) const {
        return rows_top_down[rows_top_down.size() - 1 - k];
    }
};

CoefficientMatrix to_coeff_matrix(const BiPoly& p);

// "1 - x - 2*y + 2*x*y" in graded-lex term order.
std::string render(const BiPoly& p);
// Aligned grid with an explicit bottom-row legend.
std::string render(const CoefficientMatrix& m);

using PolyMatrix = std::vector<std::vector<BiPoly>>;

// Exact determinant via fraction-free (Bareiss) elimination with row swaps
// and sign tracking; every interior division is exact by construction.
BiPoly det(const PolyMatrix& m);

} // namespace ratlink
