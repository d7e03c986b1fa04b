#include "ratlink/bipoly.hpp"

#include <algorithm>
#include <sstream>

namespace ratlink {

const char* errc_name(Errc c) {
    switch (c) {
        case Errc::EmptyInput: return "EmptyInput";
        case Errc::ParseError: return "ParseError";
        case Errc::NonPositiveSite: return "NonPositiveSite";
        case Errc::FirstOrLastSiteTooSmall: return "FirstOrLastSiteTooSmall";
        case Errc::NotATwoComponentLink: return "NotATwoComponentLink";
        case Errc::NotDivisible: return "NotDivisible";
        case Errc::UndefinedAtZero: return "UndefinedAtZero";
        case Errc::SignPatternViolation: return "SignPatternViolation";
        case Errc::ZeroDeterminant: return "ZeroDeterminant";
        case Errc::MoveNotAvailable: return "MoveNotAvailable";
        case Errc::StateBudgetExceeded: return "StateBudgetExceeded";
    }
    return "UnknownError";
}

void BiPoly::add_term(const Coeff& c, int i, int j) {
    if (c == 0) return;
    Monomial key{i, j};
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

int BiPoly::min_x() const {
    int v = terms_.begin()->first.i;
    for (const auto& [m, c] : terms_) v = std::min(v, m.i);
    return v;
}
int BiPoly::max_x() const {
    int v = terms_.begin()->first.i;
    for (const auto& [m, c] : terms_) v = std::max(v, m.i);
    return v;
}
int BiPoly::min_y() const {
    int v = terms_.begin()->first.j;
    for (const auto& [m, c] : terms_) v = std::min(v, m.j);
    return v;
}
int BiPoly::max_y() const {
    int v = terms_.begin()->first.j;
    for (const auto& [m, c] : terms_) v = std::max(v, m.j);
    return v;
}

BiPoly add(const BiPoly& p, const BiPoly& q) {
    BiPoly r = p;
    for (const auto& [m, c] : q.terms()) r.add_term(c, m.i, m.j);
    return r;
}

BiPoly sub(const BiPoly& p, const BiPoly& q) {
    BiPoly r = p;
    for (const auto& [m, c] : q.terms()) r.add_term(-c, m.i, m.j);
    return r;
}

BiPoly neg(const BiPoly& p) {
    BiPoly r;
    for (const auto& [m, c] : p.terms()) r.add_term(-c, m.i, m.j);
    return r;
}

BiPoly mul(const BiPoly& p, const BiPoly& q) {
    BiPoly r;
    for (const auto& [a, ca] : p.terms())
        for (const auto& [b, cb] : q.terms()) r.add_term(ca * cb, a.i + b.i, a.j + b.j);
    return r;
}

BiPoly shift(const BiPoly& p, int di, int dj) {
    BiPoly r;
    for (const auto& [m, c] : p.terms()) r.add_term(c, m.i + di, m.j + dj);
    return r;
}

BiPoly divide_exact(const BiPoly& p, const BiPoly& d) {
    if (p.is_zero()) return BiPoly();
    if (d.is_zero()) throw Error(Errc::NotDivisible, "division by the zero polynomial");

    // Strip monomial content so both operands live in ordinary (non-negative)
    // exponents; Laurent divisibility is unchanged and the greedy leading-term
    // loop below then terminates (grlex is well-founded on that cone).
    int pa = p.min_x(), pb = p.min_y();
    int da = d.min_x(), db = d.min_y();
    BiPoly rem = shift(p, -pa, -pb);
    BiPoly den = shift(d, -da, -db);

    const auto& lt_d = *den.terms().rbegin();
    BiPoly quot;
    while (!rem.is_zero()) {
        const auto& lt_r = *rem.terms().rbegin();
        int ti = lt_r.first.i - lt_d.first.i;
        int tj = lt_r.first.j - lt_d.first.j;
        if (ti < 0 || tj < 0 || lt_r.second % lt_d.second != 0)
            throw Error(Errc::NotDivisible, "remainder is nonzero");
        Coeff tc = lt_r.second / lt_d.second;
        quot.add_term(tc, ti, tj);
        rem = sub(rem, mul(BiPoly::monomial(tc, ti, tj), den));
    }
    return shift(quot, pa - da, pb - db);
}

namespace {

Coeff int_pow(long base, int e) {
    if (e >= 0) {
        Coeff r;
        mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(std::abs(base)),
                      static_cast<unsigned long>(e));
        if (base < 0 && e % 2 != 0) r = -r;
        return r;
    }
    if (base == 1) return 1;
    if (base == -1) return e % 2 == 0 ? 1 : -1;
    throw Error(Errc::UndefinedAtZero, "negative exponent with base " + std::to_string(base));
}

} // namespace

Coeff evaluate(const BiPoly& p, long a, long b) {
    Coeff r = 0;
    for (const auto& [m, c] : p.terms()) r += c * int_pow(a, m.i) * int_pow(b, m.j);
    return r;
}

BiPoly normalize_unit(const BiPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("normalize_unit: zero polynomial");
    BiPoly q = shift(p, -p.min_x(), -p.min_y());
    // Uniform s with coeff(i,j) = s * |coeff| * (-1)^(i+j); flip when s = -1.
    int s = 0;
    for (const auto& [m, c] : q.terms()) {
        int here = (sgn(c) > 0) == ((m.i + m.j) % 2 == 0) ? 1 : -1;
        if (s == 0) s = here;
        if (here != s)
            throw Error(Errc::SignPatternViolation,
                        "coefficient signs do not follow the parity pattern");
    }
    return s < 0 ? neg(q) : q;
}

CoefficientMatrix to_coeff_matrix(const BiPoly& p) {
    CoefficientMatrix m;
    if (p.is_zero()) {
        m.rows_top_down = {{Coeff(0)}};
        return m;
    }
    m.min_i = p.min_x();
    m.min_j = p.min_y();
    int w = p.max_x() - m.min_i + 1;
    int h = p.max_y() - m.min_j + 1;
    m.rows_top_down.assign(h, std::vector<Coeff>(w, Coeff(0)));
    for (const auto& [mono, c] : p.terms())
        m.rows_top_down[h - 1 - (mono.j - m.min_j)][mono.i - m.min_i] = c;
    return m;
}

namespace {

void append_power(std::string& out, const char* var, int e) {
    if (e == 0) return;
    if (!out.empty()) out += "*";
    out += var;
    if (e != 1) out += "^" + std::to_string(e);
}

// |c| x^i y^j without sign, e.g. "2*x*y^2", "x", "1".
std::string term_body(const Coeff& c, int i, int j) {
    std::string vars;
    append_power(vars, "x", i);
    append_power(vars, "y", j);
    Coeff a = abs(c);
    if (vars.empty()) return a.get_str();
    if (a == 1) return vars;
    return a.get_str() + "*" + vars;
}

} // namespace

std::string render(const BiPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (const auto& [m, c] : p.terms()) {
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        out += term_body(c, m.i, m.j);
    }
    return out;
}

std::string render(const CoefficientMatrix& m) {
    std::size_t w = 0;
    for (const auto& row : m.rows_top_down)
        for (const auto& c : row) w = std::max(w, c.get_str().size());
    std::ostringstream os;
    for (const auto& row : m.rows_top_down) {
        os << "[";
        for (const auto& c : row) {
            std::string s = c.get_str();
            os << " " << std::string(w - s.size(), ' ') << s;
        }
        os << " ]\n";
    }
    int max_i = m.min_i + static_cast<int>(m.width()) - 1;
    int max_j = m.min_j + static_cast<int>(m.height()) - 1;
    os << "(columns x^" << m.min_i << "..x^" << max_i << ", rows top to bottom y^" << max_j
       << "..y^" << m.min_j << "; bottom row = y^" << m.min_j << ")";
    return os.str();
}

BiPoly det(const PolyMatrix& m) {
    std::size_t n = m.size();
    if (n == 0) return BiPoly::one();
    for (const auto& row : m)
        if (row.size() != n) throw std::invalid_argument("det: matrix is not square");
    PolyMatrix a = m;
    int sign = 1;
    BiPoly prev = BiPoly::one();
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k].is_zero()) {
            std::size_t r = k + 1;
            while (r < n && a[r][k].is_zero()) ++r;
            if (r == n) return BiPoly();
            std::swap(a[k], a[r]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                BiPoly num = sub(mul(a[k][k], a[i][j]), mul(a[i][k], a[k][j]));
                a[i][j] = divide_exact(num, prev);
            }
            a[i][k] = BiPoly();
        }
        prev = a[k][k];
    }
    return sign < 0 ? neg(a[n - 1][n - 1]) : a[n - 1][n - 1];
}

} // namespace ratlink
