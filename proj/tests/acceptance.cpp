// Acceptance gate: one pass/fail line per criterion, exit 0 only if all pass.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <map>
#include <random>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "oracles.hpp"
#include "ratlink/alexander.hpp"
#include "ratlink/bipoly.hpp"
#include "ratlink/clocklattice.hpp"
#include "ratlink/conway.hpp"
#include "ratlink/diagram.hpp"
#include "ratlink/report.hpp"

using namespace ratlink;

namespace {

struct Outcome {
    bool pass = true;
    std::string why;
};

void fail(Outcome& o, const std::string& why) {
    o.pass = false;
    if (o.why.empty()) o.why = why;
}

BiPoly X() { return BiPoly::x(); }
BiPoly Y() { return BiPoly::y(); }

// 0/1 incidence of crossings against the non-starred regions 1..n; its
// permanent counts the marker states independently of the move search.
std::vector<std::vector<int>> incidence(const LinkDiagram& d) {
    const int n = d.n();
    std::vector<std::vector<int>> a(static_cast<std::size_t>(n),
                                    std::vector<int>(static_cast<std::size_t>(n), 0));
    for (const Crossing& c : d.crossings)
        for (Quadrant q : {Quadrant::N, Quadrant::E, Quadrant::S, Quadrant::W}) {
            int r = c.region(q);
            if (r >= 1 && r <= n) a[static_cast<std::size_t>(c.id - 1)][static_cast<std::size_t>(r - 1)] = 1;
        }
    return a;
}

int worker_count() {
    unsigned hw = std::thread::hardware_concurrency();
    return static_cast<int>(std::min(8u, std::max(1u, hw)));
}

// ---- Criterion 1: Whitehead link pipeline goldens ----

Outcome whitehead_goldens() {
    Outcome o;
    const BiPoly one = BiPoly::one();
    const BiPoly zero;

    LinkDiagram d = build_diagram(parse_conway("2 1 2"));
    PolyMatrix expected = {
        {Y(), one, zero, neg(Y()), zero, zero, neg(one)},
        {zero, one, X(), neg(one), zero, zero, neg(X())},
        {X(), zero, one, neg(one), zero, neg(X()), zero},
        {zero, zero, Y(), zero, one, neg(Y()), neg(one)},
        {one, zero, zero, zero, X(), neg(X()), neg(one)},
    };
    if (alexander_matrix(d) != expected) fail(o, "full 5x7 matrix mismatch");

    // -x + x^2 + 2xy - 2x^2 y - xy^2 + x^2 y^2
    BiPoly det_expected;
    det_expected = add(det_expected, BiPoly::monomial(-1, 1, 0));
    det_expected = add(det_expected, BiPoly::monomial(1, 2, 0));
    det_expected = add(det_expected, BiPoly::monomial(2, 1, 1));
    det_expected = add(det_expected, BiPoly::monomial(-2, 2, 1));
    det_expected = add(det_expected, BiPoly::monomial(-1, 1, 2));
    det_expected = add(det_expected, BiPoly::monomial(1, 2, 2));
    BiPoly det = reduced_determinant(d);
    if (det != det_expected) fail(o, "reduced determinant mismatch");

    CoefficientMatrix cm = to_coeff_matrix(extract_delta(det));
    bool delta_ok = cm.min_i == 0 && cm.min_j == 0 && cm.height() == 2 && cm.width() == 2 &&
                    cm.rows_top_down[0] == std::vector<Coeff>{-1, 1} &&
                    cm.rows_top_down[1] == std::vector<Coeff>{1, -1};
    if (!delta_ok) fail(o, "delta coefficient matrix is not [[-1,1],[1,-1]]");
    return o;
}

// ---- Criterion 2: double twist chain 221122 ----

Outcome chain_221122() {
    Outcome o;
    LinkDiagram d = build_diagram(parse_conway("221122"));
    if (d.coloring.m != 2 ||
        d.coloring.mono_sites != std::vector<std::pair<int, int>>{{2, 2}, {5, 2}})
        fail(o, "monochromatic sites are not sites 2 and 5 of length 2");

    BiPoly delta = link_polynomial(d);
    if (evaluate(delta, -1, 0) != 9) fail(o, "delta(-1,0) != 9");

    StateTerm clocked = state_term(d, clocked_state(d));
    if (clocked.i != 3 || clocked.j != 0) fail(o, "clocked term is not x^3");

    std::vector<ClockState> bottom = bottom_row_states(d);
    std::map<int, int> xs;
    for (const ClockState& s : bottom) {
        StateTerm t = state_term(d, s);
        if (t.j != 0) fail(o, "bottom row state with y exponent");
        ++xs[t.i];
    }
    if (bottom.size() != 9 || xs != std::map<int, int>{{2, 2}, {3, 5}, {4, 2}})
        fail(o, "bottom row is not 9 states with x-exponents {2:2,3:5,4:2}");
    return o;
}

// ---- Criterion 3: main identity sweep through 12 crossings ----

Outcome main_identity_sweep() {
    Outcome o;
    SweepResult s = sweep_links(12, worker_count());
    if (s.links != 342) fail(o, "expected 342 links through 12 crossings");
    if (s.failures != 0)
        fail(o, std::to_string(s.failures) + " identity failures, first: " +
                    (s.failed.empty() ? "?" : s.failed.front()));
    for (const TwistSequence& seq : enumerate_sequences(12, ClosureKind::TwoComponentLink)) {
        LinkDiagram d = build_diagram(seq);
        if (d.coloring.m == 0 && evaluate(link_polynomial(d), -1, 0) != 1)
            fail(o, "delta(-1,0) != 1 for all-dichromatic " + seq.str());
    }
    return o;
}

// ---- Criterion 4: state sum vs determinant, counts vs permanent ----

Outcome state_sum_equivalence() {
    Outcome o;
    for (const TwistSequence& seq : enumerate_sequences(10, ClosureKind::TwoComponentLink)) {
        LinkDiagram d = build_diagram(seq);
        {
            BiPoly det = reduced_determinant(d);
            Lattice lat = enumerate_lattice(d);
            if (lat.signed_sum != det) {
                fail(o, "state sum != determinant for " + seq.str());
                continue;
            }
            BiPoly renormalized = mul(sub(BiPoly::one(), Y()), extract_delta(det));
            mpz_class total = 0;
            for (const auto& [m, c] : renormalized.terms()) total += abs(c);
            if (total != static_cast<long>(lat.states.size()))
                fail(o, "state count != |coeff| sum of (1-y)delta for " + seq.str());
        }
    }
    LinkDiagram wh = build_diagram(parse_conway("2 1 2"));
    if (oracle::permanent01(incidence(wh)) != 8 || enumerate_lattice(wh).states.size() != 8)
        fail(o, "whitehead state count is not 8");
    return o;
}

// ---- Criterion 5: clock lattice shape through 10 crossings ----

Outcome clock_theorem_properties() {
    Outcome o;
    for (const TwistSequence& seq : enumerate_sequences(10, ClosureKind::TwoComponentLink)) {
        LinkDiagram d = build_diagram(seq);
        {
            Lattice lat = enumerate_lattice(d);

            // Weak connectivity: the move search from the clocked state finds
            // every marker state counted by the matching permanent.
            if (oracle::permanent01(incidence(d)) != lat.states.size()) {
                fail(o, "move graph misses matchings for " + seq.str());
                continue;
            }

            std::size_t no_cw = 0, no_ccw = 0;
            for (const ClockState& s : lat.states) {
                std::vector<int> cw_moves = available_moves(d, s, true);
                std::vector<int> ccw_moves = available_moves(d, s, false);
                if (cw_moves.empty()) ++no_cw;
                if (ccw_moves.empty()) ++no_ccw;

                // Every move undoes through its opposite.
                for (bool clockwise : {true, false})
                    for (int eid : clockwise ? cw_moves : ccw_moves) {
                        ClockState t = apply_move(d, s, eid, clockwise);
                        if (!move_available(d, t, eid, !clockwise) ||
                            !(apply_move(d, t, eid, !clockwise) == s))
                            fail(o, "move is not an involution for " + seq.str());
                    }

                // Simultaneously available moves commute.
                for (bool clockwise : {true, false}) {
                    const std::vector<int>& moves = clockwise ? cw_moves : ccw_moves;
                    for (std::size_t a = 0; a < moves.size(); ++a)
                        for (std::size_t b = a + 1; b < moves.size(); ++b) {
                            ClockState ab = apply_move(d, s, moves[a], clockwise);
                            ClockState ba = apply_move(d, s, moves[b], clockwise);
                            if (!move_available(d, ab, moves[b], clockwise) ||
                                !move_available(d, ba, moves[a], clockwise) ||
                                !(apply_move(d, ab, moves[b], clockwise) ==
                                  apply_move(d, ba, moves[a], clockwise)))
                                fail(o, "moves do not commute for " + seq.str());
                        }
                }
            }
            if (no_ccw != 1 || no_cw != 1)
                fail(o, "source or sink is not unique for " + seq.str());
        }
    }
    return o;
}

// ---- Criterion 6: ten structural lemmas through 12 crossings ----

Outcome lemma_suite() {
    Outcome o;
    for (const TwistSequence& seq : enumerate_sequences(12, ClosureKind::TwoComponentLink)) {
        LinkDiagram d = build_diagram(seq);
        {
            auto lemma = [&](bool ok, const char* name) {
                if (!ok) fail(o, std::string(name) + " fails for " + seq.str());
            };

            std::vector<int> y_cycle = component_cycle(d, EdgeEnd{1, Ray::NW});
            bool alt = true;
            for (std::size_t k = 0; k < y_cycle.size(); ++k)
                alt = alt && d.edge(y_cycle[k]).active == (k % 2 == 1);
            lemma(alt, "y-cycle alternation");

            std::vector<int> x_cycle = component_cycle(d, EdgeEnd{1, Ray::NE});
            std::vector<int> doubles;
            for (std::size_t k = 0; k < x_cycle.size(); ++k)
                if (!d.edge(x_cycle[k]).active &&
                    !d.edge(x_cycle[(k + 1) % x_cycle.size()]).active)
                    doubles.push_back(d.edge(x_cycle[k]).head.crossing);
            std::sort(doubles.begin(), doubles.end());
            lemma(doubles == std::vector<int>{1, d.n()}, "double inactive at special vertices");

            bool uppers = true, mono_x = true, spinners_ok = true;
            for (const Edge& e : d.edges)
                if (e.comp == ComponentLabel::Y && e.active)
                    uppers = uppers && e.direction == DirectionClass::Upper;
            lemma(uppers, "active y-edges are uppers");

            ClockState clocked = clocked_state(d);
            lemma(state_term(d, clocked).j == 0, "clocked term y-free");

            bool hv_ok = true, red_ok = true;
            const std::vector<bool>& mono = d.coloring.site_mono;
            for (const Edge& e : d.edges) {
                if (e.cls != EdgeClass::HV) continue;
                hv_ok = hv_ok && e.active && move_available(d, clocked, e.id, true);
                int lo = std::min(e.tail.crossing, e.head.crossing);
                int site = d.crossing(lo).site_index;
                int neighbors = (mono[static_cast<std::size_t>(site - 1)] ? 1 : 0) +
                                (mono[static_cast<std::size_t>(site)] ? 1 : 0);
                red_ok = red_ok && (neighbors == 1) == (e.comp == ComponentLabel::X);
            }
            lemma(hv_ok, "connectors available at clocked");
            lemma(red_ok, "x-colored connector iff one monochromatic neighbor");

            bool adjacent = false;
            for (std::size_t k = 0; k + 1 < mono.size(); ++k)
                adjacent = adjacent || (mono[k] && mono[k + 1]);
            lemma(!adjacent, "no consecutive monochromatic sites");
            lemma(!mono.front() && !mono.back(), "first and last sites dichromatic");

            for (const Crossing& c : d.crossings) {
                if (mono[static_cast<std::size_t>(c.site_index - 1)])
                    mono_x = mono_x && c.over.comp == ComponentLabel::X &&
                             c.under.comp == ComponentLabel::X;
                bool starred = false;
                for (Quadrant q : {Quadrant::N, Quadrant::E, Quadrant::S, Quadrant::W})
                    starred = starred || d.starred(c.region(q));
                spinners_ok = spinners_ok && starred;
            }
            lemma(mono_x, "no monochromatic y sites");
            lemma(spinners_ok, "no spinners");
        }
    }
    return o;
}

// ---- Criterion 7: polynomial engine properties ----

Outcome polynomial_engine() {
    Outcome o;
    std::mt19937 rng(20240811);

    for (int k = 0; k < 10500; ++k) {
        std::size_t size = 1 + static_cast<std::size_t>(k % 6);
        PolyMatrix m = oracle::random_monomial_matrix(rng, size);
        if (det(m) != oracle::det_cofactor(m)) {
            fail(o, "bareiss != cofactor on a random matrix");
            break;
        }
    }

    for (int k = 0; k < 10000; ++k) {
        BiPoly p = oracle::random_poly(rng);
        BiPoly q = oracle::random_nonzero_poly(rng);
        if (divide_exact(mul(p, q), q) != p) {
            fail(o, "divide_exact round trip fails");
            break;
        }
    }

    for (int k = 0; k < 10000; ++k) {
        BiPoly u = normalize_unit(oracle::random_parity_poly(rng));
        if (normalize_unit(u) != u) {
            fail(o, "normalize_unit is not idempotent");
            break;
        }
    }
    return o;
}

struct Criterion {
    const char* name;
    Outcome (*run)();
    double limit_s; // wall clock bound, part of the criterion
};

} // namespace

int main() {
    const Criterion criteria[] = {
        {"whitehead pipeline goldens", whitehead_goldens, 1.0},
        {"221122 twist product and bottom row", chain_221122, 1.0},
        {"main identity sweep through 12 crossings", main_identity_sweep, 300.0},
        {"state sum equals determinant through 10 crossings", state_sum_equivalence, 120.0},
        {"clock lattice shape through 10 crossings", clock_theorem_properties, 300.0},
        {"structural lemma suite through 12 crossings", lemma_suite, 300.0},
        {"polynomial engine against oracles", polynomial_engine, 300.0},
    };

    bool all = true;
    int k = 0;
    for (const Criterion& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        Outcome o = c.run();
        double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (elapsed >= c.limit_s) fail(o, "over the time limit");
        all = all && o.pass;
        std::printf("%s  criterion %d: %s (%.2f s)%s%s\n", o.pass ? "PASS" : "FAIL", ++k, c.name,
                    elapsed, o.why.empty() ? "" : " -- ", o.why.c_str());
    }
    return all ? 0 : 1;
}
