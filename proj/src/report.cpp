#include "ratlink/report.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <thread>

#include "ratlink/alexander.hpp"
#include "ratlink/error.hpp"

namespace ratlink {

namespace {

mpz_class abs_coeff_sum(const BiPoly& p) {
    mpz_class total = 0;
    for (const auto& [m, c] : p.terms()) total += abs(c);
    return total;
}

// Breadth-first closure of the clocked state under moves across the given
// edges only.
std::vector<ClockState> restricted_closure(const LinkDiagram& d, const std::vector<int>& edge_ids) {
    std::vector<ClockState> states{clocked_state(d)};
    std::set<std::vector<Quadrant>> seen{states[0].marker};
    for (std::size_t at = 0; at < states.size(); ++at) {
        for (bool clockwise : {true, false}) {
            for (int eid : edge_ids) {
                if (!move_available(d, states[at], eid, clockwise)) continue;
                ClockState next = apply_move(d, states[at], eid, clockwise);
                if (seen.insert(next.marker).second) states.push_back(std::move(next));
            }
        }
    }
    return states;
}

} // namespace

std::vector<int> component_cycle(const LinkDiagram& d, EdgeEnd start_exit) {
    std::vector<int> cycle;
    EdgeEnd cur = start_exit;
    do {
        int id = d.edge_at(cur.crossing, cur.ray);
        cycle.push_back(id);
        const Edge& e = d.edge(id);
        EdgeEnd far = e.tail == cur ? e.head : e.tail;
        cur = EdgeEnd{far.crossing, opposite(far.ray)};
    } while (!(cur == start_exit));
    return cycle;
}

std::vector<int> cascade_chain(const LinkDiagram& d, int site) {
    int first = 0, last = 0;
    for (const Crossing& c : d.crossings) {
        if (c.site_index != site) continue;
        if (first == 0) first = c.id;
        last = c.id;
    }
    std::vector<int> chain;
    const bool horizontal = d.seq.orientation(site) == SiteOrientation::Horizontal;
    for (const Edge& e : d.edges) {
        int lo = std::min(e.tail.crossing, e.head.crossing);
        int hi = std::max(e.tail.crossing, e.head.crossing);
        if (e.active && lo >= first && hi <= last) chain.push_back(e.id);
        if (e.cls == EdgeClass::HV && ((horizontal && lo == last) || (!horizontal && hi == first)))
            chain.push_back(e.id);
    }
    std::sort(chain.begin(), chain.end());
    return chain;
}

VerificationReport verify_link(const TwistSequence& seq, std::size_t budget) {
    LinkDiagram d = build_diagram(seq);
    const int n = d.n();

    VerificationReport r;
    r.conway = seq.str();
    r.crossings = n;
    r.mono_site_count = d.coloring.m;
    r.mono_sites = d.coloring.mono_sites;

    r.determinant = reduced_determinant(d);
    r.delta = extract_delta(r.determinant);
    r.delta_at_minus1_0 = evaluate(r.delta, -1, 0);
    r.delta_at_minus1_minus1 = evaluate(r.delta, -1, -1);
    for (auto [site, qhat] : r.mono_sites) r.twist_product *= qhat + 1;
    r.main_identity = r.delta_at_minus1_0 == r.twist_product;

    auto check = [&r](const std::string& name, bool pass, std::string detail = "") {
        r.checks.push_back(CheckResult{name, pass, std::move(detail)});
    };

    // ---- Structural lemmas ----

    {
        std::vector<int> y_cycle = component_cycle(d, EdgeEnd{1, Ray::NW});
        bool ok = true;
        for (std::size_t k = 0; k < y_cycle.size(); ++k)
            ok = ok && d.edge(y_cycle[k]).active == (k % 2 == 1);
        check("y_cycle_alternates_inactive_active", ok);
    }
    {
        std::vector<int> x_cycle = component_cycle(d, EdgeEnd{1, Ray::NE});
        std::vector<int> pair_crossings;
        for (std::size_t k = 0; k < x_cycle.size(); ++k) {
            const Edge& e = d.edge(x_cycle[k]);
            const Edge& f = d.edge(x_cycle[(k + 1) % x_cycle.size()]);
            if (!e.active && !f.active) pair_crossings.push_back(e.head.crossing);
        }
        std::sort(pair_crossings.begin(), pair_crossings.end());
        check("x_cycle_double_inactive_exactly_at_special_crossings",
              pair_crossings == std::vector<int>{1, n});
    }
    {
        bool ok = true;
        for (const Edge& e : d.edges)
            if (e.comp == ComponentLabel::Y && e.active) ok = ok && e.direction == DirectionClass::Upper;
        check("active_y_edges_are_uppers", ok);
    }
    {
        bool ok = true;
        for (const Crossing& c : d.crossings) {
            bool starred_quadrant = false;
            for (Quadrant q : {Quadrant::N, Quadrant::E, Quadrant::S, Quadrant::W})
                starred_quadrant = starred_quadrant || d.starred(c.region(q));
            ok = ok && starred_quadrant;
        }
        check("no_spinners_every_crossing_touches_a_starred_region", ok);
    }
    {
        const std::vector<bool>& mono = d.coloring.site_mono;
        bool ok = true;
        for (std::size_t k = 0; k + 1 < mono.size(); ++k) ok = ok && !(mono[k] && mono[k + 1]);
        check("no_adjacent_monochromatic_sites", ok);
        check("first_and_last_sites_dichromatic", !mono.front() && !mono.back());
    }
    {
        bool ok = true;
        for (const Crossing& c : d.crossings)
            if (d.coloring.site_mono[static_cast<std::size_t>(c.site_index - 1)])
                ok = ok && c.over.comp == ComponentLabel::X && c.under.comp == ComponentLabel::X;
        check("monochromatic_sites_carry_x", ok);
    }

    ClockState clocked = clocked_state(d);
    StateTerm clocked_term = state_term(d, clocked);
    check("clocked_term_y_free", clocked_term.j == 0);
    {
        bool ok = true;
        for (const Edge& e : d.edges)
            if (e.cls == EdgeClass::HV) ok = ok && e.active && move_available(d, clocked, e.id, true);
        check("hv_connectors_available_at_clocked", ok);
    }
    {
        bool ok = true;
        const std::vector<bool>& mono = d.coloring.site_mono;
        for (const Edge& e : d.edges) {
            if (e.cls != EdgeClass::HV) continue;
            int lo = std::min(e.tail.crossing, e.head.crossing);
            int site = d.crossing(lo).site_index;
            int mono_neighbors = (mono[static_cast<std::size_t>(site - 1)] ? 1 : 0) +
                                 (mono[static_cast<std::size_t>(site)] ? 1 : 0);
            ok = ok && (mono_neighbors == 1) == (e.comp == ComponentLabel::X);
        }
        check("x_colored_hv_connector_iff_one_monochromatic_neighbor", ok);
    }

    // ---- State sum against the determinant ----

    Lattice lat = enumerate_lattice(d, budget);
    r.state_count = static_cast<long>(lat.states.size());
    check("signed_state_sum_equals_determinant", lat.signed_sum == r.determinant);
    check("parity_state_sum_is_unit_multiple_of_determinant",
          lat.parity_sum == r.determinant || lat.parity_sum == neg(r.determinant));
    check("state_count_equals_absolute_coefficient_sum",
          abs_coeff_sum(r.determinant) == r.state_count);
    {
        std::size_t no_cw = 0, no_ccw = 0;
        for (const ClockState& s : lat.states) {
            if (available_moves(d, s, true).empty()) ++no_cw;
            if (available_moves(d, s, false).empty()) ++no_ccw;
        }
        check("unique_clockwise_and_counterclockwise_terminal_states",
              no_cw == 1 && no_ccw == 1 && available_moves(d, clocked, false).empty());
    }

    // ---- Bottom row ----

    std::vector<ClockState> bottom = bottom_row_states(d, budget);
    {
        std::set<std::vector<Quadrant>> slice, found;
        for (std::size_t k = 0; k < lat.states.size(); ++k)
            if (lat.terms[k].j == 0) slice.insert(lat.states[k].marker);
        for (const ClockState& s : bottom) found.insert(s.marker);
        check("bottom_row_is_the_y_free_slice", slice == found);
    }
    check("bottom_row_count_equals_twist_product",
          r.twist_product == static_cast<long>(bottom.size()));
    {
        // The bottom row factors as independent cascades, one per
        // monochromatic site; convolving their x-offsets must reproduce it.
        bool ok = true;
        std::map<int, long> expected{{clocked_term.i, 1}};
        for (auto [site, qhat] : r.mono_sites) {
            std::vector<int> chain = cascade_chain(d, site);
            std::vector<ClockState> states = restricted_closure(d, chain);
            ok = ok && static_cast<int>(states.size()) == qhat + 1;
            std::map<int, long> offsets;
            for (const ClockState& s : states) ++offsets[state_term(d, s).i - clocked_term.i];
            std::map<int, long> next;
            for (auto [i, c] : expected)
                for (auto [o, k] : offsets) next[i + o] += c * k;
            expected = std::move(next);
        }
        std::map<int, long> actual;
        for (const ClockState& s : bottom) ++actual[state_term(d, s).i];
        check("bottom_row_factors_into_site_cascades", ok && actual == expected);
    }

    // ---- Polynomial form and the main identity ----

    check("determinant_divisible_by_one_minus_y", [&] {
        try {
            static_cast<void>(divide_exact(r.determinant, sub(BiPoly::one(), BiPoly::y())));
            return true;
        } catch (const Error&) {
            return false;
        }
    }());
    check("delta_canonical_form",
          r.delta.min_x() == 0 && r.delta.min_y() == 0 && normalize_unit(r.delta) == r.delta);
    check("delta_at_minus_one_zero_equals_twist_product", r.main_identity,
          r.delta_at_minus1_0.get_str() + " vs " + r.twist_product.get_str());

    if (seq.site_count() <= 2)
        r.notes.push_back("fewer than three twist sites; connector lemmas are vacuous here");
    r.notes.push_back("|Delta(-1,-1)| = " + mpz_class(abs(r.delta_at_minus1_minus1)).get_str() +
                      "; lattice has " + r.state_count.get_str() +
                      " states = absolute coefficient sum of (1-y)*Delta");

    r.all_pass = r.main_identity;
    for (const CheckResult& c : r.checks) r.all_pass = r.all_pass && c.pass;
    return r;
}

SweepResult sweep_links(int max_crossings, int jobs) {
    std::vector<TwistSequence> seqs = enumerate_sequences(max_crossings, ClosureKind::TwoComponentLink);
    SweepResult result;
    result.max_crossings = max_crossings;
    result.links = static_cast<long>(seqs.size());

    if (jobs < 1) jobs = 1;
    jobs = std::min<int>(jobs, std::max<int>(1, static_cast<int>(seqs.size())));
    std::vector<std::vector<std::string>> failed_per_job(static_cast<std::size_t>(jobs));

    auto worker = [&](int job) {
        for (std::size_t k = static_cast<std::size_t>(job); k < seqs.size();
             k += static_cast<std::size_t>(jobs)) {
            LinkDiagram d = build_diagram(seqs[k]);
            mpz_class product = 1;
            for (auto [site, qhat] : d.coloring.mono_sites) product *= qhat + 1;
            if (evaluate(link_polynomial(d), -1, 0) != product)
                failed_per_job[static_cast<std::size_t>(job)].push_back(seqs[k].str());
        }
    };

    if (jobs == 1) {
        worker(0);
    } else {
        std::vector<std::thread> threads;
        threads.reserve(static_cast<std::size_t>(jobs));
        for (int j = 0; j < jobs; ++j) threads.emplace_back(worker, j);
        for (std::thread& t : threads) t.join();
    }

    for (const auto& part : failed_per_job)
        result.failed.insert(result.failed.end(), part.begin(), part.end());
    std::sort(result.failed.begin(), result.failed.end());
    result.failures = static_cast<long>(result.failed.size());
    return result;
}

} // namespace ratlink
