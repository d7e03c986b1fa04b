#include "ratlink/json_io.hpp"

namespace ratlink {

namespace {

ordered_json quadrant_list(const Crossing& c) {
    ordered_json out = ordered_json::array();
    for (Quadrant q : {Quadrant::N, Quadrant::E, Quadrant::S, Quadrant::W})
        if (c.dot(q)) out.push_back(to_string(q));
    return out;
}

ordered_json end_json(const EdgeEnd& e) {
    return ordered_json{{"crossing", e.crossing}, {"ray", to_string(e.ray)}};
}

ordered_json pass_json(const StrandPass& p) {
    return ordered_json{
        {"component", to_string(p.comp)}, {"entry", to_string(p.entry)}, {"exit", to_string(p.exit)}};
}

ordered_json term_json(const StateTerm& t) {
    return ordered_json{{"i", t.i},
                        {"j", t.j},
                        {"entry_sign", t.entry_sign},
                        {"perm_sign", t.perm_sign},
                        {"monomial", render(BiPoly::monomial(t.entry_sign * t.perm_sign, t.i, t.j))}};
}

} // namespace

ordered_json poly_json(const BiPoly& p) {
    ordered_json terms = ordered_json::array();
    for (const auto& [m, c] : p.terms())
        terms.push_back(ordered_json{{"coeff", c.get_str()}, {"x", m.i}, {"y", m.j}});
    ordered_json out{{"render", render(p)}, {"terms", std::move(terms)}};
    if (!p.is_zero()) {
        CoefficientMatrix cm = to_coeff_matrix(p);
        ordered_json rows = ordered_json::array();
        for (const auto& row : cm.rows_top_down) {
            ordered_json cells = ordered_json::array();
            for (const Coeff& c : row) cells.push_back(c.get_str());
            rows.push_back(std::move(cells));
        }
        out["coefficients"] = ordered_json{{"min_x", cm.min_i},
                                           {"min_y", cm.min_j},
                                           {"rows_top_down", std::move(rows)},
                                           {"note", "last row is y^" + std::to_string(cm.min_j)}};
    }
    return out;
}

ordered_json matrix_json(const PolyMatrix& m, int first_region) {
    ordered_json rows = ordered_json::array();
    for (const auto& row : m) {
        ordered_json cells = ordered_json::array();
        for (const BiPoly& cell : row) cells.push_back(render(cell));
        rows.push_back(std::move(cells));
    }
    return ordered_json{{"rows", static_cast<int>(m.size())},
                        {"cols", m.empty() ? 0 : static_cast<int>(m.front().size())},
                        {"first_region", first_region},
                        {"entries", std::move(rows)}};
}

ordered_json diagram_json(const LinkDiagram& d) {
    ordered_json crossings = ordered_json::array();
    for (const Crossing& c : d.crossings) {
        crossings.push_back(ordered_json{{"id", c.id},
                                         {"site", c.site_index},
                                         {"index_in_site", c.index_in_site},
                                         {"regions",
                                          ordered_json{{"N", c.region(Quadrant::N)},
                                                       {"E", c.region(Quadrant::E)},
                                                       {"S", c.region(Quadrant::S)},
                                                       {"W", c.region(Quadrant::W)}}},
                                         {"over", pass_json(c.over)},
                                         {"under", pass_json(c.under)},
                                         {"dots", quadrant_list(c)},
                                         {"special", c.special}});
    }

    std::vector<int> active = d.active_edge_ids();
    auto letter_of = [&](int id) -> ordered_json {
        for (std::size_t k = 0; k < active.size(); ++k)
            if (active[k] == id) return active_edge_letter(k);
        return nullptr;
    };
    ordered_json edges = ordered_json::array();
    for (const Edge& e : d.edges) {
        edges.push_back(ordered_json{{"id", e.id},
                                     {"tail", end_json(e.tail)},
                                     {"head", end_json(e.head)},
                                     {"component", to_string(e.comp)},
                                     {"class", to_string(e.cls)},
                                     {"active", e.active},
                                     {"letter", letter_of(e.id)},
                                     {"direction", to_string(e.direction)},
                                     {"regions", ordered_json{e.regions[0], e.regions[1]}}});
    }

    ordered_json mono = ordered_json::array();
    for (auto [site, length] : d.coloring.mono_sites)
        mono.push_back(ordered_json{{"site", site}, {"length", length}});

    return ordered_json{{"conway", d.seq.str()},
                        {"crossings", d.n()},
                        {"regions", static_cast<int>(d.regions.size())},
                        {"starred_regions", ordered_json{0, d.n() + 1}},
                        {"components", d.component_count},
                        {"coloring",
                         ordered_json{{"monochromatic_sites", std::move(mono)},
                                      {"m", d.coloring.m}}},
                        {"crossing_table", std::move(crossings)},
                        {"edge_table", std::move(edges)}};
}

ordered_json lattice_json(const LinkDiagram& d, const Lattice& lat) {
    ordered_json states = ordered_json::array();
    for (std::size_t k = 0; k < lat.states.size(); ++k) {
        ordered_json markers = ordered_json::array();
        for (Quadrant q : lat.states[k].marker) markers.push_back(to_string(q));
        ordered_json moves = ordered_json::array();
        for (int eid : available_moves(d, lat.states[k], true)) moves.push_back(eid);
        states.push_back(ordered_json{{"index", static_cast<int>(k)},
                                      {"markers", std::move(markers)},
                                      {"term", term_json(lat.terms[k])},
                                      {"clockwise_moves", std::move(moves)}});
    }
    return ordered_json{{"conway", d.seq.str()},
                        {"state_count", static_cast<int>(lat.states.size())},
                        {"clocked_index", static_cast<int>(lat.clocked_index)},
                        {"counterclocked_index", static_cast<int>(lat.counterclocked_index)},
                        {"signed_sum", poly_json(lat.signed_sum)},
                        {"parity_sum", poly_json(lat.parity_sum)},
                        {"states", std::move(states)}};
}

ordered_json report_json(const VerificationReport& r) {
    ordered_json mono = ordered_json::array();
    for (auto [site, length] : r.mono_sites)
        mono.push_back(ordered_json{{"site", site}, {"length", length}});
    ordered_json checks = ordered_json::array();
    for (const CheckResult& c : r.checks) {
        ordered_json entry{{"name", c.name}, {"pass", c.pass}};
        if (!c.detail.empty()) entry["detail"] = c.detail;
        checks.push_back(std::move(entry));
    }
    return ordered_json{{"conway", r.conway},
                        {"crossings", r.crossings},
                        {"monochromatic_sites", std::move(mono)},
                        {"m", r.mono_site_count},
                        {"delta", poly_json(r.delta)},
                        {"determinant", poly_json(r.determinant)},
                        {"delta_at_minus1_0", r.delta_at_minus1_0.get_str()},
                        {"twist_product", r.twist_product.get_str()},
                        {"delta_at_minus1_minus1", r.delta_at_minus1_minus1.get_str()},
                        {"state_count", r.state_count.get_str()},
                        {"main_identity", r.main_identity},
                        {"checks", std::move(checks)},
                        {"notes", r.notes},
                        {"all_pass", r.all_pass}};
}

ordered_json sweep_json(const SweepResult& s) {
    return ordered_json{{"max_crossings", s.max_crossings},
                        {"links", s.links},
                        {"failures", s.failures},
                        {"failed", s.failed}};
}

std::string dump_json(const ordered_json& j) { return j.dump(2) + "\n"; }

} // namespace ratlink
