// Command line front end: polynomials, matrices, clock lattices, and the
// twist-site product verification for 2-component rational links.

#include <cstddef>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "ratlink/alexander.hpp"
#include "ratlink/bipoly.hpp"
#include "ratlink/clocklattice.hpp"
#include "ratlink/conway.hpp"
#include "ratlink/diagram.hpp"
#include "ratlink/error.hpp"
#include "ratlink/json_io.hpp"
#include "ratlink/report.hpp"

using namespace ratlink;

namespace {

// Conway tokens may arrive as one quoted argument or as separate ones.
std::string join_tokens(const std::vector<std::string>& tokens) {
    std::string out;
    for (const std::string& t : tokens) {
        if (!out.empty()) out += ' ';
        out += t;
    }
    return out;
}

bool is_input_error(Errc c) {
    switch (c) {
    case Errc::EmptyInput:
    case Errc::ParseError:
    case Errc::NonPositiveSite:
    case Errc::FirstOrLastSiteTooSmall:
    case Errc::NotATwoComponentLink:
        return true;
    default:
        return false;
    }
}

std::string letter_of(const std::vector<int>& active, int edge_id) {
    for (std::size_t k = 0; k < active.size(); ++k)
        if (active[k] == edge_id) return active_edge_letter(k);
    return "?";
}

int run_poly(const std::string& conway, bool json) {
    LinkDiagram d = build_diagram(parse_conway(conway));
    BiPoly det = reduced_determinant(d);
    BiPoly delta = extract_delta(det);
    if (json) {
        ordered_json j{{"conway", d.seq.str()},
                       {"crossings", d.n()},
                       {"determinant", poly_json(det)},
                       {"delta", poly_json(delta)},
                       {"delta_at_minus1_0", evaluate(delta, -1, 0).get_str()},
                       {"delta_at_minus1_minus1", evaluate(delta, -1, -1).get_str()}};
        std::cout << dump_json(j);
        return 0;
    }
    std::cout << "conway: " << d.seq.str() << "\n"
              << "crossings: " << d.n() << "\n"
              << "determinant: " << render(det) << "\n"
              << "delta: " << render(delta) << "\n"
              << render(to_coeff_matrix(delta)) << "\n"
              << "delta(-1, 0) = " << evaluate(delta, -1, 0) << "\n"
              << "delta(-1, -1) = " << evaluate(delta, -1, -1) << "\n";
    return 0;
}

int run_matrix(const std::string& conway, bool json) {
    LinkDiagram d = build_diagram(parse_conway(conway));
    PolyMatrix full = alexander_matrix(d);
    PolyMatrix reduced = reduced_matrix(d);
    BiPoly det = reduced_determinant(d);
    if (json) {
        ordered_json j{{"conway", d.seq.str()},
                       {"crossings", d.n()},
                       {"full", matrix_json(full, 0)},
                       {"reduced", matrix_json(reduced, 1)},
                       {"determinant", poly_json(det)}};
        std::cout << dump_json(j);
        return 0;
    }
    std::cout << "conway: " << d.seq.str() << "\n"
              << "alexander matrix, one row per crossing, one column per region:\n"
              << render_matrix(full, 0)
              << "reduced matrix, starred columns r0 and r" << d.n() + 1 << " struck:\n"
              << render_matrix(reduced, 1)
              << "determinant: " << render(det) << "\n";
    return 0;
}

int run_lattice(const std::string& conway, bool json, std::size_t budget,
                const std::string& dot_path) {
    LinkDiagram d = build_diagram(parse_conway(conway));
    Lattice lat = enumerate_lattice(d, budget);
    if (!dot_path.empty()) {
        std::ofstream out(dot_path);
        if (!out) throw std::runtime_error("cannot write " + dot_path);
        out << lattice_dot(d, lat);
    }
    if (json) {
        std::cout << dump_json(lattice_json(d, lat));
        return 0;
    }
    std::vector<int> active = d.active_edge_ids();
    std::cout << "conway: " << d.seq.str() << "\n"
              << "states: " << lat.states.size() << "\n"
              << "clocked: state " << lat.clocked_index << ", counterclocked: state "
              << lat.counterclocked_index << "\n"
              << "signed sum: " << render(lat.signed_sum) << "\n"
              << "parity sum: " << render(lat.parity_sum) << "\n";
    for (std::size_t k = 0; k < lat.states.size(); ++k) {
        const StateTerm& t = lat.terms[k];
        std::cout << "  " << k << "  [";
        for (std::size_t c = 0; c < lat.states[k].marker.size(); ++c)
            std::cout << (c ? " " : "") << to_string(lat.states[k].marker[c]);
        std::cout << "]  " << render(BiPoly::monomial(t.entry_sign * t.perm_sign, t.i, t.j))
                  << "  cw:";
        for (int eid : available_moves(d, lat.states[k], true))
            std::cout << ' ' << letter_of(active, eid);
        std::cout << "\n";
    }
    if (!dot_path.empty()) std::cout << "wrote " << dot_path << "\n";
    return 0;
}

int run_verify(const std::string& conway, bool json, std::size_t budget) {
    VerificationReport r = verify_link(parse_conway(conway), budget);
    if (json) {
        std::cout << dump_json(report_json(r));
        return r.all_pass ? 0 : 1;
    }
    std::cout << "conway: " << r.conway << "\n"
              << "crossings: " << r.crossings << "\n"
              << "monochromatic sites:";
    if (r.mono_sites.empty()) std::cout << " none";
    for (auto [site, length] : r.mono_sites)
        std::cout << " (site " << site << ", length " << length << ")";
    std::cout << "\n"
              << "delta: " << render(r.delta) << "\n"
              << "delta(-1, 0) = " << r.delta_at_minus1_0
              << ", twist product = " << r.twist_product << "\n"
              << "states: " << r.state_count << "\n";
    for (const CheckResult& c : r.checks) {
        std::cout << "  " << (c.pass ? "pass" : "FAIL") << "  " << c.name;
        if (!c.detail.empty()) std::cout << " (" << c.detail << ")";
        std::cout << "\n";
    }
    for (const std::string& note : r.notes) std::cout << "note: " << note << "\n";
    std::cout << (r.all_pass ? "PASS" : "FAIL") << "\n";
    return r.all_pass ? 0 : 1;
}

int run_sweep(int max_crossings, int jobs, bool json) {
    SweepResult s = sweep_links(max_crossings, jobs);
    if (json) {
        std::cout << dump_json(sweep_json(s));
        return s.failures == 0 ? 0 : 1;
    }
    std::cout << "checked " << s.links << " links with 2.." << s.max_crossings
              << " crossings: " << s.failures << " failures\n";
    for (const std::string& name : s.failed) std::cout << "  FAIL " << name << "\n";
    return s.failures == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Alexander polynomials and clock lattices of rational links"};
    app.require_subcommand(1);

    std::vector<std::string> tokens;
    bool json = false;
    std::size_t budget = 1'000'000;
    std::string dot_path;
    int max_crossings = 0;
    int jobs = 1;

    CLI::App* poly = app.add_subcommand("poly", "two-variable Alexander polynomial");
    poly->add_option("conway", tokens, "Conway notation, e.g. \"2 1 2\"")->required();
    poly->add_flag("--json", json, "machine readable output");

    CLI::App* matrix = app.add_subcommand("matrix", "Alexander matrix and its reduction");
    matrix->add_option("conway", tokens, "Conway notation")->required();
    matrix->add_flag("--json", json, "machine readable output");

    CLI::App* lattice = app.add_subcommand("lattice", "clock lattice state sum");
    lattice->add_option("conway", tokens, "Conway notation")->required();
    lattice->add_flag("--json", json, "machine readable output");
    lattice->add_option("--budget", budget, "maximum number of states");
    lattice->add_option("--dot", dot_path, "write the lattice as a Graphviz digraph");

    CLI::App* verify = app.add_subcommand("verify", "run every check on one link");
    verify->add_option("conway", tokens, "Conway notation")->required();
    verify->add_flag("--json", json, "machine readable output");
    verify->add_option("--budget", budget, "maximum number of states");

    CLI::App* sweep = app.add_subcommand("sweep", "verify the twist product identity for all links");
    sweep->add_option("--max-crossings", max_crossings, "largest crossing number")->required();
    sweep->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
    sweep->add_flag("--json", json, "machine readable output");

    CLI11_PARSE(app, argc, argv);

    try {
        if (poly->parsed()) return run_poly(join_tokens(tokens), json);
        if (matrix->parsed()) return run_matrix(join_tokens(tokens), json);
        if (lattice->parsed()) return run_lattice(join_tokens(tokens), json, budget, dot_path);
        if (verify->parsed()) return run_verify(join_tokens(tokens), json, budget);
        if (sweep->parsed()) return run_sweep(max_crossings, jobs, json);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return is_input_error(e.code()) ? 2 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
