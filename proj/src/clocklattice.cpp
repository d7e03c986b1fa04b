#include "ratlink/clocklattice.hpp"

#include <deque>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "ratlink/error.hpp"

namespace ratlink {

namespace {

void require(bool cond, const char* msg) {
    if (!cond) throw std::logic_error(std::string("lattice invariant violated: ") + msg);
}

std::string encode(const ClockState& s) {
    std::string key(s.marker.size(), '0');
    for (std::size_t i = 0; i < s.marker.size(); ++i)
        key[i] = static_cast<char>('0' + static_cast<int>(s.marker[i]));
    return key;
}

int permutation_sign(const std::vector<int>& p) {
    std::vector<char> seen(p.size(), 0);
    int sign = 1;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (seen[i]) continue;
        std::size_t len = 0;
        for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(p[j])) {
            seen[j] = 1;
            ++len;
        }
        if (len % 2 == 0) sign = -sign;
    }
    return sign;
}

// Generic breadth-first walk over states; filter selects which edges may
// move. Returns states in discovery order.
template <typename EdgeFilter>
std::vector<ClockState> explore(const LinkDiagram& d, std::size_t max_states, EdgeFilter usable) {
    std::vector<ClockState> states{clocked_state(d)};
    std::unordered_map<std::string, std::size_t> index{{encode(states[0]), 0}};
    std::deque<std::size_t> queue{0};
    while (!queue.empty()) {
        std::size_t at = queue.front();
        queue.pop_front();
        for (bool clockwise : {true, false}) {
            for (const Edge& e : d.edges) {
                if (!e.active || !usable(e)) continue;
                ClockState cur = states[at];
                if (!move_available(d, cur, e.id, clockwise)) continue;
                ClockState next = apply_move(d, cur, e.id, clockwise);
                std::string key = encode(next);
                if (index.count(key)) continue;
                if (states.size() >= max_states)
                    throw Error(Errc::StateBudgetExceeded,
                                "state count for " + d.seq.str() + " exceeds " +
                                    std::to_string(max_states));
                index.emplace(std::move(key), states.size());
                states.push_back(std::move(next));
                queue.push_back(states.size() - 1);
            }
        }
    }
    return states;
}

} // namespace

ClockState clocked_state(const LinkDiagram& d) {
    ClockState s;
    s.marker.resize(static_cast<std::size_t>(d.n()), Quadrant::N);
    for (const Crossing& c : d.crossings) {
        bool found = false;
        for (Quadrant q : {Quadrant::N, Quadrant::E, Quadrant::S, Quadrant::W}) {
            if (c.region(q) == c.id) {
                s.marker[static_cast<std::size_t>(c.id - 1)] = q;
                found = true;
            }
        }
        require(found, "crossing without a marker quadrant for its own region");
    }
    return s;
}

bool move_available(const LinkDiagram& d, const ClockState& s, int edge_id, bool clockwise) {
    const Edge& e = d.edge(edge_id);
    if (!e.active) return false;
    for (const EdgeEnd& end : {e.tail, e.head}) {
        Quadrant need = clockwise ? quadrant_before(end.ray) : quadrant_after(end.ray);
        if (s.at(end.crossing) != need) return false;
    }
    return true;
}

std::vector<int> available_moves(const LinkDiagram& d, const ClockState& s, bool clockwise) {
    std::vector<int> out;
    for (const Edge& e : d.edges)
        if (e.active && move_available(d, s, e.id, clockwise)) out.push_back(e.id);
    return out;
}

ClockState apply_move(const LinkDiagram& d, const ClockState& s, int edge_id, bool clockwise) {
    if (!move_available(d, s, edge_id, clockwise))
        throw Error(Errc::MoveNotAvailable,
                    std::string(clockwise ? "clockwise" : "counterclockwise") +
                        " move across edge " + std::to_string(edge_id) + " is not available");
    const Edge& e = d.edge(edge_id);
    ClockState next = s;
    for (const EdgeEnd& end : {e.tail, e.head}) {
        Quadrant& q = next.marker[static_cast<std::size_t>(end.crossing - 1)];
        q = clockwise ? cw(q) : ccw(q);
    }
    return next;
}

StateTerm state_term(const LinkDiagram& d, const ClockState& s) {
    StateTerm t;
    std::vector<int> matching(static_cast<std::size_t>(d.n()), -1);
    for (const Crossing& c : d.crossings) {
        Quadrant q = s.at(c.id);
        int region = c.region(q);
        require(region >= 1 && region <= d.n(), "marker in a starred region");
        require(matching[static_cast<std::size_t>(region - 1)] == -1, "two markers share a region");
        matching[static_cast<std::size_t>(region - 1)] = c.id - 1;
        if (q == Quadrant::N || q == Quadrant::S) t.entry_sign = -t.entry_sign;
        if (c.dot(q)) {
            if (c.under.comp == ComponentLabel::X) ++t.i;
            else ++t.j;
        }
    }
    t.perm_sign = permutation_sign(matching);
    return t;
}

Lattice enumerate_lattice(const LinkDiagram& d, std::size_t max_states) {
    Lattice lat;
    lat.states = explore(d, max_states, [](const Edge&) { return true; });
    lat.terms.reserve(lat.states.size());
    int no_clockwise = 0;
    for (std::size_t k = 0; k < lat.states.size(); ++k) {
        StateTerm t = state_term(d, lat.states[k]);
        lat.terms.push_back(t);
        lat.parity_sum = add(lat.parity_sum, BiPoly::monomial((t.i + t.j) % 2 == 0 ? 1 : -1, t.i, t.j));
        lat.signed_sum = add(lat.signed_sum, BiPoly::monomial(t.entry_sign * t.perm_sign, t.i, t.j));
        if (available_moves(d, lat.states[k], true).empty()) {
            lat.counterclocked_index = k;
            ++no_clockwise;
        }
    }
    require(no_clockwise == 1, "lattice must have exactly one clockwise-terminal state");
    return lat;
}

std::vector<ClockState> bottom_row_states(const LinkDiagram& d, std::size_t max_states) {
    require(state_term(d, clocked_state(d)).j == 0, "clocked term must be y-free");
    std::vector<ClockState> states =
        explore(d, max_states, [](const Edge& e) { return e.comp == ComponentLabel::X; });
    for (const ClockState& s : states)
        require(state_term(d, s).j == 0, "x-colored moves must keep the term y-free");
    return states;
}

std::string lattice_dot(const LinkDiagram& d, const Lattice& lat) {
    // Letters follow edge-id order of the active edges.
    std::vector<int> active = d.active_edge_ids();
    auto letter = [&](int edge_id) {
        for (std::size_t k = 0; k < active.size(); ++k)
            if (active[k] == edge_id) return active_edge_letter(k);
        return std::string("?");
    };
    std::unordered_map<std::string, std::size_t> index;
    for (std::size_t k = 0; k < lat.states.size(); ++k) index.emplace(encode(lat.states[k]), k);

    std::ostringstream out;
    out << "digraph clock_lattice {\n  rankdir=TB;\n  node [shape=box];\n";
    for (std::size_t k = 0; k < lat.states.size(); ++k) {
        const StateTerm& t = lat.terms[k];
        out << "  s" << k << " [label=\""
            << render(BiPoly::monomial(t.entry_sign * t.perm_sign, t.i, t.j)) << "\"];\n";
    }
    for (std::size_t k = 0; k < lat.states.size(); ++k) {
        for (int edge_id : available_moves(d, lat.states[k], true)) {
            ClockState next = apply_move(d, lat.states[k], edge_id, true);
            out << "  s" << k << " -> s" << index.at(encode(next)) << " [label=\""
                << letter(edge_id) << "\"];\n";
        }
    }
    out << "}\n";
    return out.str();
}

} // namespace ratlink
