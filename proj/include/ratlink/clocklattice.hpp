#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ratlink/bipoly.hpp"
#include "ratlink/diagram.hpp"

namespace ratlink {

// A marker state: one marker per crossing, each sitting in a quadrant whose
// region is not starred, no two markers sharing a region. Equivalently a
// perfect matching of crossings to non-starred regions.
struct ClockState {
    std::vector<Quadrant> marker; // index crossing id-1

    Quadrant at(int crossing_id) const { return marker[static_cast<std::size_t>(crossing_id - 1)]; }
    friend bool operator==(const ClockState&, const ClockState&) = default;
};

// Monomial data of a state: the product of its matrix entries is
// entry_sign * x^i * y^j, and perm_sign is the signature of the matching
// read as a permutation of 1..n. The determinant contribution is
// perm_sign * entry_sign * x^i * y^j.
struct StateTerm {
    int i = 0;
    int j = 0;
    int entry_sign = 1;
    int perm_sign = 1;
};

// The state realizing the identity matching: the marker of crossing i sits
// in region i. Every move available from it is clockwise.
ClockState clocked_state(const LinkDiagram& d);

// A move across an active edge rotates the markers at its two endpoint
// crossings in the same sense; clockwise needs both markers in the quadrant
// counterclockwise of the edge's ray, counterclockwise the reverse.
bool move_available(const LinkDiagram& d, const ClockState& s, int edge_id, bool clockwise);
std::vector<int> available_moves(const LinkDiagram& d, const ClockState& s, bool clockwise);
ClockState apply_move(const LinkDiagram& d, const ClockState& s, int edge_id,
                      bool clockwise); // throws Errc::MoveNotAvailable

StateTerm state_term(const LinkDiagram& d, const ClockState& s);

struct Lattice {
    std::vector<ClockState> states; // breadth-first from the clocked state
    std::vector<StateTerm> terms;   // aligned with states
    std::size_t clocked_index = 0;
    std::size_t counterclocked_index = 0; // the unique state with no clockwise move
    BiPoly parity_sum;  // sum of (-1)^(i+j) x^i y^j over states; +-determinant
    BiPoly signed_sum;  // sum of perm_sign*entry_sign x^i y^j; the determinant
};

// Enumerates every state reachable from the clocked one by moves in both
// senses. Throws Errc::StateBudgetExceeded past max_states.
Lattice enumerate_lattice(const LinkDiagram& d, std::size_t max_states = 1'000'000);

// The y-free slice of the lattice: states found from the clocked one using
// moves on x-colored edges only, in discovery order.
std::vector<ClockState> bottom_row_states(const LinkDiagram& d,
                                          std::size_t max_states = 1'000'000);

// Graphviz digraph: one node per state labeled with its determinant term,
// one arc per clockwise move labeled with the moved edge's letter.
std::string lattice_dot(const LinkDiagram& d, const Lattice& lat);

} // namespace ratlink
