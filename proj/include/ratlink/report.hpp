#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "ratlink/bipoly.hpp"
#include "ratlink/clocklattice.hpp"
#include "ratlink/conway.hpp"
#include "ratlink/diagram.hpp"

namespace ratlink {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail; // filled in when something is worth saying
};

// Everything the verify command reports for one link: the polynomial, the
// twist-site product identity, and the structural checks behind it.
struct VerificationReport {
    std::string conway;
    int crossings = 0;
    int mono_site_count = 0;
    std::vector<std::pair<int, int>> mono_sites; // (site index, length)
    BiPoly delta;                                // canonical Alexander polynomial
    BiPoly determinant;                          // det of the reduced matrix
    mpz_class delta_at_minus1_0 = 0;             // Delta(-1, 0)
    mpz_class twist_product = 1;                 // product of (length + 1) over mono sites
    mpz_class delta_at_minus1_minus1 = 0;        // Delta(-1, -1)
    mpz_class state_count = 0;                   // lattice size
    bool main_identity = false;                  // Delta(-1,0) == twist_product
    std::vector<CheckResult> checks;
    std::vector<std::string> notes;
    bool all_pass = false;
};

VerificationReport verify_link(const TwistSequence& seq, std::size_t budget = 1'000'000);

struct SweepResult {
    int max_crossings = 0;
    long links = 0;
    long failures = 0;
    std::vector<std::string> failed; // conway strings of failing links, sorted
};

// Checks Delta(-1,0) == product of (length+1) over monochromatic sites for
// every 2-component rational link with 2..max_crossings crossings.
SweepResult sweep_links(int max_crossings, int jobs = 1);

// Edge ids along one component's cycle, starting from the given exit port.
std::vector<int> component_cycle(const LinkDiagram& d, EdgeEnd start_exit);

// The cascade chain of a monochromatic site: its active in-site edges plus
// the x-colored connector tied to it (outgoing for a horizontal site,
// incoming for a vertical one), ascending edge id.
std::vector<int> cascade_chain(const LinkDiagram& d, int site);

} // namespace ratlink
