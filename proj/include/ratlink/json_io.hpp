#pragma once

#include <string>

#include "json.hpp"

#include "ratlink/alexander.hpp"
#include "ratlink/bipoly.hpp"
#include "ratlink/clocklattice.hpp"
#include "ratlink/diagram.hpp"
#include "ratlink/report.hpp"

namespace ratlink {

// All exports use ordered maps and carry big integers as decimal strings, so
// identical inputs always serialize to identical bytes.
using ordered_json = nlohmann::ordered_json;

ordered_json poly_json(const BiPoly& p);
ordered_json matrix_json(const PolyMatrix& m, int first_region);
ordered_json diagram_json(const LinkDiagram& d);
ordered_json lattice_json(const LinkDiagram& d, const Lattice& lat);
ordered_json report_json(const VerificationReport& r);
ordered_json sweep_json(const SweepResult& s);

// Two-space indentation plus a trailing newline.
std::string dump_json(const ordered_json& j);

} // namespace ratlink
