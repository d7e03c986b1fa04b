#pragma once

#include <string>

#include "ratlink/bipoly.hpp"
#include "ratlink/diagram.hpp"

namespace ratlink {

// Alexander matrix of the diagram: one row per crossing, one column per
// region (ids 0..n+1). The entry for quadrant q of crossing c is placed in
// column region(q); it is the under-strand's variable when q is dotted and 1
// otherwise, positive on the W and E quadrants and negative on N and S.
PolyMatrix alexander_matrix(const LinkDiagram& d);

// The same matrix with the two starred columns (0 and n+1) struck: n x n,
// column k holding region k+1.
PolyMatrix reduced_matrix(const LinkDiagram& d);

// Determinant of the reduced matrix. Throws Errc::ZeroDeterminant if it
// vanishes (it never does for a standard-form 2-component diagram).
BiPoly reduced_determinant(const LinkDiagram& d);

// Divide a reduced determinant by (1 - y) and normalize the unit so terms of
// even total degree are positive. The result is the two-variable Alexander
// polynomial up to the canonical unit.
BiPoly extract_delta(const BiPoly& reduced_det);

// extract_delta(reduced_determinant(d)).
BiPoly link_polynomial(const LinkDiagram& d);

// Plain-text table with aligned cells; columns are labeled r<first_region>,
// r<first_region+1>, ... and rows c1..cn.
std::string render_matrix(const PolyMatrix& m, int first_region);

} // namespace ratlink
