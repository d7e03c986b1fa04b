#include "ratlink/alexander.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

#include "ratlink/error.hpp"

namespace ratlink {

PolyMatrix alexander_matrix(const LinkDiagram& d) {
    const int n = d.n();
    PolyMatrix m(static_cast<std::size_t>(n),
                 std::vector<BiPoly>(static_cast<std::size_t>(n + 2)));
    for (const Crossing& c : d.crossings) {
        BiPoly t = c.under.comp == ComponentLabel::X ? BiPoly::x() : BiPoly::y();
        for (Quadrant q : {Quadrant::N, Quadrant::E, Quadrant::S, Quadrant::W}) {
            BiPoly label = c.dot(q) ? t : BiPoly::one();
            if (q == Quadrant::N || q == Quadrant::S) label = neg(label);
            auto& cell = m[static_cast<std::size_t>(c.id - 1)][static_cast<std::size_t>(c.region(q))];
            cell = add(cell, label);
        }
    }
    return m;
}

PolyMatrix reduced_matrix(const LinkDiagram& d) {
    const int n = d.n();
    PolyMatrix full = alexander_matrix(d);
    PolyMatrix m(static_cast<std::size_t>(n), std::vector<BiPoly>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                full[static_cast<std::size_t>(i)][static_cast<std::size_t>(j + 1)];
    return m;
}

BiPoly reduced_determinant(const LinkDiagram& d) {
    BiPoly det_value = det(reduced_matrix(d));
    if (det_value.is_zero())
        throw Error(Errc::ZeroDeterminant,
                    "reduced Alexander matrix of " + d.seq.str() + " is singular");
    return det_value;
}

BiPoly extract_delta(const BiPoly& reduced_det) {
    BiPoly one_minus_y = sub(BiPoly::one(), BiPoly::y());
    return normalize_unit(divide_exact(reduced_det, one_minus_y));
}

BiPoly link_polynomial(const LinkDiagram& d) { return extract_delta(reduced_determinant(d)); }

std::string render_matrix(const PolyMatrix& m, int first_region) {
    if (m.empty()) return "";
    const std::size_t rows = m.size();
    const std::size_t cols = m.front().size();

    std::vector<std::vector<std::string>> cells(rows, std::vector<std::string>(cols));
    std::vector<std::size_t> width(cols, 0);
    std::vector<std::string> header(cols);
    for (std::size_t j = 0; j < cols; ++j) {
        header[j] = "r" + std::to_string(first_region + static_cast<int>(j));
        width[j] = header[j].size();
    }
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            cells[i][j] = render(m[i][j]);
            width[j] = std::max(width[j], cells[i][j].size());
        }
    }
    std::size_t label_width = 1 + std::to_string(rows).size();

    std::ostringstream out;
    auto pad = [&out](const std::string& s, std::size_t w) {
        for (std::size_t k = s.size(); k < w; ++k) out << ' ';
        out << s;
    };
    pad("", label_width + 2);
    for (std::size_t j = 0; j < cols; ++j) {
        out << (j ? "  " : "");
        pad(header[j], width[j]);
    }
    out << '\n';
    for (std::size_t i = 0; i < rows; ++i) {
        pad("c" + std::to_string(i + 1), label_width);
        out << " [";
        for (std::size_t j = 0; j < cols; ++j) {
            out << (j ? "  " : "");
            pad(cells[i][j], width[j]);
        }
        out << "]\n";
    }
    return out.str();
}

} // namespace ratlink
