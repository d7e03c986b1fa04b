#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "ratlink/conway.hpp"

namespace ratlink {

// Fixed compass frame at every crossing; the over-strand always runs with
// positive slope (SW-NE), the under-strand NW-SE. Quadrant indices follow the
// clockwise cycle N -> E -> S -> W.
enum class Quadrant : int { N = 0, E = 1, S = 2, W = 3 };

// Strand attachment directions. Ray r lies between quadrant(r) and its
// clockwise successor, so NE sits between N and E, SE between E and S, etc.
enum class Ray : int { NE = 0, SE = 1, SW = 2, NW = 3 };

enum class ComponentLabel { X, Y };

// How an edge joins the herringbone: inside one twist site, the connector
// from a horizontal site to the following vertical site (HV) or vice versa
// (VH), an arc that skips past an intervening site or comes from the initial
// strands (SkipArc), or one of the two numerator-closure arcs (the NW-NE one
// is the special edge).
enum class EdgeClass { InSite, HV, VH, ClosureArc, SpecialEdge, SkipArc };

// Upper edges run from an over-crossing exit into an under-crossing entry and
// raise their variable's exponent under a clock move; Downers lower it.
enum class DirectionClass { Upper, Downer };

inline Quadrant cw(Quadrant q) { return Quadrant((static_cast<int>(q) + 1) % 4); }
inline Quadrant ccw(Quadrant q) { return Quadrant((static_cast<int>(q) + 3) % 4); }
inline Ray opposite(Ray r) { return Ray((static_cast<int>(r) + 2) % 4); }
inline bool is_over_ray(Ray r) { return static_cast<int>(r) % 2 == 0; } // NE, SW
// The two quadrants flanking a ray, counterclockwise one first.
inline std::array<Quadrant, 2> flanks(Ray r) {
    Quadrant a = Quadrant(static_cast<int>(r));
    return {a, cw(a)};
}
// Marker quadrant from which a clockwise rotation crosses the ray, and the
// quadrant it lands in.
inline Quadrant quadrant_before(Ray r) { return Quadrant(static_cast<int>(r)); }
inline Quadrant quadrant_after(Ray r) { return cw(quadrant_before(r)); }

const char* to_string(Quadrant q);
const char* to_string(Ray r);
const char* to_string(ComponentLabel c);
const char* to_string(EdgeClass c);
const char* to_string(DirectionClass d);

// One strand's passage through a crossing.
struct StrandPass {
    ComponentLabel comp = ComponentLabel::X;
    Ray entry = Ray::NE;
    Ray exit = Ray::SW;
};

struct Crossing {
    int id = 0;            // 1..n, numbered along the herringbone
    int site_index = 0;    // 1-based twist site
    int index_in_site = 0; // 1-based position within the site
    std::array<int, 4> quadrant_region{}; // region id per Quadrant
    StrandPass over;   // rays NE/SW
    StrandPass under;  // rays NW/SE
    std::array<bool, 4> dotted{}; // Alexander dots, tagged with under.comp
    bool special = false;         // incident to both starred regions

    int region(Quadrant q) const { return quadrant_region[static_cast<std::size_t>(q)]; }
    bool dot(Quadrant q) const { return dotted[static_cast<std::size_t>(q)]; }
};

struct Region {
    int id = 0;
    bool starred = false;
};

struct EdgeEnd {
    int crossing = 0;
    Ray ray = Ray::NE;
    friend bool operator==(const EdgeEnd&, const EdgeEnd&) = default;
};

struct Edge {
    int id = 0;       // 1..2n, deterministic
    EdgeEnd tail;     // oriented along the component's travel
    EdgeEnd head;
    ComponentLabel comp = ComponentLabel::X;
    bool active = false;               // borders no starred region
    DirectionClass direction = DirectionClass::Upper;
    EdgeClass cls = EdgeClass::InSite;
    std::array<int, 2> regions{};      // bordering regions, ascending
};

struct SiteColoring {
    int m = 0;                                   // monochromatic site count
    std::vector<std::pair<int, int>> mono_sites; // (site_index, q-hat)
    std::vector<bool> site_mono;                 // per site, index 0 = site 1
};

// Standard-form herringbone diagram of a 2-component rational link under the
// numerator closure. Regions are numbered so the clocked state is the
// identity matching (marker of crossing i sits in region i); region 0 is the
// unbounded starred region, region n+1 the starred NW-NE closure region.
struct LinkDiagram {
    explicit LinkDiagram(TwistSequence s) : seq(std::move(s)) {}

    TwistSequence seq;
    std::vector<Crossing> crossings; // index id-1
    std::vector<Region> regions;     // ids 0..n+1
    std::vector<Edge> edges;         // index id-1
    int component_count = 0;
    SiteColoring coloring;
    bool standard_form = false;

    int n() const { return static_cast<int>(crossings.size()); }
    const Crossing& crossing(int id) const { return crossings[static_cast<std::size_t>(id - 1)]; }
    const Edge& edge(int id) const { return edges[static_cast<std::size_t>(id - 1)]; }
    bool starred(int region_id) const { return regions[static_cast<std::size_t>(region_id)].starred; }

    // Edge id attached at a crossing's ray.
    int edge_at(int crossing_id, Ray r) const {
        return port_edge[static_cast<std::size_t>(crossing_id)][static_cast<std::size_t>(r)];
    }
    std::vector<int> active_edge_ids() const;
    int special_edge_id() const;

    std::vector<std::array<int, 4>> port_edge; // crossing id -> edge id per ray
};

// Full pipeline: assemble the herringbone skeleton, trace and orient the two
// components, place the Alexander dots, classify every edge, and record the
// site coloring. Throws Errc::NotATwoComponentLink for knot closures.
LinkDiagram build_diagram(const TwistSequence& seq);

// The individual passes run by build_diagram, exposed for tests and tools.
// Each is idempotent on a built diagram.
int trace_components(LinkDiagram& d);   // returns component count, throws on knots
void place_dots(LinkDiagram& d);
void classify_edges(LinkDiagram& d);
SiteColoring site_coloring(const LinkDiagram& d);

// Letter label used for the k-th active edge (0-based) in edge-id order:
// "A".."Z" then "A1", "B1", ...
std::string active_edge_letter(std::size_t k);

} // namespace ratlink
