#include "ratlink/diagram.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

#include "ratlink/error.hpp"

namespace ratlink {

namespace {

void require(bool cond, const char* msg) {
    if (!cond) throw std::logic_error(std::string("diagram invariant violated: ") + msg);
}

int qi(Quadrant q) { return static_cast<int>(q); }
int ri(Ray r) { return static_cast<int>(r); }

// ---- Incremental tangle assembly ----

// The four free ends of the partial tangle, by compass post.
constexpr int kNW = 0, kNE = 1, kSW = 2, kSE = 3;

// A pending end either terminates at a crossing port already, or the strand
// still runs across the tangle to another post (mate).
struct PendingEnd {
    bool is_port = false;
    EdgeEnd port{};
    int mate = -1;
};

struct RawEdge {
    EdgeEnd a, b;
    EdgeClass cls = EdgeClass::InSite;
};

// Sort key giving deterministic edge ids: lower crossing pair first, ties
// broken by the attachment rays (NE < SE < SW < NW).
std::tuple<int, int, int, int> edge_key(const RawEdge& e) {
    EdgeEnd u = e.a, v = e.b;
    if (std::make_pair(v.crossing, ri(v.ray)) < std::make_pair(u.crossing, ri(u.ray))) std::swap(u, v);
    return {u.crossing, v.crossing, ri(u.ray), ri(v.ray)};
}

// Builds crossings, provisional regions, and the raw edge list by sliding
// twist sites onto the tangle, then closes NW-NE and SW-SE and renumbers the
// regions so the marker of crossing i lands in region i.
void assemble(LinkDiagram& d) {
    const TwistSequence& seq = d.seq;
    const int s = seq.site_count();
    const int n = seq.total_crossings();
    d.crossings.assign(static_cast<std::size_t>(n), Crossing{});

    // Provisional region ids; the frame regions get merged or renamed at the
    // end. reg_n and reg_w never change after initialization, reg_e advances
    // with each horizontal crossing and reg_s with each vertical one.
    int next_region = 0;
    const int outer = next_region++;
    int reg_n, reg_e, reg_s, reg_w;
    std::array<PendingEnd, 4> ends{};
    if (seq.orientation(1) == SiteOrientation::Horizontal) {
        reg_n = next_region++;
        reg_e = reg_w = next_region++;
        reg_s = next_region++;
        ends[kNW].mate = kNE;
        ends[kNE].mate = kNW;
        ends[kSW].mate = kSE;
        ends[kSE].mate = kSW;
    } else {
        reg_n = reg_s = next_region++;
        reg_w = next_region++;
        reg_e = next_region++;
        ends[kNW].mate = kSW;
        ends[kSW].mate = kNW;
        ends[kNE].mate = kSE;
        ends[kSE].mate = kNE;
    }

    std::vector<RawEdge> raw;
    raw.reserve(static_cast<std::size_t>(2 * n));

    // Attach crossing port p to the strand currently ending at a post. A port
    // end yields an edge (classified by how it bridges sites); a post-linked
    // end just moves the strand's terminus.
    auto join = [&](int post, EdgeEnd p, int site_k, int idx_in_site) {
        PendingEnd e = ends[post];
        if (!e.is_port) {
            ends[e.mate] = PendingEnd{true, p, -1};
            return;
        }
        EdgeClass cls;
        if (d.crossings[static_cast<std::size_t>(e.port.crossing - 1)].site_index == site_k) {
            cls = EdgeClass::InSite;
        } else {
            require(idx_in_site == 1, "cross-site edge away from a site's first crossing");
            bool horizontal = seq.orientation(site_k) == SiteOrientation::Horizontal;
            if (post == kSE) cls = horizontal ? EdgeClass::VH : EdgeClass::HV;
            else cls = EdgeClass::SkipArc;
        }
        raw.push_back(RawEdge{e.port, p, cls});
    };

    int cid = 0;
    for (int k = 1; k <= s; ++k) {
        const bool horizontal = seq.orientation(k) == SiteOrientation::Horizontal;
        for (int t = 1; t <= seq.site(k); ++t) {
            ++cid;
            Crossing& c = d.crossings[static_cast<std::size_t>(cid - 1)];
            c.id = cid;
            c.site_index = k;
            c.index_in_site = t;
            if (horizontal) {
                join(kNE, EdgeEnd{cid, Ray::NW}, k, t);
                join(kSE, EdgeEnd{cid, Ray::SW}, k, t);
                c.quadrant_region[qi(Quadrant::N)] = reg_n;
                c.quadrant_region[qi(Quadrant::W)] = reg_e;
                c.quadrant_region[qi(Quadrant::S)] = reg_s;
                reg_e = next_region++;
                c.quadrant_region[qi(Quadrant::E)] = reg_e;
                ends[kNE] = PendingEnd{true, EdgeEnd{cid, Ray::NE}, -1};
                ends[kSE] = PendingEnd{true, EdgeEnd{cid, Ray::SE}, -1};
            } else {
                join(kSW, EdgeEnd{cid, Ray::NW}, k, t);
                join(kSE, EdgeEnd{cid, Ray::NE}, k, t);
                c.quadrant_region[qi(Quadrant::N)] = reg_s;
                c.quadrant_region[qi(Quadrant::W)] = reg_w;
                c.quadrant_region[qi(Quadrant::E)] = reg_e;
                reg_s = next_region++;
                c.quadrant_region[qi(Quadrant::S)] = reg_s;
                ends[kSW] = PendingEnd{true, EdgeEnd{cid, Ray::SW}, -1};
                ends[kSE] = PendingEnd{true, EdgeEnd{cid, Ray::SE}, -1};
            }
        }
    }

    // Numerator closure: join the two top posts and the two bottom posts.
    for (int post : {kNW, kNE, kSW, kSE}) require(ends[post].is_port, "closure post still post-linked");
    raw.push_back(RawEdge{ends[kNW].port, ends[kNE].port, EdgeClass::SpecialEdge});
    raw.push_back(RawEdge{ends[kSW].port, ends[kSE].port, EdgeClass::ClosureArc});
    require(static_cast<int>(raw.size()) == 2 * n, "edge count must be 2n");

    // ---- Region renumbering ----
    // The west, east, and outer provisional regions fuse into starred region
    // 0; the north frame region becomes starred region n+1. Each remaining
    // region is the marker region of exactly one crossing: the unique
    // non-starred quadrant whose clockwise predecessor is starred.
    require(next_region == n + 4, "provisional region count");
    std::vector<int> remap(static_cast<std::size_t>(next_region), -1);
    remap[static_cast<std::size_t>(outer)] = 0;
    remap[static_cast<std::size_t>(reg_w)] = 0;
    remap[static_cast<std::size_t>(reg_e)] = 0;
    remap[static_cast<std::size_t>(reg_n)] = n + 1;
    auto starred_prov = [&](int r) { return r == outer || r == reg_w || r == reg_e || r == reg_n; };

    for (const Crossing& c : d.crossings) {
        int found = -1;
        for (int q = 0; q < 4; ++q) {
            int here = c.quadrant_region[static_cast<std::size_t>(q)];
            int pred = c.quadrant_region[static_cast<std::size_t>((q + 3) % 4)];
            if (!starred_prov(here) && starred_prov(pred)) {
                require(found == -1, "marker quadrant not unique");
                found = q;
            }
        }
        require(found != -1, "marker quadrant missing");
        int prov = c.quadrant_region[static_cast<std::size_t>(found)];
        require(remap[static_cast<std::size_t>(prov)] == -1, "two crossings claim one region");
        remap[static_cast<std::size_t>(prov)] = c.id;
    }
    for (int r : remap) require(r != -1, "region left unnumbered");

    for (Crossing& c : d.crossings) {
        for (int q = 0; q < 4; ++q) {
            int& r = c.quadrant_region[static_cast<std::size_t>(q)];
            r = remap[static_cast<std::size_t>(r)];
        }
        for (int q = 0; q < 4; ++q)
            for (int p = q + 1; p < 4; ++p)
                require(c.quadrant_region[static_cast<std::size_t>(q)] != c.quadrant_region[static_cast<std::size_t>(p)],
                        "quadrants of one crossing share a region");
    }

    d.regions.assign(static_cast<std::size_t>(n + 2), Region{});
    for (int r = 0; r <= n + 1; ++r) {
        d.regions[static_cast<std::size_t>(r)] = Region{r, r == 0 || r == n + 1};
    }

    // ---- Deterministic edge ids and the port table ----
    std::sort(raw.begin(), raw.end(),
              [](const RawEdge& x, const RawEdge& y) { return edge_key(x) < edge_key(y); });
    d.edges.assign(raw.size(), Edge{});
    d.port_edge.assign(static_cast<std::size_t>(n + 1), {-1, -1, -1, -1});
    for (std::size_t i = 0; i < raw.size(); ++i) {
        Edge& e = d.edges[i];
        e.id = static_cast<int>(i) + 1;
        e.tail = raw[i].a;
        e.head = raw[i].b;
        e.cls = raw[i].cls;
        for (const EdgeEnd* p : {&e.tail, &e.head}) {
            int& slot = d.port_edge[static_cast<std::size_t>(p->crossing)][static_cast<std::size_t>(ri(p->ray))];
            require(slot == -1, "two edges attached to one port");
            slot = e.id;
        }
    }
    for (int c = 1; c <= n; ++c)
        for (int r = 0; r < 4; ++r) require(d.edge_at(c, Ray(r)) != -1, "port without an edge");
}

} // namespace

// ---- Component tracing ----

int trace_components(LinkDiagram& d) {
    const int n = d.n();
    std::vector<char> seen(d.edges.size(), 0);

    // Walk a component from a known exit port, orienting every edge traversed
    // and recording the strand pass at each crossing it runs through.
    auto walk = [&](ComponentLabel comp, EdgeEnd start_exit) {
        int count = 0;
        EdgeEnd cur = start_exit;
        do {
            Edge& e = d.edges[static_cast<std::size_t>(d.edge_at(cur.crossing, cur.ray) - 1)];
            require(!seen[static_cast<std::size_t>(e.id - 1)], "edge traversed twice");
            seen[static_cast<std::size_t>(e.id - 1)] = 1;
            if (!(e.tail == cur)) std::swap(e.tail, e.head);
            require(e.tail == cur, "edge not attached where expected");
            e.comp = comp;
            Crossing& c = d.crossings[static_cast<std::size_t>(e.head.crossing - 1)];
            Ray entry = e.head.ray;
            StrandPass& pass = is_over_ray(entry) ? c.over : c.under;
            pass.comp = comp;
            pass.entry = entry;
            pass.exit = opposite(entry);
            ++count;
            cur = EdgeEnd{e.head.crossing, opposite(entry)};
        } while (!(cur == start_exit));
        return count;
    };

    // In standard form the under-strand leaves crossing 1 to the NW through
    // the special edge; call that component y. The over-strand leaves to the
    // NE; call it x.
    int y_edges = walk(ComponentLabel::Y, EdgeEnd{1, Ray::NW});
    if (y_edges == 2 * n) {
        throw Error(Errc::NotATwoComponentLink,
                    "numerator closure of " + d.seq.str() +
                        " is a knot (1 component); a 2-component link is required");
    }
    int x_edges = walk(ComponentLabel::X, EdgeEnd{1, Ray::NE});
    require(y_edges + x_edges == 2 * n, "component walks must cover every edge");
    d.component_count = 2;
    return 2;
}

// ---- Alexander dots ----

void place_dots(LinkDiagram& d) {
    for (Crossing& c : d.crossings) {
        c.dotted = {false, false, false, false};
        if (c.under.exit == Ray::NW) {
            c.dotted[qi(Quadrant::W)] = true;
            c.dotted[qi(Quadrant::S)] = true;
        } else {
            require(c.under.exit == Ray::SE, "under-strand must exit NW or SE");
            c.dotted[qi(Quadrant::E)] = true;
            c.dotted[qi(Quadrant::N)] = true;
        }
    }
}

// ---- Edge classification ----

void classify_edges(LinkDiagram& d) {
    for (Edge& e : d.edges) {
        auto ft = flanks(e.tail.ray);
        auto fh = flanks(e.head.ray);
        const Crossing& ct = d.crossing(e.tail.crossing);
        const Crossing& ch = d.crossing(e.head.crossing);
        std::array<int, 2> rt{ct.region(ft[0]), ct.region(ft[1])};
        std::array<int, 2> rh{ch.region(fh[0]), ch.region(fh[1])};
        std::sort(rt.begin(), rt.end());
        std::sort(rh.begin(), rh.end());
        require(rt == rh, "edge borders different regions at its two ends");
        e.regions = rt;
        e.active = !d.starred(rt[0]) && !d.starred(rt[1]);
        require(is_over_ray(e.tail.ray) != is_over_ray(e.head.ray), "edge must join an over exit to an under entry");
        e.direction = is_over_ray(e.tail.ray) ? DirectionClass::Upper : DirectionClass::Downer;
    }
}

// ---- Twist-site coloring ----

SiteColoring site_coloring(const LinkDiagram& d) {
    SiteColoring col;
    const int s = d.seq.site_count();
    col.site_mono.assign(static_cast<std::size_t>(s), false);
    for (int k = 1; k <= s; ++k) {
        bool first = true;
        bool mono = false;
        for (const Crossing& c : d.crossings) {
            if (c.site_index != k) continue;
            bool here = c.over.comp == c.under.comp;
            if (first) {
                mono = here;
                first = false;
            } else {
                require(mono == here, "coloring differs within one twist site");
            }
        }
        require(!first, "twist site without crossings");
        col.site_mono[static_cast<std::size_t>(k - 1)] = mono;
        if (mono) col.mono_sites.emplace_back(k, d.seq.site(k));
    }
    col.m = static_cast<int>(col.mono_sites.size());
    return col;
}

// ---- Full pipeline ----

LinkDiagram build_diagram(const TwistSequence& seq) {
    LinkDiagram d(seq);
    assemble(d);
    trace_components(d);
    place_dots(d);
    classify_edges(d);
    d.coloring = site_coloring(d);

    const int n = d.n();
    int specials = 0;
    for (Crossing& c : d.crossings) {
        bool outer = false, top = false;
        for (int q = 0; q < 4; ++q) {
            int r = c.quadrant_region[static_cast<std::size_t>(q)];
            outer = outer || r == 0;
            top = top || r == n + 1;
        }
        c.special = outer && top;
        specials += c.special ? 1 : 0;
    }
    require(specials == 2, "exactly two special crossings expected");
    require(d.crossings.front().special && d.crossings.back().special, "end crossings must be special");

    int special_edges = 0, closure_arcs = 0;
    for (const Edge& e : d.edges) {
        special_edges += e.cls == EdgeClass::SpecialEdge ? 1 : 0;
        closure_arcs += e.cls == EdgeClass::ClosureArc ? 1 : 0;
    }
    require(special_edges == 1 && closure_arcs == 1, "closure must contribute one special edge and one arc");

    d.standard_form = true;
    return d;
}

// ---- Small helpers ----

std::vector<int> LinkDiagram::active_edge_ids() const {
    std::vector<int> out;
    for (const Edge& e : edges)
        if (e.active) out.push_back(e.id);
    return out;
}

int LinkDiagram::special_edge_id() const {
    for (const Edge& e : edges)
        if (e.cls == EdgeClass::SpecialEdge) return e.id;
    throw std::logic_error("diagram has no special edge");
}

std::string active_edge_letter(std::size_t k) {
    std::string out(1, static_cast<char>('A' + k % 26));
    if (k >= 26) out += std::to_string(k / 26);
    return out;
}

const char* to_string(Quadrant q) {
    switch (q) {
        case Quadrant::N: return "N";
        case Quadrant::E: return "E";
        case Quadrant::S: return "S";
        case Quadrant::W: return "W";
    }
    return "?";
}

const char* to_string(Ray r) {
    switch (r) {
        case Ray::NE: return "NE";
        case Ray::SE: return "SE";
        case Ray::SW: return "SW";
        case Ray::NW: return "NW";
    }
    return "?";
}

const char* to_string(ComponentLabel c) {
    return c == ComponentLabel::X ? "x" : "y";
}

const char* to_string(EdgeClass c) {
    switch (c) {
        case EdgeClass::InSite: return "in_site";
        case EdgeClass::HV: return "hv";
        case EdgeClass::VH: return "vh";
        case EdgeClass::ClosureArc: return "closure_arc";
        case EdgeClass::SpecialEdge: return "special_edge";
        case EdgeClass::SkipArc: return "skip_arc";
    }
    return "?";
}

const char* to_string(DirectionClass d) {
    return d == DirectionClass::Upper ? "upper" : "downer";
}

} // namespace ratlink
