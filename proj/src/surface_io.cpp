#include "gcl/surface_io.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "gcl/errors.hpp"

namespace gcl {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw validation_error("ParseError", where + ": " + what);
}

const json& field(const json& j, const char* key, const std::string& where) {
    if (!j.is_object() || !j.contains(key)) fail(where, std::string("missing \"") + key + "\"");
    return j.at(key);
}

int as_int(const json& j, const std::string& where) {
    if (!j.is_number_integer()) fail(where, "expected an integer");
    return j.get<int>();
}

Tag tag_from(const json& j, const std::string& where) {
    if (j == "plain") return Tag::Plain;
    if (j == "notched") return Tag::Notched;
    fail(where, "tag must be \"plain\" or \"notched\"");
}

Side side_from(const json& j, const std::string& where, int narcs, int nsegs) {
    if (!j.is_string() || j.get<std::string>().size() < 2) fail(where, "expected a side name like \"a0\"");
    const std::string s = j.get<std::string>();
    int id = 0;
    try {
        std::size_t used = 0;
        id = std::stoi(s.substr(1), &used);
        if (used != s.size() - 1) throw std::invalid_argument(s);
    } catch (const std::exception&) {
        fail(where, "bad side name \"" + s + "\"");
    }
    if (s[0] == 'a') {
        if (id < 0 || id >= narcs) fail(where, "unknown arc " + s);
        return arc_side(id);
    }
    if (s[0] == 's') {
        if (id < 0 || id >= nsegs) fail(where, "unknown boundary segment " + s);
        return segment_side(id);
    }
    fail(where, "side must name an arc or a boundary segment");
}

}  // namespace

OrbifoldDescriptor descriptor_from_json(const json& j) {
    OrbifoldDescriptor d;
    const std::string w = "descriptor";
    d.genus = as_int(field(j, "genus", w), w + ".genus");
    d.boundaries = field(j, "boundaries", w).get<std::vector<int>>();
    d.punctures = field(j, "punctures", w).get<std::vector<int>>();
    d.orbifold_points = j.contains("orbifold_points") ? as_int(j.at("orbifold_points"), w) : 0;
    return d;
}

json to_json(const OrbifoldDescriptor& d) {
    return json{{"genus", d.genus},
                {"boundaries", d.boundaries},
                {"punctures", d.punctures},
                {"orbifold_points", d.orbifold_points}};
}

Triangulation triangulation_from_json(const json& j) {
    Triangulation t;
    t.descriptor = descriptor_from_json(field(j, "descriptor", "root"));
    t.orbifold_points = t.descriptor.orbifold_points;

    const json& mps = field(j, "marked_points", "root");
    for (std::size_t i = 0; i < mps.size(); ++i) {
        const std::string w = "marked_points[" + std::to_string(i) + "]";
        if (as_int(field(mps[i], "id", w), w + ".id") != static_cast<int>(i))
            fail(w, "marked point ids must be 0, 1, 2, ... in order");
        MarkedPoint p;
        const json& kind = field(mps[i], "kind", w);
        if (kind == "boundary") p.kind = PointKind::Boundary;
        else if (kind == "puncture") p.kind = PointKind::Puncture;
        else fail(w + ".kind", "expected \"boundary\" or \"puncture\"");
        if (mps[i].contains("isotropy")) p.isotropy = as_int(mps[i].at("isotropy"), w + ".isotropy");
        t.points.push_back(p);
    }
    const int np = t.npoints();
    auto point = [&](const json& v, const std::string& w) {
        int p = as_int(v, w);
        if (p < 0 || p >= np) fail(w, "unknown marked point " + std::to_string(p));
        return p;
    };

    if (j.contains("boundary_segments")) {
        const json& segs = j.at("boundary_segments");
        for (std::size_t i = 0; i < segs.size(); ++i) {
            const std::string w = "boundary_segments[" + std::to_string(i) + "]";
            if (as_int(field(segs[i], "id", w), w + ".id") != static_cast<int>(i))
                fail(w, "segment ids must be 0, 1, 2, ... in order");
            const json& e = field(segs[i], "ends", w);
            if (!e.is_array() || e.size() != 2) fail(w + ".ends", "expected two endpoints");
            t.segments.push_back({point(e[0], w + ".ends[0]"), point(e[1], w + ".ends[1]")});
        }
    }
    const int nsegs = static_cast<int>(t.segments.size());

    std::vector<TaggedArc> given;
    const json& arcs = field(j, "arcs", "root");
    for (std::size_t i = 0; i < arcs.size(); ++i) {
        const std::string w = "arcs[" + std::to_string(i) + "]";
        if (as_int(field(arcs[i], "id", w), w + ".id") != static_cast<int>(i))
            fail(w, "arc ids must be 0, 1, 2, ... in order");
        const json& e = field(arcs[i], "ends", w);
        if (!e.is_array() || e.size() != 2) fail(w + ".ends", "expected two endpoints");
        TaggedArc a;
        a.ends = {point(e[0], w + ".ends[0]"), point(e[1], w + ".ends[1]")};
        if (arcs[i].contains("tags")) {
            const json& g = arcs[i].at("tags");
            if (!g.is_array() || g.size() != 2) fail(w + ".tags", "expected two tags");
            a.tags = {tag_from(g[0], w + ".tags[0]"), tag_from(g[1], w + ".tags[1]")};
        }
        for (int k = 0; k < 2; ++k)
            if (a.tags[k] == Tag::Notched && t.points[a.ends[k]].kind == PointKind::Boundary)
                fail(w + ".tags[" + std::to_string(k) + "]", "an endpoint on the boundary must be tagged plain");
        if (a.ends[0] == a.ends[1] && a.tags[0] != a.tags[1])
            fail(w + ".tags", "both ends of a loop carry the same tag");
        given.push_back(a);
        t.arcs.push_back(a.ends);
    }
    const int na = static_cast<int>(given.size());

    // Self-folded loops may be written as loops or as notched radii.
    std::set<int> radius_form;
    const json& tris = field(j, "triangles", "root");
    for (std::size_t i = 0; i < tris.size(); ++i) {
        const std::string w = "triangles[" + std::to_string(i) + "]";
        if (field(tris[i], "type", w) != "self_folded") continue;
        Side loop = side_from(field(tris[i], "loop", w), w + ".loop", na, nsegs);
        Side rad = side_from(field(tris[i], "radius", w), w + ".radius", na, nsegs);
        int b = point(field(tris[i], "puncture", w), w + ".puncture");
        if (!rad.is_arc()) fail(w + ".radius", "the radius must be an arc");
        const auto& re = t.arcs[rad.id];
        if (re[0] != b && re[1] != b) fail(w + ".radius", "the radius does not end at the puncture");
        int a = re[0] == b ? re[1] : re[0];
        if (loop.is_arc() && t.arcs[loop.id][0] != t.arcs[loop.id][1]) {
            const auto& le = given[loop.id];
            if (!((le.ends[0] == a && le.ends[1] == b) || (le.ends[0] == b && le.ends[1] == a)))
                fail(w + ".loop", "a loop written as a tagged arc must share the radius endpoints");
            radius_form.insert(loop.id);
            t.arcs[loop.id] = {a, a};
        }
    }

    for (std::size_t i = 0; i < tris.size(); ++i) {
        const std::string w = "triangles[" + std::to_string(i) + "]";
        const json& tj = tris[i];
        const json& type = field(tj, "type", w);
        Triangle tr;
        if (type == "self_folded") {
            Side loop = side_from(tj.at("loop"), w + ".loop", na, nsegs);
            Side rad = side_from(tj.at("radius"), w + ".radius", na, nsegs);
            int b = tj.at("puncture").get<int>();
            const auto& re = t.arcs[rad.id];
            int a = re[0] == b ? re[1] : re[0];
            tr.sides = {loop, rad, rad};
            tr.corners = {a, a, b};
        } else if (type == "orbifold") {
            Side loop = side_from(field(tj, "loop", w), w + ".loop", na, nsegs);
            int o = as_int(field(tj, "point", w), w + ".point");
            if (o < 0 || o >= t.orbifold_points) fail(w + ".point", "unknown orbifold point");
            if (!loop.is_arc() || t.arcs[loop.id][0] != t.arcs[loop.id][1])
                fail(w + ".loop", "an orbifold triangle needs a loop arc");
            int a = t.arcs[loop.id][0];
            tr.orbifold = true;
            tr.sides = {loop, Side{SideKind::Pendant, o}, Side{SideKind::Pendant, o}};
            tr.corners = {a, a, np + o};
        } else if (type == "standard") {
            const json& sj = field(tj, "sides", w);
            if (!sj.is_array() || sj.size() != 3) fail(w + ".sides", "expected three sides");
            for (int k = 0; k < 3; ++k)
                tr.sides[k] = side_from(sj[k], w + ".sides[" + std::to_string(k) + "]", na, nsegs);
            auto ends = [&](const Side& s) {
                return s.is_arc() ? t.arcs[s.id] : t.segments[s.id];
            };
            if (tj.contains("corners")) {
                const json& cj = tj.at("corners");
                if (!cj.is_array() || cj.size() != 3) fail(w + ".corners", "expected three corners");
                for (int k = 0; k < 3; ++k) tr.corners[k] = point(cj[k], w + ".corners[" + std::to_string(k) + "]");
            } else {
                std::set<std::array<int, 3>> found;
                for (int start : ends(tr.sides[0])) {
                    std::array<int, 3> c{start, 0, 0};
                    auto other = [&](const Side& s, int x, int& y) {
                        auto e = ends(s);
                        if (e[0] == x) y = e[1];
                        else if (e[1] == x) y = e[0];
                        else return false;
                        return true;
                    };
                    int end2 = 0;
                    if (other(tr.sides[0], c[0], c[1]) && other(tr.sides[1], c[1], c[2]) &&
                        other(tr.sides[2], c[2], end2) && end2 == c[0])
                        found.insert(c);
                }
                if (found.empty()) fail(w, "sides do not close up into a triangle");
                if (found.size() > 1) fail(w, "corners are ambiguous; give \"corners\"");
                tr.corners = *found.begin();
            }
        } else {
            fail(w + ".type", "expected \"standard\", \"self_folded\" or \"orbifold\"");
        }
        t.triangles.push_back(tr);
    }

    // Boundary segments are oriented by the triangle that contains them.
    for (const auto& tr : t.triangles)
        for (int k = 0; k < 3; ++k)
            if (tr.sides[k].kind == SideKind::Segment)
                t.segments[tr.sides[k].id] = {tr.corners[k], tr.corners[(k + 1) % 3]};

    t.notched.assign(np, false);
    std::map<int, Tag> eps;
    auto record = [&](int p, Tag g, const std::string& w) {
        if (t.points[p].kind != PointKind::Puncture) return;
        auto [it, fresh] = eps.emplace(p, g);
        if (!fresh && it->second != g) fail(w, "tags at puncture " + std::to_string(p) + " disagree");
    };
    for (int i = 0; i < na; ++i) {
        const std::string w = "arcs[" + std::to_string(i) + "].tags";
        const TaggedArc& a = given[i];
        if (radius_form.count(i)) {
            int b = t.arcs[i][0] == a.ends[0] ? a.ends[1] : a.ends[0];
            for (int k = 0; k < 2; ++k)
                record(a.ends[k], a.ends[k] == b ? (a.tags[k] == Tag::Plain ? Tag::Notched : Tag::Plain) : a.tags[k], w);
        } else {
            for (int k = 0; k < 2; ++k) record(a.ends[k], a.tags[k], w);
        }
    }
    for (auto [p, g] : eps) t.notched[p] = g == Tag::Notched;
    normalize(t);
    return t;
}

json to_json(const Triangulation& t) {
    json j;
    j["descriptor"] = to_json(t.descriptor);
    json mps = json::array();
    for (int p = 0; p < t.npoints(); ++p) {
        json m{{"id", p}, {"kind", t.points[p].kind == PointKind::Boundary ? "boundary" : "puncture"}};
        if (t.points[p].kind == PointKind::Puncture) m["isotropy"] = t.points[p].isotropy;
        mps.push_back(m);
    }
    j["marked_points"] = mps;
    json segs = json::array();
    for (std::size_t s = 0; s < t.segments.size(); ++s)
        segs.push_back({{"id", s}, {"ends", {t.segments[s][0], t.segments[s][1]}}});
    j["boundary_segments"] = segs;
    json arcs = json::array();
    auto tag = [](Tag g) { return g == Tag::Plain ? "plain" : "notched"; };
    for (int a = 0; a < t.size(); ++a) {
        TaggedArc g = t.tagged(a);
        arcs.push_back({{"id", a}, {"ends", {g.ends[0], g.ends[1]}}, {"tags", {tag(g.tags[0]), tag(g.tags[1])}}});
    }
    j["arcs"] = arcs;
    json tris = json::array();
    for (const auto& tr : t.triangles) {
        if (tr.orbifold) {
            tris.push_back({{"type", "orbifold"}, {"loop", side_name(tr.sides[0])}, {"point", tr.sides[1].id}});
        } else if (auto l = tr.self_folded_loop()) {
            tris.push_back({{"type", "self_folded"},
                            {"loop", side_name(tr.sides[*l])},
                            {"radius", side_name(tr.sides[(*l + 1) % 3])},
                            {"puncture", tr.corners[(*l + 2) % 3]}});
        } else {
            tris.push_back({{"type", "standard"},
                            {"sides", {side_name(tr.sides[0]), side_name(tr.sides[1]), side_name(tr.sides[2])}},
                            {"corners", {tr.corners[0], tr.corners[1], tr.corners[2]}}});
        }
    }
    j["triangles"] = tris;
    return j;
}

std::vector<ActionGenerator> action_from_json(const json& j) {
    std::vector<ActionGenerator> gens;
    const json& gj = field(j, "generators", "action");
    if (!gj.is_array()) fail("action.generators", "expected a list");
    for (std::size_t i = 0; i < gj.size(); ++i) {
        const std::string w = "action.generators[" + std::to_string(i) + "]";
        ActionGenerator g;
        for (auto [key, out] : {std::pair<const char*, Perm*>{"points", &g.points}, {"arcs", &g.arcs}}) {
            const json& p = field(gj[i], key, w);
            if (!p.is_array()) fail(w + "." + key, "expected a list of images");
            for (std::size_t k = 0; k < p.size(); ++k) out->push_back(as_int(p[k], w + "." + key + "[" + std::to_string(k) + "]"));
        }
        gens.push_back(std::move(g));
    }
    return gens;
}

json to_json(const std::vector<ActionGenerator>& gens) {
    json g = json::array();
    for (const auto& x : gens) g.push_back({{"points", x.points}, {"arcs", x.arcs}});
    return json{{"generators", g}};
}

}  // namespace gcl
