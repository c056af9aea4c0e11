#include "gcl/surface.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "gcl/errors.hpp"

namespace gcl {

int OrbifoldDescriptor::c() const {
    int s = 0;
    for (int k : boundaries) s += k;
    return s;
}

void OrbifoldDescriptor::validate() const {
    if (genus < 0) throw validation_error("DegenerateSurface", "negative genus");
    if (orbifold_points < 0) throw validation_error("DegenerateSurface", "negative orbifold point count");
    for (int k : boundaries)
        if (k < 1) throw validation_error("DegenerateSurface", "boundary component without marked points");
    for (int m : punctures)
        if (m < 1) throw validation_error("DegenerateSurface", "puncture isotropy below 1");
    if (b() + p() == 0) throw validation_error("DegenerateSurface", "no marked points");
    if (orbifold_points == 0 && genus == 0) {
        if (b() == 0 && p() <= 3)
            throw validation_error("DegenerateSurface",
                                   "sphere with " + std::to_string(p()) + " punctures is excluded");
        // The once-punctured monogon stays: its exchange polynomial is fixed to 2.
        if (b() == 1 && c() == 1 && p() == 0)
            throw validation_error("DegenerateSurface", "unpunctured monogon is excluded");
        if (b() == 1 && p() == 0 && (c() == 2 || c() == 3))
            throw validation_error("DegenerateSurface", "unpunctured bigon or triangle is excluded");
    }
}

bool OrbifoldDescriptor::same_as(const OrbifoldDescriptor& o) const {
    auto sorted = [](std::vector<int> v) {
        std::sort(v.begin(), v.end());
        return v;
    };
    return genus == o.genus && orbifold_points == o.orbifold_points &&
           sorted(boundaries) == sorted(o.boundaries) && sorted(punctures) == sorted(o.punctures);
}

std::string OrbifoldDescriptor::str() const {
    std::ostringstream s;
    auto list = [&](const std::vector<int>& v) {
        s << '[';
        for (std::size_t i = 0; i < v.size(); ++i) s << (i ? "," : "") << v[i];
        s << ']';
    };
    s << "g=" << genus << " boundaries=";
    list(boundaries);
    s << " punctures=";
    list(punctures);
    s << " x=" << orbifold_points;
    return s.str();
}

int rank(const OrbifoldDescriptor& d) {
    d.validate();
    int n = 6 * d.genus + 3 * d.b() + 3 * d.p() + 2 * d.orbifold_points + d.c() - 6;
    if (n <= 0) throw validation_error("DegenerateSurface", "rank " + std::to_string(n) + " is not positive");
    return n;
}

std::string side_name(const Side& s) {
    switch (s.kind) {
        case SideKind::Arc: return "a" + std::to_string(s.id);
        case SideKind::Segment: return "s" + std::to_string(s.id);
        case SideKind::Pendant: return "o" + std::to_string(s.id);
    }
    return "?";
}

std::optional<int> Triangle::self_folded_loop() const {
    if (orbifold) return std::nullopt;
    for (int i = 0; i < 3; ++i)
        if (sides[(i + 1) % 3] == sides[(i + 2) % 3] && sides[i] != sides[(i + 1) % 3]) return i;
    return std::nullopt;
}

bool Triangulation::is_surface() const {
    if (orbifold_points != 0) return false;
    for (const auto& p : points)
        if (p.isotropy != 1) return false;
    return true;
}

int Triangulation::isotropy(int point) const { return points.at(point).isotropy; }

std::vector<std::pair<int, int>> Triangulation::slots(const Side& s) const {
    std::vector<std::pair<int, int>> r;
    for (std::size_t t = 0; t < triangles.size(); ++t)
        for (int i = 0; i < 3; ++i)
            if (triangles[t].sides[i] == s) r.emplace_back(static_cast<int>(t), i);
    return r;
}

int Triangulation::degree(int point) const {
    int d = 0;
    for (const auto& t : triangles)
        for (int c : t.corners) d += c == point;
    return d;
}

std::optional<SelfFold> Triangulation::self_fold_with_radius(int arc) const {
    for (std::size_t t = 0; t < triangles.size(); ++t) {
        const Triangle& tr = triangles[t];
        auto l = tr.self_folded_loop();
        if (!l || tr.sides[(*l + 1) % 3] != arc_side(arc)) continue;
        return SelfFold{static_cast<int>(t), tr.sides[*l], arc, tr.corners[(*l + 2) % 3], tr.corners[*l]};
    }
    return std::nullopt;
}

std::optional<SelfFold> Triangulation::self_fold_with_loop(int arc) const {
    for (std::size_t t = 0; t < triangles.size(); ++t) {
        const Triangle& tr = triangles[t];
        auto l = tr.self_folded_loop();
        if (!l || tr.sides[*l] != arc_side(arc)) continue;
        const Side& r = tr.sides[(*l + 1) % 3];
        return SelfFold{static_cast<int>(t), tr.sides[*l], r.id, tr.corners[(*l + 2) % 3], tr.corners[*l]};
    }
    return std::nullopt;
}

std::optional<int> Triangulation::orbifold_triangle_of(int arc) const {
    for (std::size_t t = 0; t < triangles.size(); ++t)
        if (triangles[t].orbifold && triangles[t].sides[0] == arc_side(arc)) return static_cast<int>(t);
    return std::nullopt;
}

bool Triangulation::is_tagged_loop(int arc) const {
    auto sf = self_fold_with_loop(arc);
    return sf && isotropy(sf->puncture) == 1 && !is_orbifold_loop(arc);
}

std::optional<int> Triangulation::bar(int arc) const {
    if (auto sf = self_fold_with_radius(arc); sf && isotropy(sf->puncture) == 1 && sf->loop.is_arc())
        return sf->loop.id;
    if (auto sf = self_fold_with_loop(arc); sf && isotropy(sf->puncture) == 1) return sf->radius;
    return std::nullopt;
}

namespace {

Tag end_tag(const Triangulation& t, int point) {
    return t.points[point].kind == PointKind::Puncture && t.notched[point] ? Tag::Notched : Tag::Plain;
}

Tag toggled(Tag g) { return g == Tag::Plain ? Tag::Notched : Tag::Plain; }

}  // namespace

TaggedArc Triangulation::tagged(int arc) const {
    TaggedArc r;
    if (is_tagged_loop(arc)) {
        auto sf = *self_fold_with_loop(arc);
        r.ends = {sf.base, sf.puncture};
        r.tags = {end_tag(*this, sf.base), toggled(end_tag(*this, sf.puncture))};
        return r;
    }
    r.ends = arcs.at(arc);
    r.tags = {end_tag(*this, r.ends[0]), end_tag(*this, r.ends[1])};
    return r;
}

std::vector<TaggedArc> Triangulation::tagged_arcs() const {
    std::vector<TaggedArc> r;
    for (int i = 0; i < size(); ++i) r.push_back(tagged(i));
    return r;
}

int euler_characteristic(const Triangulation& t) {
    int chi = t.npoints() + static_cast<int>(t.triangles.size()) - t.size() -
              static_cast<int>(t.segments.size());
    int expected = 2 - 2 * t.descriptor.genus - t.descriptor.b();
    if (chi != expected)
        throw invariant_error("EulerMismatch", "triangulation gives " + std::to_string(chi) +
                                                   ", descriptor gives " + std::to_string(expected));
    return chi;
}

namespace {

// Boundary component sizes traced through the segments.
std::vector<int> boundary_cycles(const Triangulation& t, std::vector<std::string>& out) {
    std::map<int, int> next;
    std::map<int, int> ins;
    for (std::size_t s = 0; s < t.segments.size(); ++s) {
        auto [a, b] = t.segments[s];
        if (next.count(a)) out.push_back("boundary point " + std::to_string(a) + " starts two segments");
        next[a] = b;
        ++ins[b];
    }
    std::vector<int> sizes;
    std::set<int> seen;
    for (int p = 0; p < t.npoints(); ++p) {
        if (t.points[p].kind != PointKind::Boundary) continue;
        if (!next.count(p) || ins[p] != 1) {
            out.push_back("boundary point " + std::to_string(p) + " is not on exactly one boundary cycle");
            continue;
        }
        if (seen.count(p)) continue;
        int len = 0;
        for (int q = p; !seen.count(q); q = next.count(q) ? next[q] : p) {
            seen.insert(q);
            ++len;
        }
        sizes.push_back(len);
    }
    return sizes;
}

bool ends_match(const std::array<int, 2>& e, int u, int v) {
    return (e[0] == u && e[1] == v) || (e[0] == v && e[1] == u);
}

}  // namespace

ValidationReport validate(const Triangulation& t, const OrbifoldDescriptor& d) {
    ValidationReport rep;
    auto& out = rep.violations;
    try {
        d.validate();
    } catch (const Error& e) {
        out.push_back(e.what());
    }
    const int np = t.npoints();
    if (static_cast<int>(t.notched.size()) != np) out.push_back("tag vector does not cover the marked points");
    std::vector<int> isotropies;
    for (int p = 0; p < np; ++p) {
        const auto& mp = t.points[p];
        if (mp.isotropy < 1) out.push_back("marked point " + std::to_string(p) + " has isotropy below 1");
        if (mp.kind == PointKind::Boundary) {
            if (mp.isotropy != 1) out.push_back("boundary point " + std::to_string(p) + " has isotropy");
            if (p < static_cast<int>(t.notched.size()) && t.notched[p])
                out.push_back("marked point " + std::to_string(p) + " lies on the boundary and is notched");
        } else {
            isotropies.push_back(mp.isotropy);
        }
    }
    OrbifoldDescriptor found;
    found.genus = d.genus;
    found.boundaries = boundary_cycles(t, out);
    found.punctures = isotropies;
    found.orbifold_points = t.orbifold_points;
    if (!found.same_as(d)) out.push_back("marked points give " + found.str() + ", descriptor says " + d.str());

    for (int a = 0; a < t.size(); ++a) {
        for (int e : t.arcs[a])
            if (e < 0 || e >= np) out.push_back("arc " + std::to_string(a) + " has an endpoint out of range");
        auto n = t.slots(arc_side(a)).size();
        if (n != 2)
            out.push_back("arc " + std::to_string(a) + " occurs in " + std::to_string(n) +
                          " triangle sides, expected 2");
    }
    for (std::size_t s = 0; s < t.segments.size(); ++s) {
        auto n = t.slots(segment_side(static_cast<int>(s))).size();
        if (n != 1)
            out.push_back("boundary segment " + std::to_string(s) + " occurs in " + std::to_string(n) +
                          " triangle sides, expected 1");
    }
    for (int o = 0; o < t.orbifold_points; ++o)
        if (t.slots(Side{SideKind::Pendant, o}).size() != 2)
            out.push_back("orbifold point " + std::to_string(o) + " is not in exactly one orbifold triangle");

    for (std::size_t i = 0; i < t.triangles.size(); ++i) {
        const Triangle& tr = t.triangles[i];
        const std::string where = "triangle " + std::to_string(i);
        if (tr.orbifold) {
            const Side& l = tr.sides[0];
            bool ok = l.is_arc() && tr.sides[1].kind == SideKind::Pendant && tr.sides[1] == tr.sides[2] &&
                      tr.corners[0] == tr.corners[1] && tr.corners[2] == np + tr.sides[1].id &&
                      l.id < t.size() && t.arcs[l.id][0] == tr.corners[0] && t.arcs[l.id][1] == tr.corners[0];
            if (!ok) out.push_back(where + ": malformed orbifold triangle");
            continue;
        }
        for (int k = 0; k < 3; ++k) {
            const Side& s = tr.sides[k];
            int u = tr.corners[k], v = tr.corners[(k + 1) % 3];
            bool ok = false;
            if (s.kind == SideKind::Arc)
                ok = s.id >= 0 && s.id < t.size() && ends_match(t.arcs[s.id], u, v);
            else if (s.kind == SideKind::Segment)
                ok = s.id >= 0 && s.id < static_cast<int>(t.segments.size()) &&
                     t.segments[s.id] == std::array<int, 2>{u, v};
            if (!ok) out.push_back(where + ": side " + side_name(s) + " does not run between its corners");
        }
        if (auto l = tr.self_folded_loop()) {
            int b = tr.corners[(*l + 2) % 3];
            if (t.points[b].kind != PointKind::Puncture || t.degree(b) != 1)
                out.push_back(where + ": self-folded triangle does not enclose a puncture");
        }
    }
    try {
        int n = rank(d);
        if (n != t.size())
            out.push_back("triangulation has " + std::to_string(t.size()) + " arcs, rank is " + std::to_string(n));
    } catch (const Error&) {
    }
    int chi = np + static_cast<int>(t.triangles.size()) - t.size() - static_cast<int>(t.segments.size());
    int expected = 2 - 2 * d.genus - d.b();
    if (chi != expected)
        out.push_back("Euler characteristic " + std::to_string(chi) + " differs from " + std::to_string(expected));
    return rep;
}

std::string to_string(ArcCase c) {
    switch (c) {
        case ArcCase::Generic: return "Generic";
        case ArcCase::LoopOf1SelfFolded: return "LoopOf1SelfFolded";
        case ArcCase::RadiusOf1SelfFolded: return "RadiusOf1SelfFolded";
        case ArcCase::RadiusOfOncePunctured1Bigon: return "RadiusOfOncePunctured1Bigon";
        case ArcCase::RadiusOfMSelfFolded: return "RadiusOfMSelfFolded";
        case ArcCase::OrbifoldLoop: return "OrbifoldLoop";
        case ArcCase::RadiusInOrbifoldLoop: return "RadiusInOrbifoldLoop";
        case ArcCase::SphereOneMPunctureTwoOrbifoldPoints: return "SphereOneMPunctureTwoOrbifoldPoints";
    }
    return "?";
}

namespace {

// Arcs adjacent to corner p, one entry per side end at p.
std::vector<Side> sides_at(const Triangulation& t, int p) {
    std::vector<Side> r;
    for (const auto& tr : t.triangles)
        for (int k = 0; k < 3; ++k)
            if (tr.corners[k] == p) {
                r.push_back(tr.sides[k]);
                r.push_back(tr.sides[(k + 2) % 3]);
            }
    return r;
}

}  // namespace

ArcLocalConfig classify_arc(const Triangulation& t, int arc) {
    if (arc < 0 || arc >= t.size()) throw validation_error("UnknownArc", std::to_string(arc));
    ArcLocalConfig c;
    auto slots = t.slots(arc_side(arc));
    bool all_orbifold = !slots.empty();
    for (auto [ti, k] : slots) all_orbifold = all_orbifold && t.triangles[ti].orbifold;
    if (all_orbifold) {
        c.kind = ArcCase::SphereOneMPunctureTwoOrbifoldPoints;
        c.m = t.isotropy(t.arcs[arc][0]);
        return c;
    }
    if (auto ot = t.orbifold_triangle_of(arc)) {
        c.kind = ArcCase::OrbifoldLoop;
        for (auto [ti, k] : slots) {
            if (ti == *ot) continue;
            const Triangle& tr = t.triangles[ti];
            c.neighbors = {tr.sides[(k + 1) % 3], tr.sides[(k + 2) % 3]};
        }
        return c;
    }
    if (auto sf = t.self_fold_with_radius(arc)) {
        int m = t.isotropy(sf->puncture);
        c.monogon = sf->loop.kind == SideKind::Segment;
        c.neighbors = {sf->loop};
        if (sf->loop.is_arc() && t.is_orbifold_loop(sf->loop.id)) {
            c.kind = ArcCase::RadiusInOrbifoldLoop;
            c.m = m > 1 ? m : t.isotropy(sf->base);
        } else if (m > 1) {
            c.kind = ArcCase::RadiusOfMSelfFolded;
            c.m = m;
        } else {
            c.kind = ArcCase::RadiusOf1SelfFolded;
        }
        return c;
    }
    if (t.is_tagged_loop(arc)) {
        c.kind = ArcCase::LoopOf1SelfFolded;
        c.neighbors = {arc_side(t.self_fold_with_loop(arc)->radius)};
        return c;
    }
    const auto& e = t.arcs[arc];
    if (e[0] != e[1]) {
        for (int a : e) {
            if (t.points[a].kind != PointKind::Puncture || t.isotropy(a) != 1 || t.degree(a) != 2) continue;
            auto around = sides_at(t, a);
            std::set<Side> at(around.begin(), around.end());
            at.erase(arc_side(arc));
            if (at.size() != 1 || !at.begin()->is_arc()) continue;
            const auto& o = t.arcs[at.begin()->id];
            if (o[0] == o[1]) continue;
            c.kind = ArcCase::RadiusOfOncePunctured1Bigon;
            c.neighbors = {*at.begin()};
            return c;
        }
    }
    for (auto [ti, k] : slots) {
        const Triangle& tr = t.triangles[ti];
        c.neighbors.push_back(tr.sides[(k + 1) % 3]);
        c.neighbors.push_back(tr.sides[(k + 2) % 3]);
    }
    return c;
}

Quiver quiver_from_triangulation(const Triangulation& t) {
    if (!t.is_surface())
        throw unsupported_error("UnsupportedConfiguration", "quivers are defined for surface triangulations only");
    const int n = t.size();
    auto members = [&](const Side& s) -> std::vector<int> {
        if (!s.is_arc()) return {};
        if (auto sf = t.self_fold_with_loop(s.id)) return {s.id, sf->radius};
        return {s.id};
    };
    ExchangeMatrix b(n);
    for (const auto& tr : t.triangles) {
        if (tr.orbifold || tr.self_folded_loop()) continue;
        for (int k = 0; k < 3; ++k)
            for (int i : members(tr.sides[k]))
                for (int j : members(tr.sides[(k + 1) % 3])) {
                    ++b(i, j);
                    --b(j, i);
                }
    }
    return b.to_quiver();
}

namespace {

void rotate_to(Triangle& tr, int k) {
    std::rotate(tr.sides.begin(), tr.sides.begin() + k, tr.sides.end());
    std::rotate(tr.corners.begin(), tr.corners.begin() + k, tr.corners.end());
}

void ideal_flip(Triangulation& t, int arc) {
    auto slots = t.slots(arc_side(arc));
    if (slots.size() != 2 || slots[0].first == slots[1].first)
        throw invariant_error("NotFlippable", "arc " + std::to_string(arc) + " is not a quadrilateral diagonal");
    Triangle t1 = t.triangles[slots[0].first], t2 = t.triangles[slots[1].first];
    rotate_to(t1, slots[0].second);
    rotate_to(t2, slots[1].second);
    const Side e = arc_side(arc);
    const int u = t1.corners[0], v = t1.corners[1], w = t1.corners[2], w2 = t2.corners[2];
    Triangle n1{false, {t1.sides[2], t2.sides[1], e}, {w, u, w2}};
    Triangle n2{false, {t2.sides[2], t1.sides[1], e}, {w2, v, w}};
    t.triangles[slots[0].first] = n1;
    t.triangles[slots[1].first] = n2;
    t.arcs[arc] = {w, w2};
}

void swap_labels(Triangulation& t, int a, int b) {
    for (auto& tr : t.triangles)
        for (auto& s : tr.sides)
            if (s.is_arc() && (s.id == a || s.id == b)) s.id = s.id == a ? b : a;
    std::swap(t.arcs[a], t.arcs[b]);
}

Triangulation flip_raw(const Triangulation& t, int arc);

}  // namespace

void normalize(Triangulation& t) {
    for (int a = 0; a < t.size(); ++a) {
        if (!t.is_tagged_loop(a)) continue;
        auto sf = *t.self_fold_with_loop(a);
        if (!t.notched[sf.puncture]) continue;
        t.notched[sf.puncture] = false;
        swap_labels(t, a, sf.radius);
    }
}

Triangulation flip(const Triangulation& t, int arc) {
    Triangulation r = flip_raw(t, arc);
    normalize(r);
    return r;
}

namespace {

Triangulation flip_raw(const Triangulation& t, int arc) {
    ArcLocalConfig c = classify_arc(t, arc);
    Triangulation r = t;
    switch (c.kind) {
        case ArcCase::SphereOneMPunctureTwoOrbifoldPoints:
            r.notched[t.arcs[arc][0]] = !r.notched[t.arcs[arc][0]];
            return r;
        case ArcCase::RadiusOfMSelfFolded:
        case ArcCase::RadiusInOrbifoldLoop: {
            int b = t.self_fold_with_radius(arc)->puncture;
            r.notched[b] = !r.notched[b];
            return r;
        }
        case ArcCase::RadiusOf1SelfFolded: {
            auto sf = *t.self_fold_with_radius(arc);
            r.notched[sf.puncture] = !r.notched[sf.puncture];
            if (c.monogon) return r;
            swap_labels(r, arc, sf.loop.id);
            ideal_flip(r, arc);
            return r;
        }
        case ArcCase::OrbifoldLoop: {
            int ot = *t.orbifold_triangle_of(arc);
            for (auto [ti, k] : t.slots(arc_side(arc))) {
                if (ti == ot) continue;
                Triangle outer = t.triangles[ti];
                rotate_to(outer, (k + 1) % 3);
                // outer is now (s0, s1, loop) with corners (a, q, a)
                const int q = outer.corners[1];
                r.triangles[ti] = Triangle{false, {outer.sides[0], outer.sides[2], outer.sides[1]},
                                           {outer.corners[0], q, q}};
                r.triangles[ot].corners[0] = q;
                r.triangles[ot].corners[1] = q;
                r.arcs[arc] = {q, q};
            }
            return r;
        }
        default:
            ideal_flip(r, arc);
            return r;
    }
}

}  // namespace

std::vector<TaggedArc> iota(const Triangulation& ideal) {
    Triangulation plain = ideal;
    std::fill(plain.notched.begin(), plain.notched.end(), false);
    return plain.tagged_arcs();
}

std::vector<std::array<int, 2>> tau_map(const std::vector<TaggedArc>& tagged,
                                        const std::vector<MarkedPoint>& points) {
    std::vector<std::array<int, 2>> r;
    for (std::size_t i = 0; i < tagged.size(); ++i) {
        const TaggedArc& g = tagged[i];
        std::array<int, 2> ends = g.ends;
        for (std::size_t j = 0; j < tagged.size(); ++j) {
            if (j == i) continue;
            const TaggedArc& h = tagged[j];
            for (int flipside = 0; flipside < 2; ++flipside) {
                std::array<int, 2> he = h.ends;
                std::array<Tag, 2> ht = h.tags;
                if (flipside) {
                    std::swap(he[0], he[1]);
                    std::swap(ht[0], ht[1]);
                }
                if (he != g.ends || g.ends[0] == g.ends[1]) continue;
                for (int k = 0; k < 2; ++k) {
                    int b = g.ends[k];
                    if (points[b].kind != PointKind::Puncture) continue;
                    if (g.tags[1 - k] == ht[1 - k] && g.tags[k] == Tag::Notched && ht[k] == Tag::Plain)
                        ends = {g.ends[1 - k], g.ends[1 - k]};
                }
            }
        }
        r.push_back(ends);
    }
    return r;
}

std::string canonical_form(const Triangulation& t, const std::vector<int>& rename) {
    auto name = [&](const Side& s) {
        Side n = s;
        if (s.is_arc()) n.id = rename.at(s.id);
        return side_name(n);
    };
    std::vector<std::string> tris;
    for (const auto& tr : t.triangles) {
        std::string best;
        for (int k = 0; k < 3; ++k) {
            std::string s;
            for (int i = 0; i < 3; ++i)
                s += name(tr.sides[(k + i) % 3]) + "@" + std::to_string(tr.corners[(k + i) % 3]) + " ";
            if (best.empty() || s < best) best = s;
        }
        tris.push_back(best);
    }
    std::sort(tris.begin(), tris.end());
    std::string out;
    for (std::size_t p = 0; p < t.notched.size(); ++p) out += t.notched[p] ? 'n' : '-';
    for (const auto& s : tris) out += "|" + s;
    return out;
}

}  // namespace gcl
