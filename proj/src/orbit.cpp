#include "gcl/orbit.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "gcl/errors.hpp"

namespace gcl {

bool SurfaceSymmetry::is_identity() const {
    return gcl::is_identity(points) && gcl::is_identity(arcs) && gcl::is_identity(segments) &&
           gcl::is_identity(triangles);
}

namespace {

using TriKey = std::array<int, 9>;

TriKey key_of(const std::array<Side, 3>& sides, const std::array<int, 3>& corners) {
    TriKey best{};
    for (int r = 0; r < 3; ++r) {
        TriKey k{};
        for (int i = 0; i < 3; ++i) {
            const Side& s = sides[(r + i) % 3];
            k[3 * i] = static_cast<int>(s.kind);
            k[3 * i + 1] = s.id;
            k[3 * i + 2] = corners[(r + i) % 3];
        }
        if (r == 0 || k < best) best = k;
    }
    return best;
}

std::map<TriKey, int> triangle_index(const Triangulation& t) {
    std::map<TriKey, int> idx;
    for (int i = 0; i < static_cast<int>(t.triangles.size()); ++i)
        idx.emplace(key_of(t.triangles[i].sides, t.triangles[i].corners), i);
    return idx;
}

Side image(const Side& s, const Perm& arcs, const Perm& segs) {
    if (s.kind == SideKind::Arc) return arc_side(arcs[s.id]);
    if (s.kind == SideKind::Segment) return segment_side(segs[s.id]);
    return s;
}

enum class Match { Ok, Reversed, Missing };

// Triangle permutation induced by a cell map, or how it fails.
Match triangle_perm(const Triangulation& t, const std::map<TriKey, int>& idx, const Perm& points,
                    const Perm& arcs, const Perm& segs, Perm& out, std::string& witness) {
    out.assign(t.triangles.size(), -1);
    for (int i = 0; i < static_cast<int>(t.triangles.size()); ++i) {
        const Triangle& tr = t.triangles[i];
        std::array<Side, 3> s;
        std::array<int, 3> c;
        for (int k = 0; k < 3; ++k) {
            s[k] = image(tr.sides[k], arcs, segs);
            c[k] = t.is_orbifold_vertex(tr.corners[k]) ? tr.corners[k] : points[tr.corners[k]];
        }
        auto it = idx.find(key_of(s, c));
        if (it != idx.end()) {
            out[i] = it->second;
            continue;
        }
        witness = "triangle " + std::to_string(i);
        std::array<Side, 3> rs{s[0], s[2], s[1]};
        std::array<int, 3> rc{c[1], c[0], c[2]};
        return idx.count(key_of(rs, rc)) ? Match::Reversed : Match::Missing;
    }
    return Match::Ok;
}

bool same_ends(std::array<int, 2> a, std::array<int, 2> b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

std::array<int, 2> mapped(const std::array<int, 2>& e, const Perm& p) { return {p[e[0]], p[e[1]]}; }

SurfaceSymmetry check_symmetry(const Triangulation& t, const std::map<TriKey, int>& idx, const Perm& points,
                               const Perm& arcs) {
    const std::string ctx = "points " + std::to_string(points.size()) + ", arcs " + std::to_string(arcs.size());
    if (static_cast<int>(points.size()) != t.npoints() || arcs.size() != static_cast<std::size_t>(t.size()) ||
        !is_permutation(points) || !is_permutation(arcs))
        throw validation_error("MalformedAction", "generator is not a permutation of the cells (" + ctx + ")");
    auto fail = [](const std::string& what) -> SurfaceSymmetry {
        throw validation_error("NotTriangulationAutomorphism", what);
    };
    for (int p = 0; p < t.npoints(); ++p) {
        const MarkedPoint &a = t.points[p], &b = t.points[points[p]];
        if (a.kind != b.kind || a.isotropy != b.isotropy || t.notched[p] != t.notched[points[p]])
            return fail("marked point " + std::to_string(p) + " is sent to a point of another kind or tag");
    }
    for (int a = 0; a < t.size(); ++a)
        if (!same_ends(mapped(t.arcs[a], points), t.arcs[arcs[a]]))
            return fail("arc " + std::to_string(a) + " is not sent to an arc with the image endpoints");
    SurfaceSymmetry g{points, arcs, Perm(t.segments.size(), -1), {}};
    for (std::size_t s = 0; s < t.segments.size(); ++s) {
        auto e = mapped(t.segments[s], points);
        bool reversed = false;
        for (std::size_t r = 0; r < t.segments.size(); ++r) {
            if (t.segments[r] == e) g.segments[s] = static_cast<int>(r);
            if (t.segments[r] == std::array<int, 2>{e[1], e[0]}) reversed = true;
        }
        if (g.segments[s] < 0) {
            if (reversed)
                throw validation_error("NotOrientationPreserving",
                                       "boundary segment " + std::to_string(s) + " is reversed");
            return fail("boundary segment " + std::to_string(s) + " has no image");
        }
    }
    std::string witness;
    switch (triangle_perm(t, idx, points, arcs, g.segments, g.triangles, witness)) {
        case Match::Ok: break;
        case Match::Reversed: throw validation_error("NotOrientationPreserving", witness + " is reversed");
        case Match::Missing: return fail(witness + " is not sent to a triangle");
    }
    return g;
}

}  // namespace

SurfaceGroupAction validate_action(const Triangulation& t, const std::vector<ActionGenerator>& gens) {
    if (!t.is_surface()) throw unsupported_error("UnsupportedConfiguration", "group actions need a surface");
    const auto idx = triangle_index(t);
    const int np = t.npoints(), na = t.size();
    const int ns = static_cast<int>(t.segments.size()), nt = static_cast<int>(t.triangles.size());
    // All cells in one domain so the closure carries every permutation at once.
    std::vector<Perm> joint;
    for (const auto& gen : gens) {
        SurfaceSymmetry g = check_symmetry(t, idx, gen.points, gen.arcs);
        Perm p;
        for (int x : g.points) p.push_back(x);
        for (int x : g.arcs) p.push_back(np + x);
        for (int x : g.segments) p.push_back(np + na + x);
        for (int x : g.triangles) p.push_back(np + na + ns + x);
        joint.push_back(p);
    }
    SurfaceGroupAction act;
    act.generators = gens;
    for (const Perm& p : perm_closure(joint, static_cast<std::size_t>(np + na + ns + nt))) {
        auto part = [&](int from, int len) {
            Perm q;
            for (int i = 0; i < len; ++i) q.push_back(p[from + i] - from);
            return q;
        };
        SurfaceSymmetry g{part(0, np), part(np, na), part(np + na, ns), part(np + na + ns, nt)};
        if (!g.is_identity())
            for (int a = 0; a < na; ++a)
                if (g.arcs[a] == a)
                    throw validation_error("NotFree", "a non-identity element fixes arc " + std::to_string(a));
        act.elements.push_back(std::move(g));
    }
    return act;
}

namespace {

// Orbits of a permutation family on {0..n-1}, sorted and ordered by least member.
void orbits_of(int n, const std::vector<SurfaceSymmetry>& els, const std::function<const Perm&(const SurfaceSymmetry&)>& f,
               std::vector<std::vector<int>>& orbits, std::vector<int>& which) {
    which.assign(n, -1);
    orbits.clear();
    for (int x = 0; x < n; ++x) {
        if (which[x] >= 0) continue;
        std::set<int> o;
        for (const auto& g : els) o.insert(f(g)[x]);
        for (int y : o) which[y] = static_cast<int>(orbits.size());
        orbits.emplace_back(o.begin(), o.end());
    }
}

std::vector<int> stabilizers(int n, const std::vector<SurfaceSymmetry>& els,
                             const std::function<const Perm&(const SurfaceSymmetry&)>& f) {
    std::vector<int> st(n, 0);
    for (const auto& g : els)
        for (int x = 0; x < n; ++x)
            if (f(g)[x] == x) ++st[x];
    return st;
}

}  // namespace

OrbitStructure orbit_structure(const Triangulation& t, const SurfaceGroupAction& g) {
    OrbitStructure o;
    const auto& els = g.elements;
    auto pts = [](const SurfaceSymmetry& s) -> const Perm& { return s.points; };
    auto arcs = [](const SurfaceSymmetry& s) -> const Perm& { return s.arcs; };
    auto segs = [](const SurfaceSymmetry& s) -> const Perm& { return s.segments; };
    auto tris = [](const SurfaceSymmetry& s) -> const Perm& { return s.triangles; };
    orbits_of(t.size(), els, arcs, o.arc_orbits, o.arc_orbit);
    orbits_of(t.npoints(), els, pts, o.point_orbits, o.point_orbit);
    orbits_of(static_cast<int>(t.segments.size()), els, segs, o.segment_orbits, o.segment_orbit);
    std::vector<int> tri_orbit;
    orbits_of(static_cast<int>(t.triangles.size()), els, tris, o.triangle_orbits, tri_orbit);
    o.point_stabilizer = stabilizers(t.npoints(), els, pts);
    o.triangle_stabilizer = stabilizers(static_cast<int>(t.triangles.size()), els, tris);
    for (const auto& orb : o.triangle_orbits) {
        int st = o.triangle_stabilizer[orb[0]];
        if (st == 3) o.fixed_triangles.push_back(orb[0]);
        else if (st != 1)
            throw invariant_error("BadStabilizer", "triangle " + std::to_string(orb[0]) + " has stabilizer of order " +
                                                       std::to_string(st));
    }
    for (int p = 0; p < t.npoints(); ++p) {
        int m = o.point_stabilizer[p];
        if (m == 1) continue;
        if (t.points[p].kind == PointKind::Boundary)
            throw invariant_error("BadStabilizer", "boundary point " + std::to_string(p) + " has a nontrivial stabilizer");
        if (t.degree(p) % m != 0)
            throw invariant_error("BadStabilizer", "stabilizer order " + std::to_string(m) +
                                                       " does not divide the degree of puncture " + std::to_string(p));
    }
    return o;
}

Quotient quotient(const Triangulation& t, const SurfaceGroupAction& g) {
    Quotient q;
    q.orbits = orbit_structure(t, g);
    const OrbitStructure& o = q.orbits;
    Triangulation& r = q.triangulation;

    for (const auto& orb : o.point_orbits) {
        MarkedPoint p = t.points[orb[0]];
        p.isotropy *= o.point_stabilizer[orb[0]];
        r.points.push_back(p);
        r.notched.push_back(t.notched[orb[0]]);
    }
    r.orbifold_points = static_cast<int>(o.fixed_triangles.size());
    const int np = r.npoints();
    for (const auto& orb : o.segment_orbits)
        r.segments.push_back(mapped(t.segments[orb[0]], o.point_orbit));
    for (const auto& orb : o.arc_orbits) r.arcs.push_back(mapped(t.arcs[orb[0]], o.point_orbit));

    auto side = [&](const Side& s) {
        if (s.kind == SideKind::Arc) return arc_side(o.arc_orbit[s.id]);
        return segment_side(o.segment_orbit[s.id]);
    };
    for (const auto& orb : o.triangle_orbits) {
        const Triangle& tr = t.triangles[orb[0]];
        Triangle n;
        auto fixed = std::find(o.fixed_triangles.begin(), o.fixed_triangles.end(), orb[0]);
        if (fixed != o.fixed_triangles.end()) {
            Side loop = side(tr.sides[0]);
            int op = static_cast<int>(fixed - o.fixed_triangles.begin());
            int base = o.point_orbit[tr.corners[0]];
            n.orbifold = true;
            n.sides = {loop, Side{SideKind::Pendant, op}, Side{SideKind::Pendant, op}};
            n.corners = {base, base, np + op};
        } else {
            for (int k = 0; k < 3; ++k) {
                n.sides[k] = side(tr.sides[k]);
                n.corners[k] = o.point_orbit[tr.corners[k]];
            }
        }
        r.triangles.push_back(n);
    }

    // Boundary components of the quotient, traced along its segments.
    OrbifoldDescriptor& d = q.descriptor;
    std::vector<bool> seen(r.segments.size(), false);
    for (std::size_t s = 0; s < r.segments.size(); ++s) {
        if (seen[s]) continue;
        int len = 0;
        for (std::size_t cur = s; !seen[cur];) {
            seen[cur] = true;
            ++len;
            for (std::size_t n = 0; n < r.segments.size(); ++n)
                if (r.segments[n][0] == r.segments[cur][1] && !seen[n]) {
                    cur = n;
                    break;
                }
        }
        d.boundaries.push_back(len);
    }
    for (const auto& p : r.points)
        if (p.kind == PointKind::Puncture) d.punctures.push_back(p.isotropy);
    d.orbifold_points = r.orbifold_points;
    const int chi = np + static_cast<int>(r.triangles.size()) - r.size() - static_cast<int>(r.segments.size());
    if ((2 - d.b() - chi) % 2 != 0 || 2 - d.b() - chi < 0)
        throw invariant_error("BadQuotient", "Euler characteristic " + std::to_string(chi) + " with " +
                                                 std::to_string(d.b()) + " boundary components");
    d.genus = (2 - d.b() - chi) / 2;
    r.descriptor = d;

    if (t.size() % static_cast<int>(g.order()) != 0 || t.size() / static_cast<int>(g.order()) != r.size())
        throw invariant_error("BadQuotient", "arc count is not |T|/|G|");
    if (rank(d) != r.size())
        throw invariant_error("BadQuotient", "rank of " + d.str() + " differs from the " + std::to_string(r.size()) +
                                                 " arc orbits");
    ValidationReport rep = validate(r);
    if (!rep.ok()) throw invariant_error("BadQuotient", rep.violations.front());

    q.arcs.target_nvars = static_cast<std::size_t>(r.size());
    for (int a = 0; a < t.size(); ++a) q.arcs.image.push_back(static_cast<std::size_t>(o.arc_orbit[a]));
    return q;
}

std::optional<Perm> induced_arc_perm(const Triangulation& t, const Perm& points, const Perm& arcs,
                                     const std::vector<int>& free_arcs) {
    const auto idx = triangle_index(t);
    Perm segs(t.segments.size(), -1);
    for (std::size_t s = 0; s < t.segments.size(); ++s) {
        auto e = mapped(t.segments[s], points);
        for (std::size_t r = 0; r < t.segments.size(); ++r)
            if (t.segments[r] == e) segs[s] = static_cast<int>(r);
        if (segs[s] < 0) return std::nullopt;
    }
    Perm cand = arcs;
    std::vector<bool> used(t.size(), false);
    for (int a : free_arcs) cand[a] = -1;
    for (int a = 0; a < t.size(); ++a)
        if (cand[a] >= 0) used[cand[a]] = true;

    std::function<bool(std::size_t)> assign = [&](std::size_t i) -> bool {
        if (i == free_arcs.size()) {
            Perm tp;
            std::string w;
            return triangle_perm(t, idx, points, cand, segs, tp, w) == Match::Ok;
        }
        int a = free_arcs[i];
        for (int b : free_arcs) {
            if (used[b] || !same_ends(mapped(t.arcs[a], points), t.arcs[b])) continue;
            cand[a] = b;
            used[b] = true;
            if (assign(i + 1)) return true;
            used[b] = false;
            cand[a] = -1;
        }
        return false;
    };
    if (!assign(0)) return std::nullopt;
    return cand;
}

namespace {

// Re-derives every element on the new triangulation, or nothing if it is not G-stable.
std::optional<SurfaceGroupAction> carry_action(const Triangulation& t, const SurfaceGroupAction& g,
                                               const std::vector<int>& orbit) {
    SurfaceGroupAction out;
    const auto idx = triangle_index(t);
    for (const auto& el : g.elements) {
        auto arcs = induced_arc_perm(t, el.points, el.arcs, orbit);
        if (!arcs) return std::nullopt;
        out.elements.push_back(check_symmetry(t, idx, el.points, *arcs));
    }
    for (const auto& gen : g.generators) {
        auto arcs = induced_arc_perm(t, gen.points, gen.arcs, orbit);
        if (!arcs) return std::nullopt;
        out.generators.push_back({gen.points, *arcs});
    }
    return out;
}

// Sides at the corners of a puncture, in the cyclic order around it.
std::vector<int> radii_around(const Triangulation& t, int b) {
    std::map<int, int> next;  // arc ending at b -> arc starting at b in the same triangle
    for (const auto& tr : t.triangles)
        for (int k = 0; k < 3; ++k)
            if (tr.corners[k] == b) {
                const Side& out = tr.sides[k];
                const Side& in = tr.sides[(k + 2) % 3];
                if (!out.is_arc() || !in.is_arc()) return {};
                next[in.id] = out.id;
            }
    if (next.empty()) return {};
    std::vector<int> cyc{next.begin()->first};
    while (true) {
        int n = next.at(cyc.back());
        if (n == cyc.front()) break;
        cyc.push_back(n);
        if (cyc.size() > next.size()) return {};
    }
    return cyc;
}

}  // namespace

OrbitMutation orbit_mutate_surface(const Seed& s, const SurfaceGroupAction& g, int arc) {
    if (!s.triangulation) throw validation_error("MissingTriangulation", "orbit mutation needs a triangulation");
    const Triangulation& t = *s.triangulation;
    if (arc < 0 || arc >= t.size()) throw validation_error("UnknownArc", std::to_string(arc));
    {
        const auto idx = triangle_index(t);
        for (const auto& el : g.elements) {
            try {
                check_symmetry(t, idx, el.points, el.arcs);
            } catch (const Error& e) {
                throw invariant_error("NotStable", std::string("the triangulation is not G-stable: ") + e.what());
            }
        }
    }
    const OrbitStructure o = orbit_structure(t, g);
    const std::vector<int> orbit = o.orbit_of_arc(arc);
    const std::set<int> in_orbit(orbit.begin(), orbit.end());

    auto orbit_sides = [&](const Triangle& tr) {
        std::set<int> hit;
        for (const auto& sd : tr.sides)
            if (sd.is_arc() && in_orbit.count(sd.id)) hit.insert(sd.id);
        return hit;
    };

    std::vector<std::vector<int>> plans;
    std::string name;
    bool independent = true;
    for (const auto& tr : t.triangles) independent = independent && orbit_sides(tr).size() <= 1;

    if (independent) {
        for (int i : orbit)
            for (int j : orbit)
                if (s.B(i, j) != 0)
                    throw invariant_error("NotIndependent", "arcs " + std::to_string(i) + " and " + std::to_string(j) +
                                                                " share no triangle but are joined in the quiver");
        name = "independent";
        plans.push_back(orbit);
    } else {
        // A G-fixed triangle made of orbit arcs.
        std::vector<int> fixed;
        std::set<int> covered;
        bool disjoint = true;
        for (int ti = 0; ti < static_cast<int>(t.triangles.size()); ++ti) {
            auto hit = orbit_sides(t.triangles[ti]);
            if (o.triangle_stabilizer[ti] == 3 && hit.size() == 3) {
                fixed.push_back(ti);
                for (int a : hit) disjoint = covered.insert(a).second && disjoint;
            }
        }
        // A puncture whose stabilizer permutes its radii, all in the orbit.
        std::vector<std::vector<int>> stars;
        std::set<int> starred;
        for (int p = 0; p < t.npoints(); ++p) {
            if (t.points[p].kind != PointKind::Puncture || o.point_stabilizer[p] < 2) continue;
            auto cyc = radii_around(t, p);
            if (cyc.empty() || static_cast<int>(cyc.size()) != o.point_stabilizer[p]) continue;
            bool ok = true;
            for (int a : cyc) ok = ok && in_orbit.count(a) && t.arcs[a][0] != t.arcs[a][1];
            if (!ok) continue;
            stars.push_back(cyc);
            starred.insert(cyc.begin(), cyc.end());
        }
        if (!fixed.empty() && disjoint && covered == in_orbit) {
            name = "fixed-triangle";
            for (int dir = 0; dir < 2; ++dir) {
                std::vector<int> seq;
                for (int ti : fixed) {
                    const auto& sd = t.triangles[ti].sides;
                    std::array<int, 3> g3{sd[0].id, sd[1].id, sd[2].id};
                    if (dir == 1) std::swap(g3[1], g3[2]);
                    seq.insert(seq.end(), {g3[0], g3[1], g3[2], g3[0]});
                }
                plans.push_back(seq);
            }
        } else if (!stars.empty() && starred == in_orbit) {
            name = "stabilized-puncture";
            for (int dir = 0; dir < 2; ++dir) {
                std::vector<int> seq;
                for (auto cyc : stars) {
                    if (dir == 1) std::reverse(cyc.begin(), cyc.end());
                    const int m = static_cast<int>(cyc.size());
                    seq.insert(seq.end(), cyc.begin(), cyc.end());
                    for (int i = m - 3; i >= 0; --i) seq.push_back(cyc[i]);
                }
                plans.push_back(seq);
            }
        } else {
            throw unsupported_error("UnsupportedConfiguration",
                                    "the orbit of arc " + std::to_string(arc) +
                                        " is neither independent, a fixed triangle, nor the radii of a stabilized puncture");
        }
    }

    for (const auto& seq : plans) {
        Seed r = s;
        for (int k : seq) r = mutate_seed(r, k);
        if (auto act = carry_action(*r.triangulation, g, orbit))
            return OrbitMutation{std::move(r), std::move(*act), name, seq};
    }
    throw invariant_error("NotStable", "orbit mutation at arc " + std::to_string(arc) + " left no G-stable triangulation");
}

std::string CoveringReport::str() const {
    std::ostringstream os;
    os << "quotient arc " << quotient_arc << " case " << case_tag << ": equal images " << (equal_images ? "yes" : "no")
       << ", polynomial " << (polynomial ? "yes" : "no") << ", matches " << (matches ? "yes" : "no")
       << "; F(x x') = " << product.str() << ", expected " << expected.str();
    return os.str();
}

CoveringReport covering_consistency(const Seed& s, const SurfaceGroupAction& g, int arc,
                                    const std::optional<OrbitMap>& f) {
    if (!s.triangulation) throw validation_error("MissingTriangulation", "covering check needs a triangulation");
    Quotient q = quotient(*s.triangulation, g);
    const OrbitMap F = f ? *f : q.arcs;
    OrbitMutation m = orbit_mutate_surface(s, g, arc);

    CoveringReport rep;
    rep.quotient_arc = q.orbits.arc_orbit[arc];
    const auto& orbit = q.orbits.orbit_of_arc(arc);
    for (int j : orbit) rep.images.push_back(specialize(m.seed.cluster[j], F));
    rep.equal_images = std::all_of(rep.images.begin(), rep.images.end(),
                                   [&](const LaurentPoly& p) { return p == rep.images.front(); });

    rep.product = specialize(s.cluster[arc], F) * rep.images.front();
    rep.polynomial = rep.product.is_polynomial();
    for (int i : orbit)
        for (int j : orbit)
            if (specialize(s.cluster[i] * m.seed.cluster[j], F) != rep.product) rep.polynomial = false;

    Cluster y;
    for (const auto& orb : q.orbits.arc_orbits) y.push_back(specialize(s.cluster[orb[0]], F));
    ExchangePolynomial p = orbifold_exchange_poly(q.triangulation, rep.quotient_arc, y);
    rep.expected = p.value;
    rep.case_tag = p.case_tag;
    rep.matches = rep.product == rep.expected;
    return rep;
}

}  // namespace gcl
