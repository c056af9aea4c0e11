#!/usr/bin/env python3
"""Writes the triangulation fixtures used by the tests and the CLI examples.

Marked points on a boundary are numbered clockwise, so the triangle on a
segment i -> i+1 lists its corners in the same clockwise order.
"""
import itertools
import json
import pathlib

HERE = pathlib.Path(__file__).resolve().parent


class Builder:
    def __init__(self, genus=0, orbifold_points=0):
        self.genus = genus
        self.orbifold_points = orbifold_points
        self.points = []
        self.segments = []
        self.arcs = []
        self.triangles = []
        self.boundaries = []

    def boundary(self, n):
        first = len(self.points)
        pts = [self.point("boundary") for _ in range(n)]
        for i in range(n):
            self.segments.append((pts[i], pts[(i + 1) % n]))
        self.boundaries.append(n)
        return pts, list(range(len(self.segments) - n, len(self.segments)))

    def point(self, kind, isotropy=1):
        self.points.append((kind, isotropy))
        return len(self.points) - 1

    def arc(self, u, v, tags=None):
        self.arcs.append((u, v, tags))
        return len(self.arcs) - 1

    def standard(self, sides, corners):
        self.triangles.append({"type": "standard", "sides": sides, "corners": corners})

    def self_folded(self, loop, radius, puncture):
        self.triangles.append({"type": "self_folded", "loop": loop, "radius": radius, "puncture": puncture})

    def orbifold(self, loop, point):
        self.triangles.append({"type": "orbifold", "loop": loop, "point": point})

    def json(self):
        punctures = [iso for kind, iso in self.points if kind == "puncture"]
        doc = {
            "descriptor": {
                "genus": self.genus,
                "boundaries": self.boundaries,
                "punctures": punctures,
                "orbifold_points": self.orbifold_points,
            },
            "marked_points": [],
            "boundary_segments": [{"id": i, "ends": list(e)} for i, e in enumerate(self.segments)],
            "arcs": [],
            "triangles": self.triangles,
        }
        for i, (kind, iso) in enumerate(self.points):
            p = {"id": i, "kind": kind}
            if kind == "puncture":
                p["isotropy"] = iso
            doc["marked_points"].append(p)
        for i, (u, v, tags) in enumerate(self.arcs):
            a = {"id": i, "ends": [u, v]}
            if tags:
                a["tags"] = tags
            doc["arcs"].append(a)
        return doc


def a(i):
    return f"a{i}"


def s(i):
    return f"s{i}"


def polygon(n, diagonals, triangles):
    """Disk with n boundary points, given diagonals and vertex triples."""
    b = Builder()
    pts, segs = b.boundary(n)
    ids = {}
    for u, v in diagonals:
        ids[frozenset((u, v))] = b.arc(u, v)
    for tri in triangles:
        sides = []
        for k in range(3):
            u, v = tri[k], tri[(k + 1) % 3]
            if (v - u) % n == 1:
                sides.append(s(u))
            else:
                sides.append(a(ids[frozenset((u, v))]))
        b.standard(sides, list(tri))
    return b


def rotation(n_points, shift, arc_map):
    return {"points": [(i + shift) % n_points for i in range(n_points)], "arcs": arc_map}


def arc_perm(b, point_map):
    """Arc permutation induced by a point map, for arcs determined by endpoints."""
    index = {frozenset((u, v)): i for i, (u, v, _) in enumerate(b.arcs)}
    return [index[frozenset((point_map[u], point_map[v]))] for u, v, _ in b.arcs]


def fan_polygon(n):
    diags = [(0, k) for k in range(2, n - 1)]
    tris = [(0, k, k + 1) for k in range(1, n - 1)]
    return polygon(n, diags, tris)


def inner_triangle_polygon(n, split=False):
    """n = 3k points, inner triangle (0, k, 2k).  Each side region is fanned
    from its start, or for k = 4 and split, cut by the triangle (0, 2, 4)."""
    k = n // 3
    diags, tris = [], []
    for c in range(3):
        base = c * k
        end = (base + k) % n
        diags.append((base, end))
        if split:
            mid = base + 2
            diags += [(base, mid), (mid, end)]
            tris += [(base, base + 1, mid), (mid, mid + 1, end), (base, mid, end)]
            continue
        for j in range(base + 2, base + k):
            diags.append((base, j))
        for j in range(base + 1, base + k):
            tris.append((base, j, (j + 1) % n))
    tris.append((0, k, 2 * k))
    b = polygon(n, diags, tris)
    pmap = [(i + k) % n for i in range(n)]
    return b, {"generators": [{"points": pmap, "arcs": arc_perm(b, pmap)}]}


def punctured_polygon(m, isotropy=1, with_action=True):
    b = Builder()
    pts, segs = b.boundary(m)
    c = b.point("puncture", isotropy)
    radii = [b.arc(i, c) for i in range(m)]
    for i in range(m):
        b.standard([s(i), a(radii[(i + 1) % m]), a(radii[i])], [i, (i + 1) % m, c])
    action = None
    if with_action:
        pmap = [(i + 1) % m for i in range(m)] + [c]
        action = {"generators": [{"points": pmap, "arcs": [(i + 1) % m for i in range(m)]}]}
    return b, action


def punctured_even_polygon(m):
    """Once-punctured 2m-gon: radii at even points, chords cutting off odd points; Z_m by shift 2."""
    n = 2 * m
    b = Builder()
    pts, segs = b.boundary(n)
    c = b.point("puncture")
    radii = [b.arc(2 * i, c) for i in range(m)]
    chords = [b.arc(2 * i, (2 * i + 2) % n) for i in range(m)]
    for i in range(m):
        b.standard([s(2 * i), s(2 * i + 1), a(chords[i])], [2 * i, 2 * i + 1, (2 * i + 2) % n])
        b.standard([a(chords[i]), a(radii[(i + 1) % m]), a(radii[i])], [2 * i, (2 * i + 2) % n, c])
    pmap = [(i + 2) % n for i in range(n)] + [c]
    amap = [(i + 1) % m for i in range(m)] + [m + (i + 1) % m for i in range(m)]
    return b, {"generators": [{"points": pmap, "arcs": amap}]}


def octahedron():
    b = Builder()
    axes = [(1, 0, 0), (-1, 0, 0), (0, 1, 0), (0, -1, 0), (0, 0, 1), (0, 0, -1)]
    for _ in axes:
        b.point("puncture")
    edges = {}
    for i, j in itertools.combinations(range(6), 2):
        if i // 2 != j // 2:
            edges[frozenset((i, j))] = b.arc(i, j)

    def det(u, v, w):
        return (u[0] * (v[1] * w[2] - v[2] * w[1]) - u[1] * (v[0] * w[2] - v[2] * w[0])
                + u[2] * (v[0] * w[1] - v[1] * w[0]))

    for sx, sy, sz in itertools.product((0, 1), repeat=3):
        tri = [sx, 2 + sy, 4 + sz]
        # clockwise seen from outside: negative orientation against the outward normal
        if det(axes[tri[0]], axes[tri[1]], axes[tri[2]]) > 0:
            tri = [tri[0], tri[2], tri[1]]
        sides = [a(edges[frozenset((tri[k], tri[(k + 1) % 3]))]) for k in range(3)]
        b.standard(sides, tri)

    def perm_of(f):
        pmap = []
        for v in axes:
            w = f(v)
            pmap.append(axes.index(w))
        return pmap

    cyc = perm_of(lambda v: (v[2], v[0], v[1]))
    half = perm_of(lambda v: (-v[0], -v[1], v[2]))
    gens = [{"points": g, "arcs": arc_perm(b, g)} for g in (cyc, half)]
    return b, {"generators": gens}


def orbifold_triangle():
    """Triangle with one orbifold point: a0 = d (0-1 around the point), a1 = loop at 0."""
    b = Builder(orbifold_points=1)
    pts, segs = b.boundary(3)
    d = b.arc(0, 1)
    l = b.arc(0, 0)
    b.standard([s(0), a(d), a(l)], [0, 1, 0])
    b.standard([a(d), s(1), s(2)], [0, 1, 2])
    b.orbifold(a(l), 0)
    return b


def orbifold_bigon():
    b = Builder(orbifold_points=1)
    pts, segs = b.boundary(2)
    l = b.arc(0, 0)
    b.standard([s(0), s(1), a(l)], [0, 1, 0])
    b.orbifold(a(l), 0)
    return b


def orbifold_monogon_two_points():
    b = Builder(orbifold_points=2)
    pts, segs = b.boundary(1)
    l0 = b.arc(0, 0)
    l1 = b.arc(0, 0)
    b.standard([s(0), a(l0), a(l1)], [0, 0, 0])
    b.orbifold(a(l0), 0)
    b.orbifold(a(l1), 1)
    return b


def sphere_one_puncture_two_points(m):
    b = Builder(orbifold_points=2)
    p = b.point("puncture", m)
    l = b.arc(p, p)
    b.orbifold(a(l), 0)
    b.orbifold(a(l), 1)
    return b


def sphere_two_punctures_one_point(base_isotropy, enclosed_isotropy):
    """a0 = loop at point 0 around the orbifold point, a1 = radius to the enclosed point 1."""
    b = Builder(orbifold_points=1)
    pa = b.point("puncture", base_isotropy)
    pb = b.point("puncture", enclosed_isotropy)
    l = b.arc(pa, pa)
    r = b.arc(pa, pb)
    b.orbifold(a(l), 0)
    b.self_folded(a(l), a(r), pb)
    return b


def punctured_monogon(m):
    b = Builder()
    pts, segs = b.boundary(1)
    c = b.point("puncture", m)
    r = b.arc(0, c)
    b.self_folded(s(0), a(r), c)
    return b


def punctured_bigon(m):
    b = Builder()
    pts, segs = b.boundary(2)
    c = b.point("puncture", m)
    r1 = b.arc(0, c)
    r2 = b.arc(1, c)
    b.standard([s(0), a(r2), a(r1)], [0, 1, c])
    b.standard([s(1), a(r1), a(r2)], [1, 0, c])
    return b


def annulus():
    """One marked point on each boundary; two bridging arcs."""
    b = Builder()
    (p,), (s0,) = b.boundary(1)
    (q,), (s1,) = b.boundary(1)
    x = b.arc(p, q)
    y = b.arc(p, q)
    b.standard([s(s0), a(x), a(y)], [p, p, q])
    b.standard([s(s1), a(x), a(y)], [q, q, p])
    return b


def annulus_2_2():
    """Two marked points on each boundary; the half turn swaps a0/a1 and a2/a3."""
    b = Builder()
    (p0, p1), _ = b.boundary(2)
    (q0, q1), _ = b.boundary(2)
    a0 = b.arc(p0, q0)
    a1 = b.arc(p1, q1)
    a2 = b.arc(p0, q1)
    a3 = b.arc(p1, q0)
    b.standard([s(0), a(a3), a(a0)], [p0, p1, q0])
    b.standard([a(a3), a(a1), s(3)], [q0, p1, q1])
    b.standard([a(a1), s(1), a(a2)], [q1, p1, p0])
    b.standard([a(a2), a(a0), s(2)], [q1, p0, q0])
    action = {"generators": [{"points": [p1, p0, q1, q0], "arcs": [1, 0, 3, 2]}]}
    return b, action


def self_folded_square():
    """Once-punctured square with a self-folded triangle at point 0."""
    b = Builder()
    pts, segs = b.boundary(4)
    c = b.point("puncture")
    r = b.arc(0, c)
    loop = b.arc(0, 0)
    d1 = b.arc(0, 2)
    d2 = b.arc(2, 0)
    b.self_folded(a(loop), a(r), c)
    b.standard([s(0), s(1), a(d1)], [0, 1, 2])
    b.standard([a(d1), a(d2), a(loop)], [0, 2, 0])
    b.standard([s(2), s(3), a(d2)], [2, 3, 0])
    return b


def write(name, builder, action=None, extra=None):
    doc = builder.json()
    if action:
        doc["action"] = action
    if extra:
        doc.update(extra)
    path = HERE / f"{name}.json"
    path.write_text(json.dumps(doc, indent=1) + "\n")


def main():
    write("square", fan_polygon(4))
    write("pentagon", fan_polygon(5))
    write("hexagon_fan", fan_polygon(6))
    hexagon, hex_action = inner_triangle_polygon(6)
    write("hexagon", hexagon, hex_action)
    nonagon, non_action = inner_triangle_polygon(9)
    write("nonagon", nonagon, non_action)
    dodecagon, dod_action = inner_triangle_polygon(12, split=True)
    write("dodecagon", dodecagon, dod_action)
    for m in (2, 3, 4, 5):
        b, act = punctured_polygon(m)
        write(f"punctured_{m}gon", b, act)
    for m in (2, 3, 4):
        b, act = punctured_even_polygon(m)
        write(f"punctured_{2 * m}gon_shift2", b, act)
    octa, octa_action = octahedron()
    write("octahedron", octa, octa_action)
    write("orbifold_triangle", orbifold_triangle())
    write("orbifold_bigon", orbifold_bigon())
    write("orbifold_monogon", orbifold_monogon_two_points())
    for m in (1, 2, 3, 4):
        write(f"sphere_1_puncture_m{m}", sphere_one_puncture_two_points(m))
    for r, s_ in ((2, 3), (3, 1), (1, 1), (2, 2)):
        write(f"sphere_2_punctures_r{r}_s{s_}", sphere_two_punctures_one_point(s_, r))
    for m in (1, 2, 3, 4):
        write(f"punctured_monogon_m{m}", punctured_monogon(m))
        write(f"punctured_bigon_m{m}", punctured_bigon(m))
    write("annulus", annulus())
    write("self_folded_square", self_folded_square())
    ann, ann_action = annulus_2_2()
    write("annulus_2_2", ann, ann_action)


if __name__ == "__main__":
    main()
