#include "gcl/cluster.hpp"

#include "gcl/errors.hpp"

namespace gcl {

Cluster initial_cluster(std::size_t n) {
    Cluster x;
    for (std::size_t i = 0; i < n; ++i) x.push_back(LaurentPoly::variable(n, i));
    return x;
}

Seed initial_seed(const ExchangeMatrix& b) {
    if (!b.is_skew_symmetric()) throw validation_error("NotSkewSymmetric", "exchange matrix");
    return Seed{b, initial_cluster(static_cast<std::size_t>(b.size())), std::nullopt};
}

Seed initial_seed(const Triangulation& t) {
    Seed s = initial_seed(ExchangeMatrix::from_quiver(quiver_from_triangulation(t)));
    s.triangulation = t;
    return s;
}

LaurentPoly exchange_binomial(const ExchangeMatrix& b, int k, const Cluster& x) {
    const std::size_t nv = x.at(0).nvars();
    LaurentPoly plus = LaurentPoly::constant(nv, 1), minus = LaurentPoly::constant(nv, 1);
    for (int i = 0; i < b.size(); ++i) {
        int e = b(i, k);
        if (e > 0) plus *= x[i].pow(static_cast<unsigned>(e));
        if (e < 0) minus *= x[i].pow(static_cast<unsigned>(-e));
    }
    return plus + minus;
}

Seed mutate_seed(const Seed& s, int k) {
    if (k < 0 || k >= s.size()) throw validation_error("UnknownVertex", std::to_string(k));
    Seed r = s;
    r.cluster[k] = exact_div(exchange_binomial(s.B, k, s.cluster), s.cluster[k]);
    r.B = mutate_quiver(s.B, k);
    if (s.triangulation) r.triangulation = flip(*s.triangulation, k);
    return r;
}

namespace {

LaurentPoly var(const Triangulation& t, int i) {
    return LaurentPoly::variable(static_cast<std::size_t>(t.size()), static_cast<std::size_t>(i));
}

LaurentPoly one(const Triangulation& t) { return LaurentPoly::constant(static_cast<std::size_t>(t.size()), 1); }

LaurentPoly value(const Triangulation& t, const Side& s) { return s.is_arc() ? var(t, s.id) : one(t); }

// The side times its bar partner.
LaurentPoly weight(const Triangulation& t, const Side& s) {
    if (!s.is_arc()) return one(t);
    LaurentPoly w = var(t, s.id);
    if (auto b = t.bar(s.id)) w *= var(t, *b);
    return w;
}

LaurentPoly loop_polynomial(const Triangulation& t, int loop, int radius) {
    NeighborProducts np = neighbor_products(t, loop);
    return exact_div(np.minus + np.plus, var(t, loop) * var(t, radius));
}

}  // namespace

NeighborProducts neighbor_products(const Triangulation& t, int arc) {
    NeighborProducts np{one(t), one(t)};
    const Side self = arc_side(arc);
    for (auto [ti, k] : t.slots(self)) {
        const Triangle& tr = t.triangles[ti];
        if (tr.orbifold) continue;
        const Side& next = tr.sides[(k + 1) % 3];
        const Side& prev = tr.sides[(k + 2) % 3];
        if (next != self) np.plus *= weight(t, next);
        if (prev != self) np.minus *= weight(t, prev);
    }
    return np;
}

ExchangePolynomial surface_exchange_poly(const Triangulation& t, int arc, const Cluster& x) {
    ArcLocalConfig c = classify_arc(t, arc);
    int target = arc;
    std::string tag;
    if (auto sf = t.self_fold_with_radius(arc); sf && sf->loop.is_arc()) {
        target = sf->loop.id;
        tag = "(i)";
    } else if (t.self_fold_with_loop(arc)) {
        tag = "(i)";
    }
    NeighborProducts np = neighbor_products(t, target);
    LaurentPoly g = monomial_gcd(np.minus, np.plus);
    LaurentPoly p = exact_div(np.minus + np.plus, g);
    if (tag.empty()) {
        if (c.kind == ArcCase::RadiusOfOncePunctured1Bigon) {
            int a = t.arcs[arc][0];
            bool at_first = t.points[a].kind == PointKind::Puncture && t.degree(a) == 2;
            tag = at_first ? "(ii)" : "(iii)";
        } else {
            tag = g == one(t) ? "ptolemy" : "gcd";
        }
    }
    return {substitute(p, x), tag};
}

ExchangePolynomial orbifold_exchange_poly(const Triangulation& t, int arc, const Cluster& x) {
    ArcLocalConfig c = classify_arc(t, arc);
    LaurentPoly p;
    std::string tag;
    switch (c.kind) {
        case ArcCase::SphereOneMPunctureTwoOrbifoldPoints:
            p = LaurentPoly::constant(static_cast<std::size_t>(t.size()), Int(4 * c.m * c.m));
            tag = "(a)";
            break;
        case ArcCase::OrbifoldLoop: {
            const Side& a = c.neighbors[0];
            const Side& b = c.neighbors[1];
            bool collapsed = false;
            if (a == b && a.is_arc()) {
                auto sf = t.self_fold_with_radius(a.id);
                collapsed = sf && (t.isotropy(sf->base) == 1 || t.isotropy(sf->puncture) == 1);
            }
            if (collapsed) {
                p = value(t, a).scaled(3);
                tag = "(b)(i)";
            } else {
                LaurentPoly va = value(t, a), vb = value(t, b);
                p = va * va + va * vb + vb * vb;
                tag = "(b)(ii)";
            }
            break;
        }
        case ArcCase::RadiusInOrbifoldLoop: {
            auto sf = *t.self_fold_with_radius(arc);
            p = value(t, sf.loop).scaled(c.m);
            tag = t.isotropy(sf.puncture) > 1 ? "(f)" : "(d)";
            break;
        }
        case ArcCase::RadiusOfMSelfFolded: {
            auto sf = *t.self_fold_with_radius(arc);
            p = weight(t, sf.loop).scaled(c.m);
            tag = "(f)";
            break;
        }
        case ArcCase::RadiusOf1SelfFolded: {
            auto sf = *t.self_fold_with_radius(arc);
            p = c.monogon ? LaurentPoly::constant(static_cast<std::size_t>(t.size()), 2)
                          : loop_polynomial(t, sf.loop.id, arc);
            tag = "(d)";
            break;
        }
        case ArcCase::LoopOf1SelfFolded:
            p = loop_polynomial(t, arc, c.neighbors[0].id);
            tag = "(c)";
            break;
        case ArcCase::RadiusOfOncePunctured1Bigon: {
            NeighborProducts np = neighbor_products(t, arc);
            p = exact_div(np.minus + np.plus, weight(t, c.neighbors[0]));
            tag = "(e)";
            break;
        }
        case ArcCase::Generic: {
            NeighborProducts np = neighbor_products(t, arc);
            p = np.minus + np.plus;
            tag = "(g)";
            break;
        }
    }
    if (!p.is_polynomial()) throw invariant_error("NotPolynomial", "exchange polynomial " + p.str());
    return {substitute(p, x), tag};
}

OrbifoldSeed initial_orbifold_seed(const Triangulation& t) {
    return OrbifoldSeed{t, initial_cluster(static_cast<std::size_t>(t.size()))};
}

OrbifoldSeed mutate_orbifold_seed(const OrbifoldSeed& s, int arc) {
    if (arc < 0 || arc >= s.size()) throw validation_error("UnknownArc", std::to_string(arc));
    OrbifoldSeed r = s;
    ExchangePolynomial p = orbifold_exchange_poly(s.triangulation, arc, s.cluster);
    r.cluster[arc] = exact_div(p.value, s.cluster[arc]);
    r.triangulation = flip(s.triangulation, arc);
    return r;
}

}  // namespace gcl
