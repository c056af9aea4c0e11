#include "gcl/potential.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "gcl/errors.hpp"

namespace gcl {

Path canonical_rotation(const Path& p) {
    Path best = p;
    Path rot = p;
    for (std::size_t i = 1; i < p.size(); ++i) {
        std::rotate(rot.begin(), rot.begin() + 1, rot.end());
        if (rot < best) best = rot;
    }
    return best;
}

CyclicWord::CyclicWord(Path arrows) : w_(canonical_rotation(arrows)) {
    if (w_.empty()) throw validation_error("NotACycle", "empty cyclic word");
}

void CyclicWord::check(const Quiver& q) const {
    for (std::size_t i = 0; i < w_.size(); ++i) {
        const Arrow& later = q.arrow(w_[i]);
        const Arrow& earlier = q.arrow(w_[(i + 1) % w_.size()]);
        if (earlier.target != later.source)
            throw validation_error("NotACycle", q.arrow_label(later.id) + " cannot follow " +
                                                    q.arrow_label(earlier.id));
    }
}

void PathCombo::add(const Path& p, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(p, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

PathCombo PathCombo::scaled(const Rational& c) const {
    PathCombo r;
    for (const auto& [p, v] : terms_) r.add(p, v * c);
    return r;
}

PathCombo PathCombo::mapped(const std::map<int, int>& arrow_image) const {
    PathCombo r;
    for (const auto& [p, v] : terms_) {
        Path img;
        for (int a : p) img.push_back(arrow_image.at(a));
        r.add(img, v);
    }
    return r;
}

namespace {

std::string path_str(const Quiver& q, const Path& p) {
    std::string s;
    for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "." : "") + q.arrow_label(p[i]);
    return s;
}

}  // namespace

std::string PathCombo::str(const Quiver& q) const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [p, c] : terms_) {
        if (!s.empty()) s += " ; ";
        s += c.get_str() + " * " + (p.empty() ? std::string("e") : path_str(q, p));
    }
    return s;
}

void Potential::add(const CyclicWord& w, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void Potential::check(const Quiver& q) const {
    for (const auto& [w, c] : terms_) w.check(q);
}

std::string Potential::str(const Quiver& q) const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [w, c] : terms_) {
        if (!s.empty()) s += " ; ";
        s += c.get_str() + " * " + path_str(q, w.arrows());
    }
    return s;
}

Potential Potential::parse(const std::string& text, const Quiver& q) {
    Potential w;
    if (text == "0") return w;
    std::map<std::string, int> ids;
    for (const auto& a : q.arrows()) ids[q.arrow_label(a.id)] = a.id;
    std::istringstream in(text);
    std::string chunk;
    while (std::getline(in, chunk, ';')) {
        std::istringstream ts(chunk);
        std::string coeff, star, word;
        if (!(ts >> coeff >> star >> word) || star != "*")
            throw validation_error("ParseError", "bad potential term '" + chunk + "'");
        Rational c;
        if (c.set_str(coeff, 10) != 0)
            throw validation_error("ParseError", "bad coefficient '" + coeff + "'");
        c.canonicalize();
        Path p;
        std::istringstream ws(word);
        std::string label;
        while (std::getline(ws, label, '.')) {
            auto it = ids.find(label);
            if (it == ids.end()) throw validation_error("UnknownArrow", label);
            p.push_back(it->second);
        }
        CyclicWord cw(p);
        cw.check(q);
        w.add(cw, c);
    }
    return w;
}

PathCombo partial_derivative(const Quiver& q, const Potential& w, int alpha) {
    if (!q.has_arrow(alpha)) throw validation_error("UnknownArrow", std::to_string(alpha));
    PathCombo r;
    for (const auto& [word, c] : w.terms()) {
        const Path& p = word.arrows();
        for (std::size_t j = 0; j < p.size(); ++j) {
            if (p[j] != alpha) continue;
            Path d(p.begin() + static_cast<long>(j) + 1, p.end());
            d.insert(d.end(), p.begin(), p.begin() + static_cast<long>(j));
            r.add(d, c);
        }
    }
    return r;
}

namespace {

std::map<int, int> arrow_id_map(const Quiver& q, const QuiverAutomorphism& g) {
    std::map<int, int> m;
    for (std::size_t i = 0; i < q.arrows().size(); ++i)
        m[q.arrows()[i].id] = q.arrows()[g.aperm[i]].id;
    return m;
}

}  // namespace

Potential apply(const Quiver& q, const QuiverAutomorphism& g, const Potential& w) {
    auto m = arrow_id_map(q, g);
    Potential r;
    for (const auto& [word, c] : w.terms()) {
        Path p;
        for (int a : word.arrows()) p.push_back(m.at(a));
        r.add(CyclicWord(p), c);
    }
    return r;
}

PathCombo apply(const Quiver& q, const QuiverAutomorphism& g, const PathCombo& p) {
    return p.mapped(arrow_id_map(q, g));
}

bool automorphism_check(const Quiver& q, const Potential& w, const QuiverAutomorphism& g) {
    return apply(q, g, w) == w;
}

OrbitPotential orbit_potential(const Quiver& q, const Potential& w, const PermGroup& g) {
    w.check(q);
    for (std::size_t e = 0; e < g.elements.size(); ++e)
        if (!automorphism_check(q, w, g.elements[e]))
            throw validation_error("NotPotentialAutomorphism",
                                   "group element " + std::to_string(e) + " does not preserve W");
    OrbitPotential r;
    r.orbit = orbit_quiver(q, g);
    std::map<int, int> to_orbit;
    for (std::size_t i = 0; i < q.arrows().size(); ++i)
        to_orbit[q.arrows()[i].id] = r.orbit.quiver.arrows()[r.orbit.arrows.image[i]].id;

    std::set<CyclicWord> done;
    for (const auto& [word, c] : w.terms()) {
        if (done.count(word)) continue;
        std::set<CyclicWord> orbit;
        for (const auto& el : g.elements) {
            auto m = arrow_id_map(q, el);
            Path p;
            for (int a : word.arrows()) p.push_back(m.at(a));
            orbit.insert(CyclicWord(p));
        }
        done.insert(orbit.begin(), orbit.end());
        Path image;
        for (int a : word.arrows()) image.push_back(to_orbit.at(a));
        r.potential.add(CyclicWord(image), c * static_cast<long>(orbit.size()));
    }
    return r;
}

JacobianCheck jacobian_identity_check(const Quiver& q, const Potential& w, const PermGroup& g) {
    OrbitPotential op = orbit_potential(q, w, g);
    std::map<int, int> to_orbit;
    for (std::size_t i = 0; i < q.arrows().size(); ++i)
        to_orbit[q.arrows()[i].id] = op.orbit.quiver.arrows()[op.orbit.arrows.image[i]].id;
    const Rational order(static_cast<long>(g.order()));
    for (const auto& a : q.arrows()) {
        PathCombo lhs = partial_derivative(op.orbit.quiver, op.potential, to_orbit.at(a.id));
        PathCombo rhs = partial_derivative(q, w, a.id).mapped(to_orbit).scaled(order);
        if (!(lhs == rhs))
            return JacobianCheck{false, a.id,
                                 lhs.str(op.orbit.quiver) + " != " + rhs.str(op.orbit.quiver)};
    }
    return {};
}

Dimension monomial_jacobian_dimension(const Quiver& q, const std::vector<PathCombo>& relations,
                                      std::size_t maxlen) {
    std::vector<Path> forbidden;
    std::size_t longest = 1;
    for (const auto& r : relations) {
        if (r.terms().size() != 1)
            throw validation_error("NonMonomialIdeal", "relation with " +
                                                           std::to_string(r.terms().size()) +
                                                           " terms");
        const Path& p = r.terms().begin()->first;
        if (p.empty()) throw validation_error("NonMonomialIdeal", "trivial path relation");
        forbidden.push_back(p);
        longest = std::max(longest, p.size());
    }
    auto allowed = [&](const Path& p) {
        for (const auto& f : forbidden)
            if (std::search(p.begin(), p.end(), f.begin(), f.end()) != p.end()) return false;
        return true;
    };
    // Extensions on the left: the new arrow starts where the path ends.
    auto extend = [&](const std::vector<Path>& layer) {
        std::vector<Path> next;
        for (const auto& p : layer) {
            int end = q.arrow(p.front()).target;
            for (const auto& a : q.arrows()) {
                if (a.source != end) continue;
                Path e{a.id};
                e.insert(e.end(), p.begin(), p.end());
                if (allowed(e)) next.push_back(std::move(e));
            }
        }
        return next;
    };

    std::vector<Path> layer;
    for (const auto& a : q.arrows())
        if (allowed({a.id})) layer.push_back({a.id});

    // Words of length k = max(longest - 1, 1) form a finite automaton whose
    // cycles are exactly the infinite families of allowed paths.
    const std::size_t k = std::max<std::size_t>(longest - 1, 1);
    std::vector<Path> states = layer;
    for (std::size_t len = 1; len < k && !states.empty(); ++len) states = extend(states);
    std::map<Path, std::vector<Path>> edges;
    for (const auto& s : states)
        for (auto& e : extend({s})) edges[s].push_back(Path(e.begin(), e.begin() + static_cast<long>(k)));
    std::map<Path, int> color;
    std::function<bool(const Path&)> has_cycle = [&](const Path& s) {
        color[s] = 1;
        for (const auto& t : edges[s]) {
            if (color[t] == 1) return true;
            if (color[t] == 0 && has_cycle(t)) return true;
        }
        color[s] = 2;
        return false;
    };
    bool infinite = false;
    for (const auto& s : states)
        if (color[s] == 0 && has_cycle(s)) {
            infinite = true;
            break;
        }

    Dimension d;
    d.value = static_cast<std::size_t>(q.nvertices());
    for (std::size_t len = 1; len < maxlen; ++len) {
        if (layer.empty()) {
            d.kind = Dimension::Kind::Finite;
            return d;
        }
        d.value += layer.size();
        layer = extend(layer);
    }
    if (layer.empty() && !infinite) return d;
    d.kind = infinite ? Dimension::Kind::Infinite : Dimension::Kind::Unknown;
    return d;
}

}  // namespace gcl
