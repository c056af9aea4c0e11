#include "gcl/quiver.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

#include "gcl/errors.hpp"

namespace gcl {

void Quiver::add_arrow(int id, int source, int target, std::string name) {
    if (has_arrow(id))
        throw validation_error("DuplicateArrow", "arrow id " + std::to_string(id));
    if (source < 0 || source >= n_ || target < 0 || target >= n_)
        throw validation_error("BadArrow", "arrow " + std::to_string(id) + " endpoint out of range");
    arrows_.push_back(Arrow{id, source, target, std::move(name)});
}

std::size_t Quiver::index_of(int id) const {
    for (std::size_t i = 0; i < arrows_.size(); ++i)
        if (arrows_[i].id == id) return i;
    throw validation_error("UnknownArrow", "arrow id " + std::to_string(id));
}

bool Quiver::has_arrow(int id) const {
    return std::any_of(arrows_.begin(), arrows_.end(), [&](const Arrow& a) { return a.id == id; });
}

std::string Quiver::arrow_label(int id) const {
    const Arrow& a = arrow(id);
    return a.name.empty() ? "a" + std::to_string(a.id) : a.name;
}

std::string Quiver::vertex_label(int v) const {
    if (v < static_cast<int>(vnames_.size()) && !vnames_[v].empty()) return vnames_[v];
    return std::to_string(v);
}

ExchangeMatrix::ExchangeMatrix(std::vector<std::vector<int>> rows) : b_(std::move(rows)) {
    for (const auto& r : b_)
        if (r.size() != b_.size())
            throw validation_error("BadMatrix", "exchange matrix must be square");
}

ExchangeMatrix ExchangeMatrix::from_quiver(const Quiver& q) {
    ExchangeMatrix b(q.nvertices());
    for (const auto& a : q.arrows()) {
        if (a.source == a.target) continue;
        b(a.source, a.target) += 1;
        b(a.target, a.source) -= 1;
    }
    return b;
}

bool ExchangeMatrix::is_skew_symmetric() const {
    for (int i = 0; i < size(); ++i)
        for (int j = 0; j < size(); ++j)
            if (b_[i][j] != -b_[j][i]) return false;
    return true;
}

ExchangeMatrix ExchangeMatrix::permuted(const std::vector<int>& perm) const {
    ExchangeMatrix r(size());
    for (int i = 0; i < size(); ++i)
        for (int j = 0; j < size(); ++j) r(i, j) = b_[perm[i]][perm[j]];
    return r;
}

Quiver ExchangeMatrix::to_quiver() const {
    Quiver q(size());
    int id = 0;
    for (int i = 0; i < size(); ++i)
        for (int j = 0; j < size(); ++j)
            for (int k = 0; k < b_[i][j]; ++k) q.add_arrow(id++, i, j);
    return q;
}

std::string ExchangeMatrix::str() const {
    std::ostringstream out;
    for (const auto& r : b_) {
        for (std::size_t j = 0; j < r.size(); ++j) out << (j ? " " : "") << r[j];
        out << '\n';
    }
    return out.str();
}

ExchangeMatrix ExchangeMatrix::parse(const std::string& text) {
    std::vector<std::vector<int>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::vector<int> row;
        int v;
        while (ls >> v) row.push_back(v);
        if (!ls.eof()) throw validation_error("ParseError", "bad matrix row '" + line + "'");
        if (!row.empty()) rows.push_back(std::move(row));
    }
    return ExchangeMatrix(std::move(rows));
}

ExchangeMatrix mutate_quiver(const ExchangeMatrix& b, int k) {
    const int n = b.size();
    if (k < 0 || k >= n)
        throw validation_error("IndexOutOfRange", "mutation index " + std::to_string(k));
    ExchangeMatrix r(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == k || j == k) {
                r(i, j) = -b(i, j);
                continue;
            }
            int bik = b(i, k), bkj = b(k, j);
            int sign = (bik > 0) - (bik < 0);
            r(i, j) = b(i, j) + sign * std::max(bik * bkj, 0);
        }
    }
    return r;
}

Perm compose(const Perm& g, const Perm& h) {
    Perm r(h.size());
    for (std::size_t i = 0; i < h.size(); ++i) r[i] = g[h[i]];
    return r;
}

Perm inverse(const Perm& g) {
    Perm r(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) r[g[i]] = static_cast<int>(i);
    return r;
}

bool is_permutation(const Perm& p) {
    std::vector<bool> seen(p.size(), false);
    for (int x : p) {
        if (x < 0 || x >= static_cast<int>(p.size()) || seen[x]) return false;
        seen[x] = true;
    }
    return true;
}

bool is_identity(const Perm& p) {
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i] != static_cast<int>(i)) return false;
    return true;
}

std::vector<Perm> perm_closure(const std::vector<Perm>& generators, std::size_t domain,
                               std::size_t cap) {
    Perm id(domain);
    for (std::size_t i = 0; i < domain; ++i) id[i] = static_cast<int>(i);
    for (const auto& g : generators)
        if (g.size() != domain || !is_permutation(g))
            throw validation_error("BadGenerator", "generator is not a permutation");
    std::vector<Perm> elements{id};
    std::set<Perm> seen{id};
    std::deque<std::size_t> queue{0};
    while (!queue.empty()) {
        std::size_t cur = queue.front();
        queue.pop_front();
        for (const auto& g : generators) {
            Perm next = compose(g, elements[cur]);
            if (seen.insert(next).second) {
                if (elements.size() >= cap)
                    throw validation_error("ClosureTooLarge",
                                           "group order exceeds " + std::to_string(cap));
                elements.push_back(next);
                queue.push_back(elements.size() - 1);
            }
        }
    }
    return elements;
}

QuiverAutomorphism make_automorphism(const Quiver& q, const Perm& vperm,
                                     const std::vector<std::pair<int, int>>& arrow_map) {
    QuiverAutomorphism g;
    g.vperm = vperm;
    g.aperm.assign(q.arrows().size(), -1);
    for (auto [from, to] : arrow_map) g.aperm[q.index_of(from)] = static_cast<int>(q.index_of(to));
    check_automorphism(q, g);
    return g;
}

void check_automorphism(const Quiver& q, const QuiverAutomorphism& g) {
    if (static_cast<int>(g.vperm.size()) != q.nvertices() || !is_permutation(g.vperm))
        throw validation_error("NotAutomorphism", "vertex map is not a permutation");
    if (g.aperm.size() != q.arrows().size() || !is_permutation(g.aperm))
        throw validation_error("NotAutomorphism", "arrow map is not a permutation");
    for (std::size_t i = 0; i < q.arrows().size(); ++i) {
        const Arrow& a = q.arrows()[i];
        const Arrow& b = q.arrows()[g.aperm[i]];
        if (b.source != g.vperm[a.source] || b.target != g.vperm[a.target])
            throw validation_error("NotAutomorphism",
                                   "arrow " + q.arrow_label(a.id) + " sent to " +
                                       q.arrow_label(b.id) + " against its orientation");
    }
}

QuiverAutomorphism compose(const QuiverAutomorphism& g, const QuiverAutomorphism& h) {
    return QuiverAutomorphism{compose(g.vperm, h.vperm), compose(g.aperm, h.aperm)};
}

PermGroup group_closure(const Quiver& q, const std::vector<QuiverAutomorphism>& generators,
                        std::size_t cap) {
    const std::size_t nv = static_cast<std::size_t>(q.nvertices());
    const std::size_t na = q.arrows().size();
    std::vector<Perm> flat;
    for (const auto& g : generators) {
        check_automorphism(q, g);
        Perm p(g.vperm);
        for (int x : g.aperm) p.push_back(x + static_cast<int>(nv));
        flat.push_back(std::move(p));
    }
    PermGroup group;
    for (const auto& p : perm_closure(flat, nv + na, cap)) {
        QuiverAutomorphism e;
        e.vperm.assign(p.begin(), p.begin() + static_cast<long>(nv));
        for (std::size_t i = 0; i < na; ++i) e.aperm.push_back(p[nv + i] - static_cast<int>(nv));
        group.elements.push_back(std::move(e));
    }
    return group;
}

AdmissibilityVerdict check_admissible(const Quiver& q, const PermGroup& g) {
    for (std::size_t e = 0; e < g.elements.size(); ++e) {
        const auto& el = g.elements[e];
        if (is_identity(el.vperm) && is_identity(el.aperm)) continue;
        for (int v = 0; v < q.nvertices(); ++v)
            if (el.vperm[v] == v) return AdmissibilityVerdict{false, e, v};
    }
    return {};
}

namespace {

// Orbit index per point, orbits numbered by their smallest member.
std::vector<std::size_t> orbits_of(std::size_t n, const std::vector<const Perm*>& perms,
                                   std::size_t& count) {
    std::vector<std::size_t> orbit(n, static_cast<std::size_t>(-1));
    count = 0;
    for (std::size_t x = 0; x < n; ++x) {
        if (orbit[x] != static_cast<std::size_t>(-1)) continue;
        for (const Perm* p : perms) orbit[(*p)[x]] = count;
        ++count;
    }
    return orbit;
}

}  // namespace

OrbitQuiver orbit_quiver(const Quiver& q, const PermGroup& g) {
    auto verdict = check_admissible(q, g);
    if (!verdict.admissible)
        throw validation_error("NotAdmissible", "group element " + std::to_string(verdict.element) +
                                                    " fixes vertex " +
                                                    q.vertex_label(verdict.vertex));
    const std::size_t nv = static_cast<std::size_t>(q.nvertices());
    const std::size_t na = q.arrows().size();
    for (std::size_t e = 1; e < g.elements.size(); ++e)
        for (std::size_t i = 0; i < na; ++i)
            if (g.elements[e].aperm[i] == static_cast<int>(i))
                throw invariant_error("NotFree", "group element fixes arrow " +
                                                     q.arrow_label(q.arrows()[i].id));

    std::vector<const Perm*> vps, aps;
    for (const auto& el : g.elements) {
        vps.push_back(&el.vperm);
        aps.push_back(&el.aperm);
    }
    std::size_t nvo = 0;
    std::vector<std::size_t> vorb = orbits_of(nv, vps, nvo);

    // Arrow orbits ordered by the smallest arrow id they contain.
    std::map<int, std::vector<std::size_t>> by_min_id;
    std::vector<bool> done(na, false);
    for (std::size_t i = 0; i < na; ++i) {
        if (done[i]) continue;
        std::vector<std::size_t> members;
        for (const Perm* p : aps) {
            std::size_t j = static_cast<std::size_t>((*p)[i]);
            if (!done[j]) {
                done[j] = true;
                members.push_back(j);
            }
        }
        int min_id = q.arrows()[members[0]].id;
        for (auto j : members) min_id = std::min(min_id, q.arrows()[j].id);
        by_min_id.emplace(min_id, std::move(members));
    }

    OrbitQuiver r;
    r.quiver = Quiver(static_cast<int>(nvo));
    r.quiver.vertex_names().resize(nvo);
    for (std::size_t v = 0; v < nv; ++v)
        if (r.quiver.vertex_names()[vorb[v]].empty())
            r.quiver.vertex_names()[vorb[v]] = q.vertex_label(static_cast<int>(v));
    r.vertices = OrbitMap{nvo, vorb};
    r.arrows.target_nvars = by_min_id.size();
    r.arrows.image.assign(na, 0);
    std::size_t k = 0;
    for (const auto& [min_id, members] : by_min_id) {
        const Arrow& rep = q.arrow(min_id);
        r.quiver.add_arrow(min_id, static_cast<int>(vorb[rep.source]),
                           static_cast<int>(vorb[rep.target]), rep.name);
        for (auto j : members) r.arrows.image[j] = k;
        ++k;
    }
    return r;
}

std::string to_dot(const Quiver& q, const std::string& name) {
    std::ostringstream out;
    out << "digraph " << name << " {\n";
    for (int v = 0; v < q.nvertices(); ++v)
        out << "  v" << v << " [label=\"" << q.vertex_label(v) << "\"];\n";
    std::map<std::pair<int, int>, int> mult;
    for (const auto& a : q.arrows()) ++mult[{a.source, a.target}];
    for (const auto& [st, m] : mult) {
        out << "  v" << st.first << " -> v" << st.second;
        if (m > 1) out << " [label=\"" << m << "\"]";
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace gcl
