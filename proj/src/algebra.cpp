#include "gcl/algebra.hpp"

#include <algorithm>
#include <sstream>

#include "gcl/errors.hpp"

namespace gcl {

namespace {

void check_same_nvars(const LaurentPoly& p, const LaurentPoly& q, const char* op) {
    if (p.nvars() != q.nvars())
        throw validation_error("DimensionMismatch", std::string(op) + ": " +
                                   std::to_string(p.nvars()) + " vs " +
                                   std::to_string(q.nvars()) + " variables");
}

}  // namespace

bool Monomial::is_one() const {
    return std::all_of(e_.begin(), e_.end(), [](int x) { return x == 0; });
}

bool Monomial::is_polynomial() const {
    return std::all_of(e_.begin(), e_.end(), [](int x) { return x >= 0; });
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r(*this);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
    return r;
}

Monomial Monomial::operator/(const Monomial& o) const {
    Monomial r(*this);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] -= o.e_[i];
    return r;
}

Monomial Monomial::meet(const Monomial& o) const {
    Monomial r(*this);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = std::min(e_[i], o.e_[i]);
    return r;
}

bool Monomial::divides(const Monomial& o) const {
    for (std::size_t i = 0; i < e_.size(); ++i)
        if (o.e_[i] < e_[i]) return false;
    return true;
}

void OrbitMap::check() const {
    std::vector<bool> hit(target_nvars, false);
    for (auto t : image) {
        if (t >= target_nvars)
            throw validation_error("BadOrbitMap", "image index " + std::to_string(t) +
                                                      " out of range");
        hit[t] = true;
    }
    for (std::size_t t = 0; t < target_nvars; ++t)
        if (!hit[t])
            throw validation_error("BadOrbitMap",
                                   "target variable " + std::to_string(t) + " not hit");
}

OrbitMap OrbitMap::collapse_all(std::size_t source_nvars) {
    return OrbitMap{1, std::vector<std::size_t>(source_nvars, 0)};
}

LaurentPoly LaurentPoly::constant(std::size_t nvars, const Int& c) {
    LaurentPoly p(nvars);
    p.add_term(Monomial(nvars), c);
    return p;
}

LaurentPoly LaurentPoly::variable(std::size_t nvars, std::size_t i) {
    Monomial m(nvars);
    m[i] = 1;
    return monomial(m);
}

LaurentPoly LaurentPoly::monomial(const Monomial& m, const Int& c) {
    LaurentPoly p(m.nvars());
    p.add_term(m, c);
    return p;
}

bool LaurentPoly::is_polynomial() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const auto& t) { return t.first.is_polynomial(); });
}

int LaurentPoly::min_degree(std::size_t i) const {
    int d = 0;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        d = first ? m[i] : std::min(d, m[i]);
        first = false;
    }
    return d;
}

int LaurentPoly::max_degree(std::size_t i) const {
    int d = 0;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        d = first ? m[i] : std::max(d, m[i]);
        first = false;
    }
    return d;
}

Monomial LaurentPoly::min_exponents() const {
    if (terms_.empty()) return Monomial(nvars_);
    Monomial r = terms_.begin()->first;
    for (const auto& [m, c] : terms_) r = r.meet(m);
    return r;
}

void LaurentPoly::add_term(const Monomial& m, const Int& c) {
    if (m.nvars() != nvars_)
        throw validation_error("DimensionMismatch", "term has " + std::to_string(m.nvars()) +
                                                        " exponents, expected " +
                                                        std::to_string(nvars_));
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r(*this);
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& q) {
    check_same_nvars(*this, q, "add");
    for (const auto& [m, c] : q.terms_) add_term(m, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& q) {
    check_same_nvars(*this, q, "sub");
    for (const auto& [m, c] : q.terms_) add_term(m, -c);
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& q) {
    *this = *this * q;
    return *this;
}

LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q) {
    check_same_nvars(p, q, "mul");
    LaurentPoly r(p.nvars_);
    if (p.is_zero() || q.is_zero()) return r;
    const LaurentPoly& small = p.size() <= q.size() ? p : q;
    const LaurentPoly& large = p.size() <= q.size() ? q : p;
    Int prod;
    for (const auto& [ms, cs] : small.terms_) {
        for (const auto& [ml, cl] : large.terms_) {
            prod = cs * cl;
            r.add_term(ms * ml, prod);
        }
    }
    return r;
}

LaurentPoly LaurentPoly::scaled(const Int& c) const {
    LaurentPoly r(nvars_);
    if (c == 0) return r;
    r.terms_ = terms_;
    for (auto& [m, v] : r.terms_) v *= c;
    return r;
}

LaurentPoly LaurentPoly::times(const Monomial& mono) const {
    LaurentPoly r(nvars_);
    for (const auto& [m, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), m * mono, c);
    return r;
}

LaurentPoly LaurentPoly::pow(unsigned k) const {
    LaurentPoly result = constant(nvars_, 1);
    LaurentPoly base = *this;
    while (k > 0) {
        if (k & 1u) result = result * base;
        k >>= 1u;
        if (k > 0) base = base * base;
    }
    return result;
}

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) out << " + ";
        first = false;
        out << c.get_str();
        bool star = false;
        for (std::size_t i = 0; i < m.nvars(); ++i) {
            if (m[i] == 0) continue;
            out << (star ? " " : " * ") << 'x' << i << '^' << m[i];
            star = true;
        }
    }
    return out.str();
}

LaurentPoly LaurentPoly::parse(const std::string& text, std::size_t nvars) {
    auto fail = [&](const std::string& why) {
        return validation_error("ParseError", why + " in \"" + text + "\"");
    };
    LaurentPoly p(nvars);
    if (text == "0") return p;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t next = text.find(" + ", pos);
        std::string term = text.substr(pos, next == std::string::npos ? std::string::npos
                                                                        : next - pos);
        std::istringstream in(term);
        std::string tok;
        if (!(in >> tok)) throw fail("empty term");
        Int c;
        if (c.set_str(tok, 10) != 0) throw fail("bad coefficient '" + tok + "'");
        Monomial m(nvars);
        if (in >> tok) {
            if (tok != "*") throw fail("expected '*'");
            bool any = false;
            while (in >> tok) {
                auto caret = tok.find('^');
                if (tok.size() < 4 || tok[0] != 'x' || caret == std::string::npos)
                    throw fail("bad factor '" + tok + "'");
                std::size_t var = std::stoul(tok.substr(1, caret - 1));
                int e = std::stoi(tok.substr(caret + 1));
                if (var >= nvars) throw fail("variable index out of range");
                m[var] += e;
                any = true;
            }
            if (!any) throw fail("dangling '*'");
        }
        if (p.terms_.count(m)) throw fail("repeated monomial");
        p.add_term(m, c);
        if (next == std::string::npos) break;
        pos = next + 3;
    }
    return p;
}

LaurentPoly add(const LaurentPoly& p, const LaurentPoly& q) { return p + q; }

LaurentPoly mul(const LaurentPoly& p, const LaurentPoly& q) { return p * q; }

namespace {

// Leading-term division of ordinary polynomials whose exponents are all >= 0.
bool poly_divide(LaurentPoly rem, const LaurentPoly& den, LaurentPoly& quot) {
    const Monomial& lm = den.leading_monomial();
    const Int& lc = den.leading_coefficient();
    Int qc, r;
    while (!rem.is_zero()) {
        const Monomial& top = rem.leading_monomial();
        if (!lm.divides(top)) return false;
        mpz_tdiv_qr(qc.get_mpz_t(), r.get_mpz_t(), rem.leading_coefficient().get_mpz_t(),
                    lc.get_mpz_t());
        if (r != 0) return false;
        Monomial shift = top / lm;
        quot.add_term(shift, qc);
        rem -= den.times(shift).scaled(qc);
    }
    return true;
}

}  // namespace

bool divides(const LaurentPoly& q, const LaurentPoly& p) {
    check_same_nvars(p, q, "divides");
    if (q.is_zero()) return false;
    if (p.is_zero()) return true;
    Monomial mp = p.min_exponents();
    Monomial mq = q.min_exponents();
    LaurentPoly quot(p.nvars());
    Monomial inv_mp = Monomial(p.nvars()) / mp;
    Monomial inv_mq = Monomial(q.nvars()) / mq;
    return poly_divide(p.times(inv_mp), q.times(inv_mq), quot);
}

LaurentPoly exact_div(const LaurentPoly& p, const LaurentPoly& q) {
    check_same_nvars(p, q, "exact_div");
    if (q.is_zero()) throw invariant_error("NotDivisible", "division by zero polynomial");
    if (p.is_zero()) return LaurentPoly(p.nvars());
    if (q.is_monomial()) {
        const auto& [m, c] = *q.terms().begin();
        LaurentPoly r(p.nvars());
        Int qc, rem;
        for (const auto& [pm, pc] : p.terms()) {
            mpz_tdiv_qr(qc.get_mpz_t(), rem.get_mpz_t(), pc.get_mpz_t(), c.get_mpz_t());
            if (rem != 0)
                throw invariant_error("NotDivisible", "(" + p.str() + ") / (" + q.str() + ")");
            r.add_term(pm / m, qc);
        }
        return r;
    }
    Monomial mp = p.min_exponents();
    Monomial mq = q.min_exponents();
    Monomial one(p.nvars());
    LaurentPoly quot(p.nvars());
    if (!poly_divide(p.times(one / mp), q.times(one / mq), quot))
        throw invariant_error("NotDivisible", "(" + p.str() + ") / (" + q.str() + ")");
    return quot.times(mp / mq);
}

LaurentPoly specialize(const LaurentPoly& p, const OrbitMap& f) {
    if (p.nvars() != f.image.size())
        throw validation_error("DimensionMismatch",
                               "specialize: polynomial has " + std::to_string(p.nvars()) +
                                   " variables, map has " + std::to_string(f.image.size()));
    LaurentPoly r(f.target_nvars);
    for (const auto& [m, c] : p.terms()) {
        Monomial t(f.target_nvars);
        for (std::size_t i = 0; i < m.nvars(); ++i) t[f.image[i]] += m[i];
        r.add_term(t, c);
    }
    return r;
}

LaurentPoly monomial_gcd(const LaurentPoly& m1, const LaurentPoly& m2) {
    check_same_nvars(m1, m2, "monomial_gcd");
    auto unit_monomial = [](const LaurentPoly& m) {
        return m.is_monomial() && m.terms().begin()->second == 1;
    };
    if (!unit_monomial(m1) || !unit_monomial(m2))
        throw validation_error("NonMonomialInput",
                               "monomial_gcd(" + m1.str() + ", " + m2.str() + ")");
    return LaurentPoly::monomial(m1.terms().begin()->first.meet(m2.terms().begin()->first));
}

LaurentPoly substitute(const LaurentPoly& p, const std::vector<LaurentPoly>& values) {
    if (values.size() != p.nvars())
        throw validation_error("DimensionMismatch", "substitute: wrong number of values");
    if (values.empty()) {
        LaurentPoly r(0);
        for (const auto& [m, c] : p.terms()) r.add_term(m, c);
        return r;
    }
    const std::size_t n = values.front().nvars();
    // Cache powers per variable; exponents here are small.
    std::vector<std::map<int, LaurentPoly>> powers(values.size());
    auto power = [&](std::size_t i, int e) -> const LaurentPoly& {
        auto it = powers[i].find(e);
        if (it != powers[i].end()) return it->second;
        LaurentPoly v;
        if (e >= 0) {
            v = values[i].pow(static_cast<unsigned>(e));
        } else {
            if (!values[i].is_monomial())
                throw validation_error("NonMonomialInput",
                                       "negative power of non-monomial " + values[i].str());
            const auto& [m, c] = *values[i].terms().begin();
            if (c != 1 && c != -1)
                throw validation_error("NonMonomialInput",
                                       "negative power of " + values[i].str());
            Monomial inv = Monomial(n) / m;
            v = LaurentPoly::monomial(inv, c).pow(static_cast<unsigned>(-e));
        }
        return powers[i].emplace(e, std::move(v)).first->second;
    };
    LaurentPoly r(n);
    for (const auto& [m, c] : p.terms()) {
        LaurentPoly t = LaurentPoly::constant(n, c);
        for (std::size_t i = 0; i < m.nvars(); ++i)
            if (m[i] != 0) t = t * power(i, m[i]);
        r += t;
    }
    return r;
}

}  // namespace gcl
