// Shared helpers for the test suites: fixture loading and a small
// expression reader used to write expected Laurent polynomials by hand.
#pragma once

#include <algorithm>
#include <cctype>
#include <fstream>
#include <functional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "gcl/algebra.hpp"
#include "gcl/cluster.hpp"
#include "gcl/errors.hpp"
#include "gcl/orbit.hpp"
#include "gcl/potential.hpp"
#include "gcl/surface.hpp"
#include "gcl/surface_io.hpp"

namespace gcl::test {

inline std::string fixture_path(const std::string& name) {
    return std::string(GCL_FIXTURES_DIR) + "/" + name + ".json";
}

inline nlohmann::json load_json(const std::string& name) {
    std::ifstream in(fixture_path(name));
    if (!in) throw std::runtime_error("missing fixture " + name);
    return nlohmann::json::parse(in);
}

inline Triangulation load_triangulation(const std::string& name) {
    return triangulation_from_json(load_json(name));
}

inline SurfaceGroupAction load_action(const Triangulation& t, const std::string& name) {
    return validate_action(t, action_from_json(load_json(name).at("action")));
}

inline std::vector<std::string> all_fixtures() {
    return {"square", "pentagon", "hexagon_fan", "hexagon", "nonagon", "dodecagon",
            "punctured_2gon", "punctured_3gon", "punctured_4gon", "punctured_5gon",
            "punctured_4gon_shift2", "punctured_6gon_shift2", "punctured_8gon_shift2", "octahedron",
            "orbifold_triangle", "orbifold_bigon", "orbifold_monogon", "sphere_1_puncture_m1",
            "sphere_1_puncture_m2", "sphere_1_puncture_m3", "sphere_1_puncture_m4", "sphere_2_punctures_r2_s3",
            "sphere_2_punctures_r3_s1", "sphere_2_punctures_r1_s1", "sphere_2_punctures_r2_s2",
            "punctured_monogon_m1", "punctured_monogon_m2", "punctured_monogon_m3",
            "punctured_monogon_m4", "punctured_bigon_m1", "punctured_bigon_m2", "punctured_bigon_m3",
            "punctured_bigon_m4", "annulus", "self_folded_square", "annulus_2_2"};
}

inline std::vector<std::string> action_fixtures() {
    return {"hexagon", "nonagon", "dodecagon", "punctured_2gon", "punctured_3gon", "punctured_4gon",
            "punctured_5gon", "punctured_4gon_shift2", "punctured_6gon_shift2", "punctured_8gon_shift2",
            "octahedron", "annulus_2_2"};
}

// Reads expressions such as "(x1^2 + x2 + 1)/(x1^2 x2)" or "3*y - 2".
// Variables are x1, x2, ... (1-based) and y, which stands for x1.
// Division and negative powers are only allowed for unit monomials.
class ExprReader {
public:
    ExprReader(std::string text, std::size_t nvars) : s_(std::move(text)), n_(nvars) {}

    LaurentPoly read() {
        LaurentPoly p = expr();
        skip();
        if (i_ != s_.size()) fail("trailing input");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& why) const {
        throw std::runtime_error("expression '" + s_ + "' at " + std::to_string(i_) + ": " + why);
    }
    void skip() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }
    bool peek(char c) {
        skip();
        return i_ < s_.size() && s_[i_] == c;
    }
    bool starts_factor() {
        skip();
        if (i_ >= s_.size()) return false;
        const char c = s_[i_];
        return std::isdigit(static_cast<unsigned char>(c)) || c == 'x' || c == 'y' || c == '(';
    }

    LaurentPoly expr() {
        LaurentPoly p = term();
        while (true) {
            if (peek('+')) {
                ++i_;
                p += term();
            } else if (peek('-')) {
                ++i_;
                p -= term();
            } else {
                return p;
            }
        }
    }

    LaurentPoly term() {
        LaurentPoly p = power();
        while (true) {
            if (peek('*')) {
                ++i_;
                p *= power();
            } else if (peek('/')) {
                ++i_;
                p *= inverse(power());
            } else if (starts_factor()) {
                p *= power();
            } else {
                return p;
            }
        }
    }

    LaurentPoly power() {
        LaurentPoly base = atom();
        if (!peek('^')) return base;
        ++i_;
        skip();
        bool neg = false;
        if (i_ < s_.size() && s_[i_] == '-') {
            neg = true;
            ++i_;
        }
        const int e = static_cast<int>(number().get_si());
        LaurentPoly r = base.pow(static_cast<unsigned>(e));
        return neg ? inverse(r) : r;
    }

    LaurentPoly atom() {
        skip();
        if (i_ >= s_.size()) fail("unexpected end");
        const char c = s_[i_];
        if (c == '(') {
            ++i_;
            LaurentPoly p = expr();
            if (!peek(')')) fail("expected )");
            ++i_;
            return p;
        }
        if (c == '-') {
            ++i_;
            return -power();
        }
        if (c == 'y') {
            ++i_;
            return LaurentPoly::variable(n_, 0);
        }
        if (c == 'x') {
            ++i_;
            const long k = number().get_si();
            if (k < 1 || static_cast<std::size_t>(k) > n_) fail("variable out of range");
            return LaurentPoly::variable(n_, static_cast<std::size_t>(k - 1));
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return LaurentPoly::constant(n_, number());
        fail(std::string("unexpected '") + c + "'");
    }

    Int number() {
        skip();
        const std::size_t start = i_;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
        if (start == i_) fail("expected a number");
        return Int(s_.substr(start, i_ - start));
    }

    LaurentPoly inverse(const LaurentPoly& q) {
        if (q.size() != 1) fail("can only divide by a monomial");
        const auto& [m, c] = *q.terms().begin();
        if (c != 1 && c != -1) fail("can only divide by a unit monomial");
        std::vector<int> e(m.exponents());
        for (int& v : e) v = -v;
        return LaurentPoly::monomial(Monomial(e), c);
    }

    std::string s_;
    std::size_t n_;
    std::size_t i_ = 0;
};

inline LaurentPoly P(const std::string& text, std::size_t nvars) {
    return ExprReader(text, nvars).read();
}

// Three 3-cycles a_i -> b_i -> c_i -> a_i joined by the cycle
// a_1 -> a_2 -> a_3 -> a_1, with Z/3 shifting every index.
// Vertices: a_i = i, b_i = 3 + i, c_i = 6 + i.  Arrows: alpha_i: b_i -> c_i
// has id i, beta_i: c_i -> a_i id 3 + i, gamma_i: a_i -> b_i id 6 + i and
// delta_i: a_i -> a_{i+1} id 9 + i.
struct RotationExample {
    Quiver q;
    PermGroup g;
    Potential w;
    static int alpha(int i) { return i; }
    static int beta(int i) { return 3 + i; }
    static int gamma(int i) { return 6 + i; }
    static int delta(int i) { return 9 + i; }
};

inline RotationExample rotation_example() {
    RotationExample r;
    r.q = Quiver(9);
    r.q.vertex_names() = {"a1", "a2", "a3", "b1", "b2", "b3", "c1", "c2", "c3"};
    for (int i = 0; i < 3; ++i) {
        const std::string n = std::to_string(i + 1);
        r.q.add_arrow(RotationExample::alpha(i), 3 + i, 6 + i, "alpha" + n);
        r.q.add_arrow(RotationExample::beta(i), 6 + i, i, "beta" + n);
        r.q.add_arrow(RotationExample::gamma(i), i, 3 + i, "gamma" + n);
        r.q.add_arrow(RotationExample::delta(i), i, (i + 1) % 3, "delta" + n);
    }
    Perm v(9);
    std::vector<std::pair<int, int>> arrows;
    for (int k = 0; k < 9; ++k) v[k] = k / 3 * 3 + (k % 3 + 1) % 3;
    for (int k = 0; k < 12; ++k) arrows.emplace_back(k, k / 3 * 3 + (k % 3 + 1) % 3);
    r.g = group_closure(r.q, {make_automorphism(r.q, v, arrows)});
    r.w.add(CyclicWord({RotationExample::delta(2), RotationExample::delta(1), RotationExample::delta(0)}), 1);
    for (int i = 0; i < 3; ++i)
        r.w.add(CyclicWord({RotationExample::gamma(i), RotationExample::beta(i), RotationExample::alpha(i)}), 1);
    return r;
}

// Kind of the library error thrown by f, or "none".
inline std::string error_kind(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    return "none";
}

// Sorted canonical strings of hand-written expressions.
inline std::vector<std::string> census_of(const std::vector<std::string>& exprs, std::size_t nvars) {
    std::set<std::string> out;
    for (const auto& e : exprs) out.insert(P(e, nvars).str());
    return {out.begin(), out.end()};
}

}  // namespace gcl::test
