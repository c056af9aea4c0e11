// Exact multivariate Laurent polynomials with arbitrary-precision integer
// coefficients, and the specialization map that collapses variables.
#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace gcl {

using Int = mpz_class;

// Exponent vector; ordered lexicographically.  Negative entries are allowed.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t nvars) : e_(nvars, 0) {}
    explicit Monomial(std::vector<int> exps) : e_(std::move(exps)) {}

    std::size_t nvars() const { return e_.size(); }
    int operator[](std::size_t i) const { return e_[i]; }
    int& operator[](std::size_t i) { return e_[i]; }
    const std::vector<int>& exponents() const { return e_; }

    bool is_one() const;
    // True when every exponent is >= 0.
    bool is_polynomial() const;

    Monomial operator*(const Monomial& o) const;
    Monomial operator/(const Monomial& o) const;
    // Componentwise minimum.
    Monomial meet(const Monomial& o) const;
    // True when o / *this has no negative exponent.
    bool divides(const Monomial& o) const;

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return a.e_ != b.e_; }
    friend bool operator<(const Monomial& a, const Monomial& b) { return a.e_ < b.e_; }

private:
    std::vector<int> e_;
};

// Surjective variable map: source variable i goes to target variable image[i].
struct OrbitMap {
    std::size_t target_nvars = 0;
    std::vector<std::size_t> image;

    // Checks range and surjectivity; throws on violation.
    void check() const;
    static OrbitMap collapse_all(std::size_t source_nvars);
};

class LaurentPoly {
public:
    using TermMap = std::map<Monomial, Int>;

    LaurentPoly() = default;
    explicit LaurentPoly(std::size_t nvars) : nvars_(nvars) {}

    static LaurentPoly constant(std::size_t nvars, const Int& c);
    static LaurentPoly variable(std::size_t nvars, std::size_t i);
    static LaurentPoly monomial(const Monomial& m, const Int& c = 1);

    std::size_t nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_monomial() const { return terms_.size() == 1; }
    // True when no stored exponent is negative.
    bool is_polynomial() const;
    // Degree of variable i over all terms; lowest and highest.
    int min_degree(std::size_t i) const;
    int max_degree(std::size_t i) const;
    // Componentwise minimum over all exponent vectors (zero polynomial: all zeros).
    Monomial min_exponents() const;

    const Monomial& leading_monomial() const { return terms_.rbegin()->first; }
    const Int& leading_coefficient() const { return terms_.rbegin()->second; }

    void add_term(const Monomial& m, const Int& c);

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& q);
    LaurentPoly& operator-=(const LaurentPoly& q);
    LaurentPoly& operator*=(const LaurentPoly& q);

    friend LaurentPoly operator+(LaurentPoly p, const LaurentPoly& q) { return p += q; }
    friend LaurentPoly operator-(LaurentPoly p, const LaurentPoly& q) { return p -= q; }
    friend LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q);
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    LaurentPoly scaled(const Int& c) const;
    LaurentPoly times(const Monomial& m) const;
    LaurentPoly pow(unsigned k) const;

    // Canonical text: terms in ascending monomial order joined by " + ",
    // each as "c * x0^e0 x3^e3" (zero exponents omitted, unit terms as "c").
    std::string str() const;
    static LaurentPoly parse(const std::string& text, std::size_t nvars);

private:
    std::size_t nvars_ = 0;
    TermMap terms_;
};

LaurentPoly add(const LaurentPoly& p, const LaurentPoly& q);
LaurentPoly mul(const LaurentPoly& p, const LaurentPoly& q);

// r with r * q == p, or NotDivisible.
LaurentPoly exact_div(const LaurentPoly& p, const LaurentPoly& q);
bool divides(const LaurentPoly& q, const LaurentPoly& p);

LaurentPoly specialize(const LaurentPoly& p, const OrbitMap& f);

// Componentwise minimum of two unit-coefficient monomials.
LaurentPoly monomial_gcd(const LaurentPoly& m1, const LaurentPoly& m2);

// Ring substitution x_i -> values[i].  Negative exponents need monomial values.
LaurentPoly substitute(const LaurentPoly& p, const std::vector<LaurentPoly>& values);

}  // namespace gcl
