// Potentials on quivers: cyclic words, cyclic derivatives, orbit potentials
// and dimension counts for monomial Jacobian ideals.
#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gcl/quiver.hpp"

namespace gcl {

using Rational = mpq_class;

// Paths are written left to right and composed right to left: {a, b, c}
// means c first, then b, then a.
using Path = std::vector<int>;

// Oriented cycle up to rotation, stored in its lexicographically least rotation.
class CyclicWord {
public:
    CyclicWord() = default;
    explicit CyclicWord(Path arrows);

    const Path& arrows() const { return w_; }
    std::size_t length() const { return w_.size(); }
    // Throws NotACycle if consecutive arrows do not compose or the path is open.
    void check(const Quiver& q) const;

    friend bool operator==(const CyclicWord& a, const CyclicWord& b) { return a.w_ == b.w_; }
    friend bool operator<(const CyclicWord& a, const CyclicWord& b) { return a.w_ < b.w_; }

private:
    Path w_;
};

Path canonical_rotation(const Path& p);

class PathCombo {
public:
    void add(const Path& p, const Rational& c);
    const std::map<Path, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    PathCombo scaled(const Rational& c) const;
    // Arrowwise image of every path.
    PathCombo mapped(const std::map<int, int>& arrow_image) const;
    std::string str(const Quiver& q) const;

    friend bool operator==(const PathCombo& a, const PathCombo& b) {
        return a.terms_ == b.terms_;
    }

private:
    std::map<Path, Rational> terms_;
};

class Potential {
public:
    void add(const CyclicWord& w, const Rational& c);
    const std::map<CyclicWord, Rational>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    void check(const Quiver& q) const;

    // "c * a.b.c ; c' * d.e" in ascending word order; "0" when empty.
    std::string str(const Quiver& q) const;
    static Potential parse(const std::string& text, const Quiver& q);

    friend bool operator==(const Potential& a, const Potential& b) {
        return a.terms_ == b.terms_;
    }

private:
    std::map<CyclicWord, Rational> terms_;
};

PathCombo partial_derivative(const Quiver& q, const Potential& w, int alpha);

Potential apply(const Quiver& q, const QuiverAutomorphism& g, const Potential& w);
PathCombo apply(const Quiver& q, const QuiverAutomorphism& g, const PathCombo& p);

// True iff g permutes the summands of w and keeps their coefficients.
bool automorphism_check(const Quiver& q, const Potential& w, const QuiverAutomorphism& g);

struct OrbitPotential {
    OrbitQuiver orbit;
    Potential potential;
};

OrbitPotential orbit_potential(const Quiver& q, const Potential& w, const PermGroup& g);

struct JacobianCheck {
    bool ok = true;
    int failing_arrow = -1;
    std::string detail;
};

// d_{G alpha}(W_G) == |G| * pi(d_alpha W) for every arrow alpha of q.
JacobianCheck jacobian_identity_check(const Quiver& q, const Potential& w, const PermGroup& g);

struct Dimension {
    enum class Kind { Finite, Infinite, Unknown } kind = Kind::Finite;
    std::size_t value = 0;  // finite dimension, or paths counted below maxlen
};

// Counts paths (trivial ones included) that contain no relation path as a factor.
Dimension monomial_jacobian_dimension(const Quiver& q, const std::vector<PathCombo>& relations,
                                      std::size_t maxlen);

}  // namespace gcl
