// Arrow-level quivers, exchange matrices and their mutation, finite
// automorphism groups, admissibility and orbit quivers.
#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "gcl/algebra.hpp"

namespace gcl {

struct Arrow {
    int id = 0;
    int source = 0;
    int target = 0;
    std::string name;  // display only
};

class Quiver {
public:
    Quiver() = default;
    explicit Quiver(int nvertices) : n_(nvertices) {}

    int nvertices() const { return n_; }
    const std::vector<Arrow>& arrows() const { return arrows_; }
    std::vector<std::string>& vertex_names() { return vnames_; }
    const std::vector<std::string>& vertex_names() const { return vnames_; }

    // Appends an arrow; id must be unused and endpoints in range.
    void add_arrow(int id, int source, int target, std::string name = {});
    // Position of the arrow with this id, or throws UnknownArrow.
    std::size_t index_of(int id) const;
    bool has_arrow(int id) const;
    const Arrow& arrow(int id) const { return arrows_[index_of(id)]; }
    std::string arrow_label(int id) const;
    std::string vertex_label(int v) const;

private:
    int n_ = 0;
    std::vector<Arrow> arrows_;
    std::vector<std::string> vnames_;
};

class ExchangeMatrix {
public:
    ExchangeMatrix() = default;
    explicit ExchangeMatrix(int n) : b_(n, std::vector<int>(n, 0)) {}
    explicit ExchangeMatrix(std::vector<std::vector<int>> rows);

    static ExchangeMatrix from_quiver(const Quiver& q);

    int size() const { return static_cast<int>(b_.size()); }
    int operator()(int i, int j) const { return b_[i][j]; }
    int& operator()(int i, int j) { return b_[i][j]; }
    const std::vector<std::vector<int>>& rows() const { return b_; }
    bool is_skew_symmetric() const;
    // Reorders rows and columns: result(i,j) = (*this)(perm[i], perm[j]).
    ExchangeMatrix permuted(const std::vector<int>& perm) const;
    // Quiver with |b(i,j)| arrows i->j for each positive entry.
    Quiver to_quiver() const;

    // Rows of space-separated integers, one row per line.
    std::string str() const;
    static ExchangeMatrix parse(const std::string& text);

    friend bool operator==(const ExchangeMatrix& a, const ExchangeMatrix& b) {
        return a.b_ == b.b_;
    }
    friend bool operator<(const ExchangeMatrix& a, const ExchangeMatrix& b) {
        return a.b_ < b.b_;
    }

private:
    std::vector<std::vector<int>> b_;
};

ExchangeMatrix mutate_quiver(const ExchangeMatrix& b, int k);

// Permutations act on {0..n-1}; p[i] is the image of i.
using Perm = std::vector<int>;
Perm compose(const Perm& g, const Perm& h);  // g after h
Perm inverse(const Perm& g);
bool is_permutation(const Perm& p);
bool is_identity(const Perm& p);

// All products of the generators, breadth first from the identity with
// generators taken in input order.  Throws ClosureTooLarge past cap.
std::vector<Perm> perm_closure(const std::vector<Perm>& generators, std::size_t domain,
                               std::size_t cap = 10080);

// Acts on vertices and on arrow positions of a fixed quiver.
struct QuiverAutomorphism {
    Perm vperm;
    Perm aperm;  // arrow index -> arrow index

    friend bool operator==(const QuiverAutomorphism& a, const QuiverAutomorphism& b) {
        return a.vperm == b.vperm && a.aperm == b.aperm;
    }
};

// Builds an automorphism from a vertex map and a map on arrow ids.
QuiverAutomorphism make_automorphism(const Quiver& q, const Perm& vperm,
                                     const std::vector<std::pair<int, int>>& arrow_map);
// Throws NotAutomorphism unless g is a bijection respecting every arrow.
void check_automorphism(const Quiver& q, const QuiverAutomorphism& g);
QuiverAutomorphism compose(const QuiverAutomorphism& g, const QuiverAutomorphism& h);

struct PermGroup {
    std::vector<QuiverAutomorphism> elements;  // elements[0] is the identity

    std::size_t order() const { return elements.size(); }
};

PermGroup group_closure(const Quiver& q, const std::vector<QuiverAutomorphism>& generators,
                        std::size_t cap = 10080);

struct AdmissibilityVerdict {
    bool admissible = true;
    std::size_t element = 0;  // index into the group
    int vertex = -1;
};

AdmissibilityVerdict check_admissible(const Quiver& q, const PermGroup& g);

struct OrbitQuiver {
    Quiver quiver;
    OrbitMap vertices;  // vertex -> orbit vertex
    OrbitMap arrows;    // arrow index -> orbit arrow index
};

OrbitQuiver orbit_quiver(const Quiver& q, const PermGroup& g);

// Graphviz rendering; parallel arrows are merged with a multiplicity label.
std::string to_dot(const Quiver& q, const std::string& name = "Q");

}  // namespace gcl
