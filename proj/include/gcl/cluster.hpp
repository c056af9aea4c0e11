// Seeds and mutation: coefficient-free mutation from an exchange matrix, the
// surface exchange polynomial with its gcd, and the generalized exchange
// polynomials of orbifold triangulations.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gcl/algebra.hpp"
#include "gcl/quiver.hpp"
#include "gcl/surface.hpp"

namespace gcl {

using Cluster = std::vector<LaurentPoly>;

Cluster initial_cluster(std::size_t n);

struct Seed {
    ExchangeMatrix B;
    Cluster cluster;
    std::optional<Triangulation> triangulation;

    int size() const { return B.size(); }
};

Seed initial_seed(const ExchangeMatrix& b);
// Exchange matrix read off the triangulation; the triangulation stays attached.
Seed initial_seed(const Triangulation& t);

// prod x_i^{b_ik} over b_ik > 0 plus prod x_i^{-b_ik} over b_ik < 0.
LaurentPoly exchange_binomial(const ExchangeMatrix& b, int k, const Cluster& x);

Seed mutate_seed(const Seed& s, int k);

struct ExchangePolynomial {
    LaurentPoly value;
    std::string case_tag;
};

// Exchange polynomial of a surface arc from its local configuration, evaluated at the cluster.
ExchangePolynomial surface_exchange_poly(const Triangulation& t, int arc, const Cluster& x);
// Generalized exchange polynomial of an orbifold arc, evaluated at the cluster.
ExchangePolynomial orbifold_exchange_poly(const Triangulation& t, int arc, const Cluster& x);

// Products of the weighted neighbors of an arc in the arc variables:
// clockwise-next sides for plus, clockwise-previous for minus.
struct NeighborProducts {
    LaurentPoly minus;
    LaurentPoly plus;
};
NeighborProducts neighbor_products(const Triangulation& t, int arc);

struct OrbifoldSeed {
    Triangulation triangulation;
    Cluster cluster;

    int size() const { return triangulation.size(); }
};

OrbifoldSeed initial_orbifold_seed(const Triangulation& t);
OrbifoldSeed mutate_orbifold_seed(const OrbifoldSeed& s, int arc);

}  // namespace gcl
