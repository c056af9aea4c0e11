// Finite groups acting on a surface triangulation, the orbifold they cut
// out, and orbit mutation in the cover.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gcl/cluster.hpp"

namespace gcl {

// One group element, acting on every kind of cell.
struct SurfaceSymmetry {
    Perm points;
    Perm arcs;
    Perm segments;
    Perm triangles;

    bool is_identity() const;
};

struct ActionGenerator {
    Perm points;
    Perm arcs;
};

struct SurfaceGroupAction {
    std::vector<ActionGenerator> generators;
    std::vector<SurfaceSymmetry> elements;  // identity first

    std::size_t order() const { return elements.size(); }
};

// Closes the generators under composition and checks that every element maps
// the triangulation to itself with orientation and tags, acting freely on arcs.
SurfaceGroupAction validate_action(const Triangulation& t, const std::vector<ActionGenerator>& gens);

struct OrbitStructure {
    std::vector<std::vector<int>> arc_orbits;    // sorted, ordered by least arc
    std::vector<int> arc_orbit;                  // arc -> orbit index
    std::vector<std::vector<int>> point_orbits;
    std::vector<int> point_orbit;
    std::vector<int> point_stabilizer;           // order of the stabilizer of each point
    std::vector<std::vector<int>> segment_orbits;
    std::vector<int> segment_orbit;
    std::vector<std::vector<int>> triangle_orbits;
    std::vector<int> triangle_stabilizer;
    std::vector<int> fixed_triangles;            // least triangle of each orbit with stabilizer 3

    const std::vector<int>& orbit_of_arc(int arc) const { return arc_orbits.at(arc_orbit.at(arc)); }
};

OrbitStructure orbit_structure(const Triangulation& t, const SurfaceGroupAction& g);

struct Quotient {
    OrbifoldDescriptor descriptor;
    Triangulation triangulation;  // arcs are the arc orbits, in order
    OrbitMap arcs;                // cover arc -> quotient arc
    OrbitStructure orbits;
};

Quotient quotient(const Triangulation& t, const SurfaceGroupAction& g);

// Arc permutation that, together with the point permutation, maps t to itself.
// Arcs outside `free_arcs` keep the images in `arcs`.
std::optional<Perm> induced_arc_perm(const Triangulation& t, const Perm& points, const Perm& arcs,
                                     const std::vector<int>& free_arcs);

struct OrbitMutation {
    Seed seed;
    SurfaceGroupAction action;  // the same group acting on the new triangulation
    std::string case_name;      // "independent", "fixed-triangle" or "stabilized-puncture"
    std::vector<int> sequence;  // ordinary mutations performed
};

// Mutates the whole orbit of the arc, returning the G-stable seed that differs
// from s exactly in that orbit.
OrbitMutation orbit_mutate_surface(const Seed& s, const SurfaceGroupAction& g, int arc);

struct CoveringReport {
    bool equal_images = false;  // the new orbit variables share one F-image
    bool polynomial = false;    // F(x * x') has no negative exponents
    bool matches = false;       // F(x * x') is the exchange polynomial on the quotient
    int quotient_arc = -1;
    std::string case_tag;
    LaurentPoly product;
    LaurentPoly expected;
    std::vector<LaurentPoly> images;

    bool ok() const { return equal_images && polynomial && matches; }
    std::string str() const;
};

// F sends cover variables to quotient variables; by default the orbit map of
// the quotient of s itself, which is right when s is the initial seed.
CoveringReport covering_consistency(const Seed& s, const SurfaceGroupAction& g, int arc,
                                    const std::optional<OrbitMap>& f = std::nullopt);

}  // namespace gcl
