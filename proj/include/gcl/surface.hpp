// Combinatorial tagged triangulations of marked surfaces and orbifolds.
//
// A triangulation is held in its ideal form: every triangle is a clockwise
// triple of sides with the corner at which each side starts.  Self-folded
// triangles are triples whose radius occurs twice; an orbifold triangle is a
// loop plus a pendant edge running to the orbifold point.  Tags live on the
// punctures: a notched puncture notches every arc end there, and the loop of
// a 1-self-folded triangle stands for its radius notched at the enclosed
// puncture.
#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "gcl/quiver.hpp"

namespace gcl {

enum class PointKind { Boundary, Puncture };
enum class Tag { Plain, Notched };

struct OrbifoldDescriptor {
    int genus = 0;
    std::vector<int> boundaries;  // marked points on each boundary component
    std::vector<int> punctures;   // isotropy of each puncture
    int orbifold_points = 0;

    int b() const { return static_cast<int>(boundaries.size()); }
    int c() const;
    int p() const { return static_cast<int>(punctures.size()); }
    // Throws DegenerateSurface or ExcludedSurface.
    void validate() const;
    // Same data up to the order of boundary components and punctures.
    bool same_as(const OrbifoldDescriptor& o) const;
    std::string str() const;
};

// 6g + 3b + 3p + 2x + c - 6; throws DegenerateSurface when not positive.
int rank(const OrbifoldDescriptor& d);

struct MarkedPoint {
    PointKind kind = PointKind::Boundary;
    int isotropy = 1;
};

enum class SideKind { Arc, Segment, Pendant };

struct Side {
    SideKind kind = SideKind::Arc;
    int id = 0;

    bool is_arc() const { return kind == SideKind::Arc; }
    friend bool operator==(const Side& a, const Side& b) { return a.kind == b.kind && a.id == b.id; }
    friend bool operator!=(const Side& a, const Side& b) { return !(a == b); }
    friend bool operator<(const Side& a, const Side& b) {
        return a.kind != b.kind ? a.kind < b.kind : a.id < b.id;
    }
};

inline Side arc_side(int id) { return Side{SideKind::Arc, id}; }
inline Side segment_side(int id) { return Side{SideKind::Segment, id}; }

std::string side_name(const Side& s);

struct Triangle {
    bool orbifold = false;       // sides are {loop, pendant, pendant}
    std::array<Side, 3> sides;   // clockwise
    std::array<int, 3> corners;  // corners[i] is where sides[i] starts

    // Self-folded: one side occurs twice.  Returns the position of the loop.
    std::optional<int> self_folded_loop() const;
};

struct TaggedArc {
    std::array<int, 2> ends{};
    std::array<Tag, 2> tags{Tag::Plain, Tag::Plain};

    friend bool operator==(const TaggedArc& a, const TaggedArc& b) {
        return a.ends == b.ends && a.tags == b.tags;
    }
};

struct SelfFold {
    int triangle = -1;
    Side loop;
    int radius = -1;
    int puncture = -1;  // enclosed puncture
    int base = -1;      // base point of the loop
};

class Triangulation {
public:
    OrbifoldDescriptor descriptor;
    std::vector<MarkedPoint> points;
    int orbifold_points = 0;
    std::vector<std::array<int, 2>> segments;  // clockwise start and end
    std::vector<std::array<int, 2>> arcs;      // ideal endpoints
    std::vector<Triangle> triangles;
    std::vector<bool> notched;                 // per marked point

    int size() const { return static_cast<int>(arcs.size()); }
    bool is_surface() const;
    int npoints() const { return static_cast<int>(points.size()); }
    bool is_orbifold_vertex(int v) const { return v >= npoints(); }
    int isotropy(int point) const;

    // (triangle, position) pairs where the side occurs.
    std::vector<std::pair<int, int>> slots(const Side& s) const;
    // Triangle corners at the point.
    int degree(int point) const;

    std::optional<SelfFold> self_fold_with_radius(int arc) const;
    std::optional<SelfFold> self_fold_with_loop(int arc) const;
    // Orbifold triangle whose loop is the arc.
    std::optional<int> orbifold_triangle_of(int arc) const;
    bool is_orbifold_loop(int arc) const { return orbifold_triangle_of(arc).has_value(); }
    // Loop of a 1-self-folded triangle that is recorded as a notched radius.
    bool is_tagged_loop(int arc) const;
    // The loop/radius partner inside a 1-self-folded triangle.
    std::optional<int> bar(int arc) const;

    TaggedArc tagged(int arc) const;
    std::vector<TaggedArc> tagged_arcs() const;
};

struct ValidationReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

// Marked points + triangles - (arcs + boundary segments).
int euler_characteristic(const Triangulation& t);
ValidationReport validate(const Triangulation& t, const OrbifoldDescriptor& d);
inline ValidationReport validate(const Triangulation& t) { return validate(t, t.descriptor); }

enum class ArcCase {
    Generic,
    LoopOf1SelfFolded,
    RadiusOf1SelfFolded,
    RadiusOfOncePunctured1Bigon,
    RadiusOfMSelfFolded,
    OrbifoldLoop,
    RadiusInOrbifoldLoop,
    SphereOneMPunctureTwoOrbifoldPoints,
};

struct ArcLocalConfig {
    ArcCase kind = ArcCase::Generic;
    int m = 1;                   // isotropy driving the case, when relevant
    std::vector<Side> neighbors; // OrbifoldLoop: alpha, beta; bigon: the other radius
    bool monogon = false;        // radius of a once-punctured monogon
};

std::string to_string(ArcCase c);
ArcLocalConfig classify_arc(const Triangulation& t, int arc);

Quiver quiver_from_triangulation(const Triangulation& t);

// A 1-self-folded triangle with a notched puncture describes the same tagged
// arcs as the one with loop and radius labels swapped and the puncture plain.
// Puts every such triangle in the plain form.
void normalize(Triangulation& t);

// Replaces the arc by the unique other arc completing a triangulation; the
// new arc keeps the id of the old one.  The result is normalized.
Triangulation flip(const Triangulation& t, int arc);

// Arc-level tag maps.
std::vector<TaggedArc> iota(const Triangulation& ideal);
std::vector<std::array<int, 2>> tau_map(const std::vector<TaggedArc>& tagged,
                                        const std::vector<MarkedPoint>& points);

// Deterministic text form with arcs renamed through rename[arc].
std::string canonical_form(const Triangulation& t, const std::vector<int>& rename);

}  // namespace gcl
