#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "gcl/surface.hpp"
#include "gcl/surface_io.hpp"
#include "support.hpp"

namespace gcl {
namespace {

using test::error_kind;
using test::load_json;
using test::load_triangulation;

std::vector<int> identity(int n) {
    std::vector<int> r(static_cast<std::size_t>(n));
    std::iota(r.begin(), r.end(), 0);
    return r;
}

bool same_up_to_relabel(const Triangulation& a, const Triangulation& b) {
    std::vector<int> rename = identity(a.size());
    const std::string target = canonical_form(b, identity(b.size()));
    do {
        if (canonical_form(a, rename) == target) return true;
    } while (std::next_permutation(rename.begin(), rename.end()));
    return false;
}

std::array<int, 2> sorted(std::array<int, 2> e) {
    if (e[0] > e[1]) std::swap(e[0], e[1]);
    return e;
}

OrbifoldDescriptor disk(std::vector<int> boundaries, std::vector<int> punctures = {}, int x = 0) {
    OrbifoldDescriptor d;
    d.boundaries = std::move(boundaries);
    d.punctures = std::move(punctures);
    d.orbifold_points = x;
    return d;
}

TEST(Rank, Formula) {
    for (int m = 1; m <= 4; ++m) EXPECT_EQ(rank(disk({}, {m}, 2)), 1);
    EXPECT_EQ(rank(disk({5})), 2);
    EXPECT_EQ(rank(disk({4}, {1})), 4);
    EXPECT_EQ(rank(disk({1, 1})), 2);
    // The once-punctured monogon stays in: its orbifold versions have rank 1.
    for (int m = 1; m <= 4; ++m) EXPECT_EQ(rank(disk({1}, {m})), 1);
    OrbifoldDescriptor torus;
    torus.genus = 1;
    torus.punctures = {1};
    EXPECT_EQ(rank(torus), 3);
}

TEST(Rank, ExcludedSurfaces) {
    EXPECT_EQ(error_kind([] { rank(disk({}, {1, 1, 1})); }), "DegenerateSurface");
    EXPECT_EQ(error_kind([] { rank(disk({2})); }), "DegenerateSurface");
    EXPECT_EQ(error_kind([] { rank(disk({3})); }), "DegenerateSurface");
    EXPECT_EQ(error_kind([] { rank(disk({1})); }), "DegenerateSurface");
    EXPECT_EQ(error_kind([] { rank(disk({0, 3})); }), "DegenerateSurface");
    EXPECT_EQ(error_kind([] { rank(disk({1}, {}, 1)); }), "DegenerateSurface");
}

TEST(EulerCharacteristic, MatchesTopology) {
    EXPECT_EQ(euler_characteristic(load_triangulation("square")), 1);
    EXPECT_EQ(euler_characteristic(load_triangulation("sphere_2_punctures_r3_s1")), 2);
    EXPECT_EQ(euler_characteristic(load_triangulation("octahedron")), 2);
    EXPECT_EQ(euler_characteristic(load_triangulation("annulus")), 0);
    for (const auto& name : test::all_fixtures()) {
        const Triangulation t = load_triangulation(name);
        EXPECT_EQ(euler_characteristic(t), 2 - 2 * t.descriptor.genus - t.descriptor.b()) << name;
    }
}

TEST(Validate, AllFixturesAreValid) {
    for (const auto& name : test::all_fixtures()) {
        const Triangulation t = load_triangulation(name);
        const ValidationReport r = validate(t);
        EXPECT_TRUE(r.ok()) << name << ": " << (r.ok() ? "" : r.violations.front());
        EXPECT_EQ(t.size(), rank(t.descriptor)) << name;
    }
}

TEST(Validate, ArcUsedThreeTimes) {
    Triangulation t = load_triangulation("square");
    t.triangles[1].sides[1] = arc_side(0);
    const ValidationReport r = validate(t);
    ASSERT_FALSE(r.ok());
    const bool mentions = std::any_of(r.violations.begin(), r.violations.end(), [](const std::string& v) {
        return v.find("arc 0 occurs in 3") != std::string::npos;
    });
    EXPECT_TRUE(mentions);
}

TEST(Validate, NotchedBoundaryPoint) {
    Triangulation t = load_triangulation("square");
    t.notched[0] = true;
    const ValidationReport r = validate(t);
    ASSERT_FALSE(r.ok());
    EXPECT_NE(r.violations.front().find("notched"), std::string::npos);

    auto j = load_json("square");
    j["arcs"][0]["tags"] = {"notched", "plain"};
    try {
        triangulation_from_json(j);
        FAIL() << "expected a parse error";
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), "ParseError");
        EXPECT_NE(std::string(e.what()).find("arcs[0].tags[0]"), std::string::npos);
    }
}

TEST(Validate, DescriptorMismatch) {
    const Triangulation t = load_triangulation("pentagon");
    const ValidationReport r = validate(t, disk({6}));
    EXPECT_FALSE(r.ok());
}

TEST(ClassifyArc, LocalConfigurations) {
    const Triangulation sf = load_triangulation("self_folded_square");
    EXPECT_EQ(classify_arc(sf, 1).kind, ArcCase::LoopOf1SelfFolded);
    EXPECT_EQ(classify_arc(sf, 0).kind, ArcCase::RadiusOf1SelfFolded);
    EXPECT_EQ(classify_arc(sf, 2).kind, ArcCase::Generic);

    const ArcLocalConfig sphere = classify_arc(load_triangulation("sphere_1_puncture_m2"), 0);
    EXPECT_EQ(sphere.kind, ArcCase::SphereOneMPunctureTwoOrbifoldPoints);
    EXPECT_EQ(sphere.m, 2);

    const ArcLocalConfig radius = classify_arc(load_triangulation("punctured_monogon_m2"), 0);
    EXPECT_EQ(radius.kind, ArcCase::RadiusOfMSelfFolded);
    EXPECT_EQ(radius.m, 2);

    EXPECT_EQ(classify_arc(load_triangulation("orbifold_triangle"), 1).kind, ArcCase::OrbifoldLoop);
}

TEST(QuiverFromTriangulation, Examples) {
    // Inner triangle of the hexagon: an oriented 3-cycle.
    const ExchangeMatrix hex = ExchangeMatrix::from_quiver(quiver_from_triangulation(load_triangulation("hexagon")));
    ASSERT_EQ(hex.size(), 3);
    for (int i = 0; i < 3; ++i) {
        EXPECT_EQ(std::abs(hex(i, (i + 1) % 3)), 1);
        EXPECT_EQ(hex(i, (i + 1) % 3), hex((i + 1) % 3, (i + 2) % 3));
    }
    // Punctured square: an oriented 4-cycle.
    const ExchangeMatrix sq = ExchangeMatrix::from_quiver(quiver_from_triangulation(load_triangulation("punctured_4gon")));
    ASSERT_EQ(sq.size(), 4);
    int arrows = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) arrows += sq(i, j) > 0 ? sq(i, j) : 0;
    EXPECT_EQ(arrows, 4);
    for (int i = 0; i < 4; ++i) {
        int out = 0, in = 0;
        for (int j = 0; j < 4; ++j) {
            out += sq(i, j) > 0;
            in += sq(i, j) < 0;
        }
        EXPECT_EQ(out, 1);
        EXPECT_EQ(in, 1);
    }
    // Pentagon: one arrow.
    const ExchangeMatrix pent = ExchangeMatrix::from_quiver(quiver_from_triangulation(load_triangulation("pentagon")));
    EXPECT_EQ(std::abs(pent(0, 1)), 1);
    // Kronecker annulus: a double arrow.
    const ExchangeMatrix ann = ExchangeMatrix::from_quiver(quiver_from_triangulation(load_triangulation("annulus")));
    EXPECT_EQ(std::abs(ann(0, 1)), 2);
}

TEST(Flip, IsAnInvolution) {
    for (const auto& name : test::all_fixtures()) {
        const Triangulation t = load_triangulation(name);
        for (int k = 0; k < t.size(); ++k) {
            const Triangulation f = flip(t, k);
            EXPECT_TRUE(validate(f).ok()) << name << " arc " << k;
            EXPECT_EQ(f.size(), t.size());
            EXPECT_EQ(canonical_form(flip(f, k), identity(t.size())), canonical_form(t, identity(t.size())))
                << name << " arc " << k;
        }
    }
}

TEST(Flip, PentagonCycle) {
    const Triangulation t = load_triangulation("pentagon");
    Triangulation c = t;
    for (int i = 0; i < 5; ++i) {
        c = flip(c, i % 2);
        EXPECT_EQ(same_up_to_relabel(c, t), i == 4) << "after " << i + 1 << " flips";
    }
}

TEST(Flip, PuncturedBigonCycle) {
    // Alternating flips close up after 4 steps for m = 1 and after 6 for m > 1.
    for (int m = 1; m <= 4; ++m) {
        const Triangulation t = load_triangulation("punctured_bigon_m" + std::to_string(m));
        const int period = m == 1 ? 4 : 6;
        Triangulation c = t;
        for (int i = 0; i < period; ++i) {
            c = flip(c, i % 2);
            EXPECT_EQ(canonical_form(c, identity(2)) == canonical_form(t, identity(2)), i + 1 == period)
                << "m=" << m << " after " << i + 1 << " flips";
        }
    }
}

TEST(Flip, RadiusOfStabilizedPunctureTogglesTheNotch) {
    const Triangulation t = load_triangulation("punctured_monogon_m3");
    const Triangulation f = flip(t, 0);
    EXPECT_NE(f.notched, t.notched);
    EXPECT_EQ(f.tagged(0).ends, t.tagged(0).ends);
}

TEST(Tagging, IotaOfTheLoopIsTheNotchedRadius) {
    const Triangulation t = load_triangulation("self_folded_square");
    const std::vector<TaggedArc> tagged = iota(t);
    ASSERT_EQ(tagged.size(), 4u);
    TaggedArc loop = tagged[1];
    if (loop.ends[0] != 0) {
        std::swap(loop.ends[0], loop.ends[1]);
        std::swap(loop.tags[0], loop.tags[1]);
    }
    EXPECT_EQ(loop.ends, (std::array<int, 2>{0, 4}));
    EXPECT_EQ(loop.tags, (std::array<Tag, 2>{Tag::Plain, Tag::Notched}));
    EXPECT_EQ(tagged[0].tags, (std::array<Tag, 2>{Tag::Plain, Tag::Plain}));
}

TEST(Tagging, TauUndoesIota) {
    for (const auto& name : test::all_fixtures()) {
        const Triangulation t = load_triangulation(name);
        if (!t.is_surface()) continue;
        const auto back = tau_map(iota(t), t.points);
        ASSERT_EQ(back.size(), t.arcs.size());
        for (std::size_t i = 0; i < back.size(); ++i) EXPECT_EQ(sorted(back[i]), sorted(t.arcs[i])) << name << " " << i;
    }
}

TEST(Tagging, PlainTriangulationIsItsOwnTaggedForm) {
    const Triangulation t = load_triangulation("hexagon_fan");
    const auto tagged = iota(t);
    for (std::size_t i = 0; i < tagged.size(); ++i) {
        EXPECT_EQ(sorted(tagged[i].ends), sorted(t.arcs[i]));
        EXPECT_EQ(tagged[i].tags, (std::array<Tag, 2>{Tag::Plain, Tag::Plain}));
    }
}

TEST(SurfaceIo, RoundTrip) {
    for (const auto& name : test::all_fixtures()) {
        const Triangulation t = load_triangulation(name);
        const Triangulation u = triangulation_from_json(to_json(t));
        EXPECT_EQ(to_json(u), to_json(t)) << name;
        EXPECT_EQ(canonical_form(u, identity(u.size())), canonical_form(t, identity(t.size()))) << name;
    }
}

TEST(SurfaceIo, PositionalDiagnostics) {
    auto expect_parse_error = [](nlohmann::json j, const std::string& where) {
        try {
            triangulation_from_json(j);
            ADD_FAILURE() << "expected a parse error at " << where;
        } catch (const Error& e) {
            EXPECT_EQ(e.kind(), "ParseError");
            EXPECT_NE(std::string(e.what()).find(where), std::string::npos) << e.what();
        }
    };
    auto j = load_json("square");
    j.erase("triangles");
    expect_parse_error(j, "triangles");
    j = load_json("square");
    j["triangles"][1]["sides"][0] = "q7";
    expect_parse_error(j, "triangles[1].sides[0]");
    j = load_json("square");
    j["marked_points"][2]["kind"] = "crater";
    expect_parse_error(j, "marked_points[2]");
    j = load_json("square");
    j["arcs"][0]["ends"] = {0};
    expect_parse_error(j, "arcs[0]");
}

TEST(SurfaceIo, ActionParsing) {
    const auto gens = action_from_json(load_json("hexagon").at("action"));
    ASSERT_EQ(gens.size(), 1u);
    EXPECT_EQ(action_from_json(to_json(gens)).front().arcs, gens.front().arcs);
    EXPECT_EQ(error_kind([] { action_from_json(nlohmann::json{{"generators", 3}}); }), "ParseError");
    EXPECT_EQ(error_kind([] { action_from_json(nlohmann::json::parse(R"({"generators":[{"points":[0]}]})")); }),
              "ParseError");
}

}  // namespace
}  // namespace gcl
