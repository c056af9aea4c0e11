#include <gtest/gtest.h>

#include <map>

#include "gcl/explore.hpp"
#include "support.hpp"

namespace gcl {
namespace {

using test::census_of;
using test::error_kind;
using test::load_action;
using test::load_triangulation;
using test::P;

std::vector<std::string> orbifold_census(const std::string& name, const ExploreOptions& opt = {}) {
    const ExchangeGraph g = enumerate(initial_orbifold_seed(load_triangulation(name)), opt);
    EXPECT_EQ(g.status, ExploreStatus::Finite) << name;
    return variable_census(g);
}

bool contains(const std::vector<std::string>& census, const LaurentPoly& p) {
    return std::find(census.begin(), census.end(), p.str()) != census.end();
}

std::size_t degree(const ExchangeGraph& g, int node) {
    std::set<int> nbrs;
    for (const auto& e : g.edges) {
        if (e.from == node) nbrs.insert(e.to);
        if (e.to == node) nbrs.insert(e.from);
    }
    return nbrs.size();
}

// Every diagonal of an n-gon, solved from the initial ones by Ptolemy
// relations x_ac x_bd = x_ab x_cd + x_ad x_bc, with sides equal to 1.
std::vector<LaurentPoly> ptolemy_closure(int n, const std::vector<std::array<int, 2>>& initial) {
    const std::size_t nv = initial.size();
    std::map<std::pair<int, int>, LaurentPoly> x;
    auto key = [n](int a, int b) { return std::make_pair(std::min(a, b) % n, std::max(a, b) % n); };
    for (int i = 0; i < n; ++i) x[key(i, (i + 1) % n)] = LaurentPoly::constant(nv, 1);
    for (std::size_t k = 0; k < nv; ++k) x[key(initial[k][0], initial[k][1])] = LaurentPoly::variable(nv, k);
    for (bool grew = true; grew;) {
        grew = false;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                for (int c = b + 1; c < n; ++c)
                    for (int d = c + 1; d < n; ++d) {
                        const auto ac = key(a, c), bd = key(b, d);
                        const bool have_sides = x.count(key(a, b)) && x.count(key(b, c)) && x.count(key(c, d)) &&
                                                x.count(key(a, d));
                        if (!have_sides || x.count(ac) == x.count(bd)) continue;
                        const LaurentPoly rhs = x[key(a, b)] * x[key(c, d)] + x[key(a, d)] * x[key(b, c)];
                        if (x.count(ac)) x[bd] = exact_div(rhs, x[ac]);
                        else x[ac] = exact_div(rhs, x[bd]);
                        grew = true;
                    }
    }
    std::vector<LaurentPoly> r;
    for (const auto& [k, v] : x)
        if ((k.second - k.first) % n != 1 && (k.first - k.second + n) % n != 1) r.push_back(v);
    return r;
}

std::vector<std::string> census_of_polys(const std::vector<LaurentPoly>& ps) {
    std::vector<std::string> r;
    for (const auto& p : ps) r.push_back(p.str());
    std::sort(r.begin(), r.end());
    r.erase(std::unique(r.begin(), r.end()), r.end());
    return r;
}

TEST(RankOne, SphereWithOnePuncture) {
    for (int m = 1; m <= 4; ++m) {
        const std::string name = "sphere_1_puncture_m" + std::to_string(m);
        EXPECT_EQ(orbifold_census(name), census_of({"y", std::to_string(4 * m * m) + "/y"}, 1)) << name;
    }
}

TEST(RankOne, Square) {
    EXPECT_EQ(variable_census(enumerate(initial_seed(load_triangulation("square")))), census_of({"y", "2/y"}, 1));
}

TEST(RankOne, BigonWithOrbifoldPoint) {
    EXPECT_EQ(orbifold_census("orbifold_bigon"), census_of({"y", "3/y"}, 1));
}

TEST(RankOne, PuncturedMonogon) {
    EXPECT_EQ(orbifold_census("punctured_monogon_m1"), census_of({"y", "2/y"}, 1));
    for (int m = 2; m <= 4; ++m)
        EXPECT_EQ(orbifold_census("punctured_monogon_m" + std::to_string(m)),
                  census_of({"y", std::to_string(m) + "/y"}, 1));
}

TEST(RankTwo, Pentagon) {
    const ExchangeGraph g = enumerate(initial_seed(load_triangulation("pentagon")));
    EXPECT_EQ(variable_census(g),
              census_of({"x1", "x2", "(x2 + 1)/x1", "(x1 + x2 + 1)/(x1 x2)", "(x1 + 1)/x2"}, 2));
    EXPECT_EQ(g.nodes.size(), 5u);
    for (int i = 0; i < 5; ++i) EXPECT_EQ(degree(g, i), 2u);
}

TEST(RankTwo, TriangleWithOrbifoldPoint) {
    EXPECT_EQ(orbifold_census("orbifold_triangle"),
              census_of({"x1", "x2", "(x1^2 + x1 + 1)/x2", "(x1^2 + x1 + x2 + 1)/(x1 x2)",
                         "(x1^2 + x2^2 + x1 x2 + x1 + 2x2 + 1)/(x1^2 x2)", "(x2 + 1)/x1"},
                        2));
}

TEST(RankTwo, PuncturedBigon) {
    EXPECT_EQ(orbifold_census("punctured_bigon_m1"), census_of({"x1", "x2", "2/x1", "2/x2"}, 2));
    for (int m = 2; m <= 4; ++m) {
        const std::string name = "punctured_bigon_m" + std::to_string(m);
        const ExchangeGraph g = enumerate(initial_orbifold_seed(load_triangulation(name)));
        const std::string tm = std::to_string(2 * m);
        EXPECT_EQ(variable_census(g),
                  census_of({"x1", "x2", "2x2/x1", tm + "/x1", tm + "/x2", "2x1/x2"}, 2))
            << name;
        EXPECT_EQ(g.nodes.size(), 6u) << name;
        std::set<std::pair<int, int>> edges;
        for (const auto& e : g.edges) edges.insert({std::min(e.from, e.to), std::max(e.from, e.to)});
        EXPECT_EQ(edges.size(), 6u) << name;
        for (int i = 0; i < 6; ++i) EXPECT_EQ(degree(g, i), 2u) << name;
    }
}

TEST(RankTwo, SphereWithTwoPunctures) {
    for (const auto& [r, s] : std::vector<std::pair<int, int>>{{2, 3}, {2, 2}}) {
        const std::string name = "sphere_2_punctures_r" + std::to_string(r) + "_s" + std::to_string(s);
        const std::string R = std::to_string(r), S = std::to_string(s);
        EXPECT_EQ(orbifold_census(name),
                  census_of({"x1", "x2", "3x2^2/x1", std::to_string(3 * s) + "x2/x1", std::to_string(9 * s * s) + "/x1",
                             std::to_string(3 * r * s) + "/x2", std::to_string(3 * r * r) + "x1/x2^2", R + "x1/x2"},
                            2))
            << name;
    }
    for (int r : {3, 1}) {
        const std::string name = "sphere_2_punctures_r" + std::to_string(r) + "_s1";
        EXPECT_EQ(orbifold_census(name),
                  census_of({"x1", "x2", "3x2/x1", std::to_string(3 * r) + "/x1", std::to_string(3 * r) + "/x2",
                             std::to_string(r) + "x1/x2"},
                            2))
            << name;
    }
}

TEST(RankTwo, InfiniteTypesReachTheCap) {
    ExploreOptions opt;
    opt.cap = 12;
    const ExchangeGraph mono = enumerate(initial_orbifold_seed(load_triangulation("orbifold_monogon")), opt);
    EXPECT_EQ(mono.status, ExploreStatus::CapReached);
    EXPECT_EQ(mono.nodes.size(), 12u);
    const auto mc = variable_census(mono);
    for (const auto& v : {"(x1^2 + x1 + 1)/x2", "x1", "x2", "(x2^2 + x2 + 1)/x1",
                          "((x2^2 + x2 + 1)^2 + (x2^2 + x2 + 1)x1 + x1^2)/(x1^2 x2)"})
        EXPECT_TRUE(contains(mc, P(v, 2))) << v;

    const ExchangeGraph kron = enumerate(initial_seed(load_triangulation("annulus")), opt);
    EXPECT_EQ(kron.status, ExploreStatus::CapReached);
    const auto kc = variable_census(kron);
    for (const auto& v : {"x1", "x2", "(x2^2 + 1)/x1", "(x2^4 + 2x2^2 + x1^2 + 1)/(x1^2 x2)"})
        EXPECT_TRUE(contains(kc, P(v, 2))) << v;

    opt.cap = 100000;
    opt.time_limit = std::chrono::milliseconds(200);
    EXPECT_EQ(enumerate(initial_seed(load_triangulation("annulus")), opt).status, ExploreStatus::TimeLimit);
}

TEST(Enumerate, OrderIndependence) {
    for (const auto& name : {"hexagon_fan", "punctured_4gon", "orbifold_triangle", "self_folded_square"}) {
        const Triangulation t = load_triangulation(name);
        const bool orbifold = !t.is_surface();
        auto run = [&](std::optional<unsigned> seed) {
            ExploreOptions opt;
            opt.shuffle_seed = seed;
            ExchangeGraph g = orbifold ? enumerate(initial_orbifold_seed(t), opt) : enumerate(initial_seed(t), opt);
            std::vector<std::string> nodes = g.nodes;
            std::sort(nodes.begin(), nodes.end());
            return std::make_tuple(nodes, variable_census(g), g.edges.size());
        };
        const auto base = run(std::nullopt);
        for (unsigned seed : {1u, 2u, 3u}) EXPECT_EQ(run(seed), base) << name << " seed " << seed;
    }
}

TEST(Enumerate, ExportFormats) {
    const ExchangeGraph g = enumerate(initial_seed(load_triangulation("pentagon")));
    const std::string dot = export_graph(g, "dot");
    EXPECT_EQ(dot.rfind("graph exchange {", 0), 0u);
    EXPECT_EQ(std::count(dot.begin(), dot.end(), '\n'), 1 + 5 + 5 + 1);
    const auto j = nlohmann::json::parse(export_graph(g, "json"));
    EXPECT_EQ(j.at("status"), "Finite");
    EXPECT_EQ(j.at("nodes").size(), 5u);
    EXPECT_EQ(j.at("edges").size(), 5u);
    EXPECT_EQ(j.at("variables").get<std::vector<std::string>>(), variable_census(g));
    EXPECT_EQ(error_kind([&] { export_graph(g, "svg"); }), "UnknownFormat");
}

TEST(Covering, HexagonAllVariables) {
    const Triangulation t = load_triangulation("hexagon");
    const ExchangeGraph g = enumerate(initial_seed(t));
    std::vector<std::array<int, 2>> initial(t.arcs.begin(), t.arcs.end());
    const auto oracle = ptolemy_closure(6, initial);
    ASSERT_EQ(oracle.size(), 9u);
    EXPECT_EQ(variable_census(g), census_of_polys(oracle));
    const Quotient q = quotient(t, load_action(t, "hexagon"));
    EXPECT_EQ(specialized_census(g, q.arcs), census_of({"y", "3/y", "2"}, 1));
}

TEST(Covering, PuncturedSquareAllVariables) {
    const Triangulation t = load_triangulation("punctured_4gon");
    const ExchangeGraph g = enumerate(initial_seed(t));
    const auto census = variable_census(g);
    EXPECT_EQ(census.size(), 16u);
    const std::string sum = "(x4 x1 + x1 x2 + x2 x3 + x3 x4)";
    std::vector<std::string> expected;
    for (int i = 1; i <= 4; ++i) {
        const std::string xi = "x" + std::to_string(i), xn = "x" + std::to_string(i % 4 + 1),
                          xp = "x" + std::to_string((i + 2) % 4 + 1);
        expected.push_back(xi);
        expected.push_back(sum + xi + "/(x1 x2 x3 x4)");
        expected.push_back("(" + sum + " - " + xi + " " + xn + ")/(" + xi + " " + xn + ")");
        expected.push_back("(" + xp + " + " + xn + ")/" + xi);
    }
    EXPECT_EQ(census, census_of(expected, 4));
    const Quotient q = quotient(t, load_action(t, "punctured_4gon"));
    EXPECT_EQ(specialized_census(g, q.arcs), census_of({"y", "4/y", "2", "3"}, 1));
}

TEST(SeedKey, IgnoresLabels) {
    const Seed s = initial_seed(load_triangulation("pentagon"));
    Seed swapped = s;
    std::swap(swapped.cluster[0], swapped.cluster[1]);
    swapped.B = ExchangeMatrix({{s.B(1, 1), s.B(1, 0)}, {s.B(0, 1), s.B(0, 0)}});
    swapped.triangulation.reset();
    Seed plain = s;
    plain.triangulation.reset();
    EXPECT_EQ(seed_key(swapped), seed_key(plain));
    EXPECT_NE(seed_key(mutate_seed(s, 0)), seed_key(s));
}

}  // namespace
}  // namespace gcl
