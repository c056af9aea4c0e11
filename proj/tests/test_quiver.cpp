#include <gtest/gtest.h>

#include <random>

#include "gcl/quiver.hpp"
#include "support.hpp"

namespace gcl {
namespace {

using test::error_kind;

ExchangeMatrix random_skew(std::mt19937& rng, int n) {
    std::uniform_int_distribution<int> d(-2, 2);
    ExchangeMatrix b(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            b(i, j) = d(rng);
            b(j, i) = -b(i, j);
        }
    return b;
}

// Matrix mutation written out entry by entry.
ExchangeMatrix mutate_by_hand(const ExchangeMatrix& b, int k) {
    ExchangeMatrix r = b;
    for (int i = 0; i < b.size(); ++i)
        for (int j = 0; j < b.size(); ++j) {
            if (i == k || j == k) {
                r(i, j) = -b(i, j);
            } else {
                const int s = b(i, k) > 0 ? 1 : (b(i, k) < 0 ? -1 : 0);
                r(i, j) = b(i, j) + s * std::max(b(i, k) * b(k, j), 0);
            }
        }
    return r;
}

TEST(ExchangeMatrix, SourceMutationReversesArrow) {
    const ExchangeMatrix b({{0, 1}, {-1, 0}});
    EXPECT_EQ(mutate_quiver(b, 0), ExchangeMatrix({{0, -1}, {1, 0}}));
}

TEST(ExchangeMatrix, ThreeCycleMutation) {
    const ExchangeMatrix b({{0, 1, -1}, {-1, 0, 1}, {1, -1, 0}});
    EXPECT_EQ(mutate_quiver(b, 0), ExchangeMatrix({{0, -1, 1}, {1, 0, 0}, {-1, 0, 0}}));
}

TEST(ExchangeMatrix, MutationMatchesRuleAndIsAnInvolution) {
    std::mt19937 rng(5);
    for (int t = 0; t < 200; ++t) {
        const ExchangeMatrix b = random_skew(rng, 2 + t % 5);
        for (int k = 0; k < b.size(); ++k) {
            const ExchangeMatrix m = mutate_quiver(b, k);
            EXPECT_EQ(m, mutate_by_hand(b, k));
            EXPECT_TRUE(m.is_skew_symmetric());
            EXPECT_EQ(mutate_quiver(m, k), b);
        }
    }
}

TEST(ExchangeMatrix, Errors) {
    EXPECT_EQ(error_kind([] { mutate_quiver(ExchangeMatrix(2), 2); }), "IndexOutOfRange");
    EXPECT_EQ(error_kind([] { ExchangeMatrix({{0, 1}, {0}}); }), "BadMatrix");
    EXPECT_EQ(error_kind([] { ExchangeMatrix::parse("0 1\n-1 x"); }), "ParseError");
}

TEST(ExchangeMatrix, TextRoundTrip) {
    const ExchangeMatrix b({{0, 2, -1}, {-2, 0, 3}, {1, -3, 0}});
    EXPECT_EQ(b.str(), "0 2 -1\n-2 0 3\n1 -3 0\n");
    EXPECT_EQ(ExchangeMatrix::parse(b.str()), b);
}

TEST(ExchangeMatrix, FromQuiverCancelsTwoCycles) {
    Quiver q(3);
    q.add_arrow(0, 0, 1);
    q.add_arrow(1, 1, 0);
    q.add_arrow(2, 1, 2);
    q.add_arrow(3, 1, 2);
    q.add_arrow(4, 2, 2);
    const ExchangeMatrix b = ExchangeMatrix::from_quiver(q);
    EXPECT_EQ(b, ExchangeMatrix({{0, 0, 0}, {0, 0, 2}, {0, -2, 0}}));
    EXPECT_EQ(ExchangeMatrix::from_quiver(b.to_quiver()), b);
}

TEST(Quiver, ArrowBookkeeping) {
    Quiver q(2);
    q.add_arrow(7, 0, 1, "a");
    EXPECT_EQ(error_kind([&] { q.add_arrow(7, 1, 0); }), "DuplicateArrow");
    EXPECT_EQ(error_kind([&] { q.add_arrow(8, 0, 2); }), "BadArrow");
    EXPECT_EQ(error_kind([&] { q.index_of(3); }), "UnknownArrow");
    EXPECT_EQ(q.arrow_label(7), "a");
    q.add_arrow(8, 0, 1);
    const std::string dot = to_dot(q);
    EXPECT_NE(dot.find("v0 -> v1 [label=\"2\"]"), std::string::npos);
}

TEST(Perm, CompositionAndInverse) {
    const Perm g{1, 2, 0}, h{1, 0, 2};
    EXPECT_EQ(compose(g, h), (Perm{2, 1, 0}));
    EXPECT_TRUE(is_identity(compose(g, inverse(g))));
    EXPECT_FALSE(is_permutation({0, 0, 1}));
    EXPECT_EQ(perm_closure({g}, 3).size(), 3u);
    EXPECT_EQ(perm_closure({g, h}, 3).size(), 6u);
    EXPECT_EQ(error_kind([&] { perm_closure({g, h}, 3, 4); }), "ClosureTooLarge");
}

TEST(GroupClosure, Orders) {
    Quiver tri(3);
    tri.add_arrow(0, 0, 1);
    tri.add_arrow(1, 1, 2);
    tri.add_arrow(2, 2, 0);
    EXPECT_EQ(group_closure(tri, {}).order(), 1u);
    const auto rot = make_automorphism(tri, {1, 2, 0}, {{0, 1}, {1, 2}, {2, 0}});
    const PermGroup g = group_closure(tri, {rot});
    EXPECT_EQ(g.order(), 3u);
    EXPECT_TRUE(is_identity(g.elements[0].vperm));
    EXPECT_EQ(g.elements[1], rot);
}

TEST(Automorphism, RejectsMapsBreakingArrows) {
    Quiver tri(3);
    tri.add_arrow(0, 0, 1);
    tri.add_arrow(1, 1, 2);
    tri.add_arrow(2, 2, 0);
    EXPECT_EQ(error_kind([&] { make_automorphism(tri, {1, 0, 2}, {{0, 0}, {1, 2}, {2, 1}}); }),
              "NotAutomorphism");
    EXPECT_EQ(error_kind([&] { make_automorphism(tri, {0, 0, 2}, {{0, 0}, {1, 1}, {2, 2}}); }),
              "NotAutomorphism");
}

TEST(Admissibility, RotationIsAdmissible) {
    const auto ex = test::rotation_example();
    EXPECT_EQ(ex.g.order(), 3u);
    EXPECT_TRUE(check_admissible(ex.q, ex.g).admissible);
    EXPECT_TRUE(check_admissible(ex.q, group_closure(ex.q, {})).admissible);
}

TEST(Admissibility, ReflectionFixingAVertexIsNot) {
    Quiver q(3);
    q.add_arrow(0, 0, 1);
    q.add_arrow(1, 2, 1);
    const PermGroup g = group_closure(q, {make_automorphism(q, {2, 1, 0}, {{0, 1}, {1, 0}})});
    const AdmissibilityVerdict v = check_admissible(q, g);
    EXPECT_FALSE(v.admissible);
    EXPECT_EQ(v.element, 1u);
    EXPECT_EQ(v.vertex, 1);
    EXPECT_EQ(error_kind([&] { orbit_quiver(q, g); }), "NotAdmissible");
}

TEST(OrbitQuiver, RotationExample) {
    const auto ex = test::rotation_example();
    const OrbitQuiver o = orbit_quiver(ex.q, ex.g);
    EXPECT_EQ(o.quiver.nvertices(), 3);
    ASSERT_EQ(o.quiver.arrows().size(), 4u);
    // Representatives are the least ids: a1, b1, c1 and alpha1, beta1, gamma1, delta1.
    EXPECT_EQ(o.quiver.vertex_names(), (std::vector<std::string>{"a1", "b1", "c1"}));
    const int a = 0, b = 1, c = 2;
    auto arrow = [&](int id) { return o.quiver.arrow(id); };
    EXPECT_EQ(arrow(0).source, b);
    EXPECT_EQ(arrow(0).target, c);
    EXPECT_EQ(arrow(3).source, c);
    EXPECT_EQ(arrow(3).target, a);
    EXPECT_EQ(arrow(6).source, a);
    EXPECT_EQ(arrow(6).target, b);
    EXPECT_EQ(arrow(9).source, a);
    EXPECT_EQ(arrow(9).target, a);
    for (std::size_t i = 0; i < 12; ++i)
        EXPECT_EQ(o.arrows.image[i], static_cast<std::size_t>(ex.q.arrows()[i].id / 3));
    for (int v = 0; v < 9; ++v) EXPECT_EQ(o.vertices.image[v], static_cast<std::size_t>(v / 3));
}

TEST(OrbitQuiver, TrivialGroupCopiesTheQuiver) {
    const auto ex = test::rotation_example();
    const OrbitQuiver o = orbit_quiver(ex.q, group_closure(ex.q, {}));
    EXPECT_EQ(o.quiver.nvertices(), 9);
    EXPECT_EQ(ExchangeMatrix::from_quiver(o.quiver), ExchangeMatrix::from_quiver(ex.q));
}

TEST(OrbitQuiver, SwappedThreeCyclesCollapse) {
    Quiver q(6);
    for (int i = 0; i < 3; ++i) {
        q.add_arrow(i, i, (i + 1) % 3);
        q.add_arrow(3 + i, 3 + i, 3 + (i + 1) % 3);
    }
    const auto swap = make_automorphism(q, {3, 4, 5, 0, 1, 2}, {{0, 3}, {1, 4}, {2, 5}, {3, 0}, {4, 1}, {5, 2}});
    const OrbitQuiver o = orbit_quiver(q, group_closure(q, {swap}));
    EXPECT_EQ(o.quiver.nvertices(), 3);
    EXPECT_EQ(o.quiver.arrows().size(), 3u);
    EXPECT_EQ(ExchangeMatrix::from_quiver(o.quiver), ExchangeMatrix({{0, 1, -1}, {-1, 0, 1}, {1, -1, 0}}));
}

TEST(OrbitQuiver, CountsDivideByGroupOrderAndArrowsAreFree) {
    const auto ex = test::rotation_example();
    const OrbitQuiver o = orbit_quiver(ex.q, ex.g);
    EXPECT_EQ(o.quiver.nvertices() * static_cast<int>(ex.g.order()), ex.q.nvertices());
    EXPECT_EQ(o.quiver.arrows().size() * ex.g.order(), ex.q.arrows().size());
    for (std::size_t e = 1; e < ex.g.order(); ++e)
        for (std::size_t i = 0; i < ex.q.arrows().size(); ++i)
            EXPECT_NE(ex.g.elements[e].aperm[i], static_cast<int>(i));
}

}  // namespace
}  // namespace gcl
