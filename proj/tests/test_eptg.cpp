#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "rdg/eptg.hpp"
#include "rdg/oracle.hpp"
#include "support.hpp"

using namespace rdg;

namespace {

bool contains(const std::vector<Vertex> &list, Vertex v)
{
    return std::find(list.begin(), list.end(), v) != list.end();
}

void expect_error(Errc code, const std::function<void()> &f)
{
    try {
        f();
        ADD_FAILURE() << "no error raised";
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), code) << e.what();
    }
}

/// Faces counted directly: triangles, plus one digon between v_inf and each
/// corner, and Euler's formula.
void expect_triangulated(const Eptg &e)
{
    const PlaneGraph &x = e.extended;
    std::size_t digons = 0;
    for (const Face &f : faces(x)) {
        if (f.boundary.size() == 2) {
            ++digons;
            EXPECT_TRUE(contains(f.boundary, e.v_inf));
            continue;
        }
        EXPECT_EQ(f.boundary.size(), 3u);
    }
    EXPECT_EQ(digons, e.base.vertex_count() == 1 ? 2u : e.corners.size());
    EXPECT_EQ(static_cast<long>(x.vertex_count()) - static_cast<long>(x.edge_count()) +
                  static_cast<long>(faces(x).size()),
              2);
}

} // namespace

TEST(Extend, DiamondWithFourCorners)
{
    const Eptg e = extend(test::diamond(), {1, 2, 3, 4});
    EXPECT_EQ(e.v_inf, 5);
    EXPECT_EQ(degree(e.extended, e.v_inf), 8);
    EXPECT_EQ(e.construction_edges.size(), 4u);
    expect_triangulated(e);
    EXPECT_TRUE(audit(e).passed);
}

TEST(Extend, K4WithThreeCornersKeepsItsSeparatingTriangle)
{
    const Eptg e = extend(test::k4(), {1, 2, 3});
    expect_triangulated(e);
    const auto all = find_separating_triangles(e.extended);
    ASSERT_EQ(all.size(), 1u);
    EXPECT_EQ(all[0].vertices, (std::array<Vertex, 3>{1, 2, 3}));
    EXPECT_EQ(all[0].inside, std::vector<Vertex>{4});
    EXPECT_EQ(all[0].outside, std::vector<Vertex>{e.v_inf});
    EXPECT_TRUE(separating_triangles_through_vinf(e).empty());
}

TEST(Extend, SingleEdgeIsTheBaseShape)
{
    const Eptg e = extend(test::single_edge(), {1, 2});
    EXPECT_EQ(faces(e.extended).size(), 4u);
    expect_triangulated(e);
    EXPECT_TRUE(separating_triangles_through_vinf(e).empty());
}

TEST(Extend, RejectsBadCorners)
{
    expect_error(Errc::TooManyCorners, [] { extend(test::corpus("fig4"), {1, 2, 3, 4, 5}); });
    expect_error(Errc::UnknownVertex, [] { extend(test::diamond(), {1, 9}); });
    expect_error(Errc::CornerNotExterior, [] { extend(test::k4(), {4}); });
    expect_error(Errc::PreconditionViolated, [] { extend(test::diamond(), {1, 1}); });
}

TEST(ChooseCorners, DiamondTakesBothArcs)
{
    const auto c = choose_corners(test::diamond());
    EXPECT_EQ(std::set<Vertex>(c.begin(), c.end()), (std::set<Vertex>{1, 2, 3, 4}));
    EXPECT_TRUE(contains(c, 2));
    EXPECT_TRUE(contains(c, 4));
}

TEST(ChooseCorners, ThreeChordBlockUsesCriticalArcs)
{
    const auto c = choose_corners(test::corpus("fig4"));
    EXPECT_EQ(c.size(), 4u);
    EXPECT_TRUE(contains(c, 2));
    EXPECT_TRUE(contains(c, 7));
}

TEST(ChooseCorners, WithoutShortcutsTakesSmallestExterior)
{
    auto c = choose_corners(test::wheel4());
    std::sort(c.begin(), c.end());
    EXPECT_EQ(c, (std::vector<Vertex>{1, 2, 3, 4}));
}

TEST(ChooseCorners, TooManyCriticalShortcuts)
{
    expect_error(Errc::TooManyCriticalShortcuts, [] { choose_corners(test::corpus("pentagon_bumps")); });
}

TEST(ThroughVinf, DiamondHasAtMostFour)
{
    const Eptg e = extend(test::diamond(), {2, 4, 1, 3});
    const auto t = separating_triangles_through_vinf(e);
    EXPECT_LE(t.size(), 4u);
    for (const auto &tri : t)
        EXPECT_TRUE(contains({tri.vertices.begin(), tri.vertices.end()}, e.v_inf));
    EXPECT_LE(critical_sides(e, t).size(), 4u);
}

TEST(FourPole, DiamondCompletionIsValid)
{
    const Eptg e = extend(test::diamond(), choose_corners(test::diamond()));
    const auto all = completions(e);
    ASSERT_EQ(all.size(), 1u);
    const FourPoleCheck c = check_four_pole(all[0]);
    EXPECT_TRUE(c.valid) << c.reason;
    EXPECT_EQ(all[0].rooms(), (std::vector<Vertex>{1, 2, 3, 4}));
}

TEST(FourPole, K4CompletionHasSeparatingTriangle)
{
    const Eptg e = extend(test::k4(), choose_corners(test::k4()));
    bool any = false;
    for (const auto &x : completions(e))
        any = any || check_four_pole(x).valid;
    EXPECT_FALSE(any);
}

TEST(Extend, EveryEnumeratedGraphExtendsToATriangulation)
{
    for (int n = 1; n <= 6; ++n)
        for (const PlaneGraph &g : enumerate_ptgs(n, true)) {
            const Eptg e = extend(g, choose_corners(g));
            expect_triangulated(e);
            const EptgAudit a = audit(e);
            EXPECT_TRUE(a.passed && a.euler) << serialize_graph(g);
        }
}
