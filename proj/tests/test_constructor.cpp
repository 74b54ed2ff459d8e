#include <gtest/gtest.h>

#include "rdg/constructor.hpp"
#include "rdg/decision.hpp"
#include "rdg/oracle.hpp"
#include "support.hpp"

using namespace rdg;

namespace {

Eptg standard_extension(const PlaneGraph &g) { return extend(g, choose_corners(g)); }

void expect_exact(const Floorplan &f, const Eptg &e)
{
    const auto valid = validate_floorplan(f);
    EXPECT_TRUE(valid.valid) << (valid.problems.empty() ? "" : valid.problems.front());
    const DualReport r = dual_exactness(f, e);
    EXPECT_TRUE(r.passed) << dual_report_to_json(r).dump();
    EXPECT_EQ(normalize(f), f);
}

} // namespace

TEST(Construct, SingleEdgeGivesTwoUnitRooms)
{
    const Eptg e = extend(test::single_edge(), {1, 2});
    const Floorplan f = construct_rfp(e);
    EXPECT_EQ(f.rects.size(), 2u);
    EXPECT_EQ(f.width * f.height, 2);
    for (const Rect &r : f.rects)
        EXPECT_EQ(r.w * r.h, 1);
    expect_exact(f, e);
}

TEST(Construct, SingleVertexGivesOneRoom)
{
    const PlaneGraph g = test::graph({7}, {{7, {}}}, {7});
    const Floorplan f = construct_rfp(standard_extension(g));
    EXPECT_EQ(f, (Floorplan{1, 1, {{7, 0, 0, 1, 1}}}));
}

TEST(Construct, DiamondPutsEachCornerInItsOwnRoom)
{
    const Eptg e = standard_extension(test::diamond());
    const Floorplan f = construct_rfp(e);
    expect_exact(f, e);
    ASSERT_EQ(f.rects.size(), 4u);
    EXPECT_EQ(f.width * f.height, 6);
    EXPECT_EQ(corner_rooms(f), (std::vector<Vertex>{1, 2, 3, 4}));
}

TEST(Construct, OpenOctahedron)
{
    const Eptg e = standard_extension(test::corpus("octahedron_open"));
    const Floorplan f = construct_rfp(e);
    EXPECT_EQ(f.rects.size(), 6u);
    expect_exact(f, e);
}

TEST(Construct, CorpusAcceptances)
{
    for (const char *name : {"fig4", "fig10_chain", "two_diamonds", "triangle"}) {
        const PlaneGraph g = test::corpus(name);
        ASSERT_TRUE(decide(g).is_rdg) << name;
        const Eptg e = standard_extension(g);
        expect_exact(construct_rfp(e), e);
    }
}

TEST(Construct, RejectedExtensionHasNoPlan)
{
    try {
        construct_rfp(standard_extension(test::k4()));
        FAIL() << "built a plan for K4";
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), Errc::PreconditionViolated);
    }
}

TEST(Construct, EveryAcceptedSmallGraph)
{
    for (int n = 1; n <= 6; ++n)
        for (const PlaneGraph &g : enumerate_ptgs(n, true)) {
            if (!decide(g).is_rdg)
                continue;
            const Eptg e = standard_extension(g);
            const Floorplan f = construct_rfp(e);
            expect_exact(f, e);
            EXPECT_EQ(construct_rfp(e), f);
        }
}

TEST(Construct, RandomPlanDuals)
{
    std::mt19937 rng(2024);
    for (int t = 0; t < 100; ++t) {
        const int n = std::uniform_int_distribution<int>(7, 15)(rng);
        const PlaneGraph g = dual_graph(test::random_plan(n, rng));
        const Eptg e = standard_extension(g);
        expect_exact(construct_rfp(e), e);
    }
}

TEST(DualExactness, SwappedRoomsAreCaught)
{
    const Eptg e = standard_extension(test::diamond());
    Floorplan f = construct_rfp(e);
    ASSERT_TRUE(dual_exactness(f, e).passed);
    Rect *a = nullptr, *b = nullptr;
    for (Rect &r : f.rects) {
        if (r.id == 1)
            a = &r;
        if (r.id == 2)
            b = &r;
    }
    std::swap(a->id, b->id);
    const DualReport r = dual_exactness(f, e);
    EXPECT_FALSE(r.passed);
    EXPECT_FALSE(r.missing.empty());
    EXPECT_FALSE(r.extra.empty());
    EXPECT_TRUE(r.rooms_match);
}

TEST(DualExactness, PairPlanMatchesSingleEdge)
{
    const Eptg e = extend(test::single_edge(), {1, 2});
    EXPECT_TRUE(dual_exactness({2, 1, {{1, 0, 0, 1, 1}, {2, 1, 0, 1, 1}}}, e).passed);
    const DualReport missing_room = dual_exactness({1, 1, {{1, 0, 0, 1, 1}}}, e);
    EXPECT_FALSE(missing_room.passed);
    EXPECT_FALSE(missing_room.rooms_match);
}
