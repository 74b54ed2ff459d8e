#include <gtest/gtest.h>

#include <algorithm>

#include "rdg/floorplan.hpp"
#include "support.hpp"

using namespace rdg;

namespace {

/// Room 1 spans the left column; 2, 3, 4 are stacked on the right, top down.
Floorplan diamond_plan() { return {2, 3, {{1, 0, 0, 1, 3}, {2, 1, 2, 1, 1}, {3, 1, 1, 1, 1}, {4, 1, 0, 1, 1}}}; }

Floorplan pair_plan() { return {2, 1, {{1, 0, 0, 1, 1}, {2, 1, 0, 1, 1}}}; }

bool has_problem(const Floorplan &f, const std::string &needle)
{
    const auto r = validate_floorplan(f);
    return !r.valid && std::any_of(r.problems.begin(), r.problems.end(),
                                   [&](const std::string &p) { return p.find(needle) != std::string::npos; });
}

std::size_t count(const std::string &text, const std::string &needle)
{
    std::size_t n = 0;
    for (auto at = text.find(needle); at != std::string::npos; at = text.find(needle, at + 1))
        ++n;
    return n;
}

} // namespace

TEST(Floorplan, ValidPlans)
{
    EXPECT_TRUE(validate_floorplan(diamond_plan()).valid);
    EXPECT_TRUE(validate_floorplan(pair_plan()).valid);
}

TEST(Floorplan, InvalidPlans)
{
    EXPECT_TRUE(has_problem({2, 2, {{1, 0, 0, 1, 1}, {2, 1, 0, 1, 1}, {3, 0, 1, 1, 1}, {4, 1, 1, 1, 1}}}, "four rooms"));
    EXPECT_TRUE(has_problem({2, 1, {{1, 0, 0, 2, 1}, {2, 1, 0, 1, 1}}}, "overlap"));
    EXPECT_TRUE(has_problem({3, 1, {{1, 0, 0, 1, 1}, {2, 1, 0, 1, 1}}}, "fill"));
    EXPECT_TRUE(has_problem({1, 1, {{1, 0, 0, 2, 1}}}, "leaves"));
    EXPECT_TRUE(has_problem({2, 1, {{1, 0, 0, 1, 1}, {1, 1, 0, 1, 1}}}, "twice"));
    EXPECT_TRUE(has_problem({1, 1, {{1, 0, 0, 0, 1}}}, "degenerate"));
    EXPECT_TRUE(has_problem({0, 0, {}}, "no rooms"));
}

TEST(Floorplan, AdjacencyBoundaryAndCorners)
{
    const Floorplan f = diamond_plan();
    EXPECT_EQ(adjacency(f), (std::vector<std::pair<Vertex, Vertex>>{{1, 2}, {1, 3}, {1, 4}, {2, 3}, {3, 4}}));
    EXPECT_EQ(boundary_rooms(f), (std::vector<Vertex>{1, 2, 3, 4}));
    EXPECT_EQ(corner_rooms(f), (std::vector<Vertex>{1, 2, 4}));
}

TEST(Floorplan, ThreeRoomJoints)
{
    const Floorplan f{3, 2, {{1, 0, 0, 2, 1}, {2, 2, 0, 1, 2}, {3, 0, 1, 2, 1}}};
    ASSERT_TRUE(validate_floorplan(f).valid);
    EXPECT_EQ(adjacency(f), (std::vector<std::pair<Vertex, Vertex>>{{1, 2}, {1, 3}, {2, 3}}));
    const Floorplan g{2, 2, {{1, 0, 0, 1, 1}, {2, 1, 0, 1, 2}, {3, 0, 1, 1, 1}}};
    EXPECT_EQ(adjacency(g), (std::vector<std::pair<Vertex, Vertex>>{{1, 2}, {1, 3}, {2, 3}}));
}

TEST(Normalize, RemovesUnusedGridLines)
{
    const Floorplan wide{4, 1, {{1, 0, 0, 2, 1}, {2, 2, 0, 2, 1}}};
    EXPECT_EQ(normalize(wide), pair_plan());
    const Floorplan stretched{5, 6, {{1, 0, 0, 2, 6}, {2, 2, 4, 3, 2}, {3, 2, 2, 3, 2}, {4, 2, 0, 3, 2}}};
    EXPECT_EQ(normalize(stretched), diamond_plan());
}

TEST(Normalize, IsIdempotentAndSortsRooms)
{
    Floorplan f = diamond_plan();
    std::reverse(f.rects.begin(), f.rects.end());
    const Floorplan once = normalize(f);
    EXPECT_EQ(once, diamond_plan());
    EXPECT_EQ(normalize(once), once);
    std::mt19937 rng(3);
    for (int t = 0; t < 50; ++t) {
        const Floorplan p = test::random_plan(9, rng);
        EXPECT_EQ(normalize(p), p);
    }
}

TEST(Svg, LabelledRectangles)
{
    const std::string two = render_svg(pair_plan());
    EXPECT_EQ(count(two, "<rect "), 2u);
    EXPECT_EQ(count(two, "id=\"room-"), 2u);
    const std::string four = render_svg(diamond_plan());
    EXPECT_EQ(count(four, "<rect "), 4u);
    for (const char *label : {">1</text>", ">2</text>", ">3</text>", ">4</text>"})
        EXPECT_EQ(count(four, label), 1u);
    EXPECT_EQ(render_svg(diamond_plan()), four);
    EXPECT_THROW(render_svg({}), Error);
}

TEST(Floorplan, JsonRoundTrip)
{
    const Floorplan f = diamond_plan();
    EXPECT_EQ(floorplan_from_json(nlohmann::json::parse(floorplan_to_json(f).dump())), f);
    EXPECT_THROW(floorplan_from_json(nlohmann::json::parse(R"({"width":1})")), Error);
}

TEST(DualGraph, DiamondPlan)
{
    const PlaneGraph g = dual_graph(diamond_plan());
    EXPECT_TRUE(validate_ptg(g).passed);
    EXPECT_EQ(g.edge_count(), 5u);
    EXPECT_TRUE(test::same_face(g.outer_face().boundary, {1, 2, 3, 4}));
}

TEST(DualGraph, RandomPlansGiveTriangulatedGraphs)
{
    std::mt19937 rng(5);
    for (int t = 0; t < 100; ++t) {
        const Floorplan f = test::random_plan(std::uniform_int_distribution<int>(1, 15)(rng), rng);
        ASSERT_TRUE(validate_floorplan(f).valid);
        const PlaneGraph g = dual_graph(f);
        EXPECT_TRUE(validate_ptg(g).passed);
        std::vector<std::pair<Vertex, Vertex>> edges;
        for (const Edge &e : g.edges())
            edges.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v));
        std::sort(edges.begin(), edges.end());
        EXPECT_EQ(edges, adjacency(f));
    }
}
