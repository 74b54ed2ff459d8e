#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "rdg/decision.hpp"
#include "rdg/oracle.hpp"
#include "rdg/structure.hpp"
#include "support.hpp"

using namespace rdg;

namespace {

std::vector<std::pair<Vertex, Vertex>> edge_pairs(const PlaneGraph &g)
{
    std::vector<std::pair<Vertex, Vertex>> out;
    for (const Edge &e : g.edges())
        out.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v));
    std::sort(out.begin(), out.end());
    return out;
}

/// Reverses every rotation and renames v to map[v].
PlaneGraph mirrored(const PlaneGraph &g, const std::map<Vertex, Vertex> &map)
{
    std::vector<Vertex> vs;
    std::map<Vertex, std::vector<Vertex>> rot;
    for (Vertex v : g.vertices()) {
        vs.push_back(map.at(v));
        auto around = g.neighbors(v);
        std::reverse(around.begin(), around.end());
        for (Vertex &u : around)
            u = map.at(u);
        rot[map.at(v)] = around;
    }
    std::sort(vs.begin(), vs.end());
    std::vector<Vertex> outer;
    for (Vertex v : g.outer_face().boundary)
        outer.push_back(map.at(v));
    return PlaneGraph::from_neighbor_lists(vs, rot, outer);
}

std::string golden(const std::string &name) { return read_file(std::string(RDG_GOLDEN_DIR) + "/" + name); }

} // namespace

TEST(EnumerateFloorplans, SmallCounts)
{
    EXPECT_EQ(enumerate_floorplans(1, 0).size(), 1u);
    EXPECT_EQ(enumerate_floorplans(2, 0).size(), 2u);
    EXPECT_EQ(enumerate_floorplans(3, 0).size(), 6u);
    EXPECT_EQ(enumerate_floorplans(4, 0).size(), 24u);
    EXPECT_EQ(enumerate_floorplans(3, 2).size(), 4u);
    EXPECT_TRUE(enumerate_floorplans(4, 2).empty());
}

TEST(EnumerateFloorplans, PlansAreValidAndNormalized)
{
    for (int n = 1; n <= 5; ++n)
        for (const Floorplan &f : enumerate_floorplans(n, 0)) {
            EXPECT_TRUE(validate_floorplan(f).valid);
            EXPECT_EQ(normalize(f), f);
            ASSERT_EQ(f.rects.size(), static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i)
                EXPECT_EQ(f.rects[static_cast<std::size_t>(i)].id, i + 1);
        }
}

TEST(EnumerateFloorplans, OutOfBounds)
{
    EXPECT_THROW(enumerate_floorplans(0, 0), Error);
    EXPECT_THROW(enumerate_floorplans(max_oracle_size + 1, 0), Error);
}

TEST(Oracle, KnownInstances)
{
    const OracleResult d = oracle_decide(test::diamond());
    ASSERT_TRUE(d.is_rdg);
    ASSERT_TRUE(d.witness.has_value());
    EXPECT_EQ(adjacency(*d.witness), edge_pairs(test::diamond()));
    EXPECT_EQ(boundary_rooms(*d.witness), (std::vector<Vertex>{1, 2, 3, 4}));

    const OracleResult k = oracle_decide(test::k4());
    EXPECT_FALSE(k.is_rdg);
    EXPECT_FALSE(k.witness.has_value());
    EXPECT_EQ(k.plans_examined, 24u);

    EXPECT_TRUE(oracle_decide(test::single_edge()).is_rdg);
}

TEST(Oracle, DiamondHasAFullRoomBesideAColumnOfThree)
{
    const Floorplan column{2, 3, {{1, 0, 0, 1, 3}, {2, 1, 2, 1, 1}, {3, 1, 1, 1, 1}, {4, 1, 0, 1, 1}}};
    EXPECT_EQ(adjacency(column), edge_pairs(test::diamond()));
    bool found = false;
    for (const Floorplan &f : enumerate_floorplans(4, 0)) {
        std::vector<Vertex> ids{1, 2, 3, 4};
        do {
            Floorplan g = f;
            for (Rect &r : g.rects)
                r.id = ids[static_cast<std::size_t>(r.id - 1)];
            found = found || normalize(g) == column;
        } while (std::next_permutation(ids.begin(), ids.end()));
    }
    EXPECT_TRUE(found);
}

TEST(Oracle, RefusesLargeGraphs)
{
    std::mt19937 rng(1);
    const PlaneGraph g = dual_graph(test::random_plan(max_oracle_size + 1, rng));
    try {
        oracle_decide(g);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), Errc::BoundsTooLarge);
    }
}

TEST(EnumeratePtgs, SmallCases)
{
    const auto three = enumerate_ptgs(3);
    ASSERT_EQ(three.size(), 1u);
    EXPECT_EQ(three[0].edge_count(), 3u);

    std::set<std::string> four;
    for (const PlaneGraph &g : enumerate_ptgs(4))
        four.insert(fingerprint(g));
    EXPECT_TRUE(four.count(fingerprint(test::diamond())));
    EXPECT_TRUE(four.count(fingerprint(test::k4())));
    EXPECT_EQ(four.size(), 2u);
}

TEST(EnumeratePtgs, FrozenCounts)
{
    const std::vector<std::size_t> bridgeless{1, 1, 1, 2, 5, 19};
    const std::vector<std::size_t> with_bridges{1, 1, 2, 5, 14, 54};
    for (int n = 1; n <= 6; ++n) {
        EXPECT_EQ(enumerate_ptgs(n).size(), bridgeless[static_cast<std::size_t>(n - 1)]) << n;
        EXPECT_EQ(enumerate_ptgs(n, true).size(), with_bridges[static_cast<std::size_t>(n - 1)]) << n;
    }
}

TEST(EnumeratePtgs, ClassesAreDistinct)
{
    for (int n = 1; n <= 6; ++n) {
        std::set<std::string> seen;
        for (const PlaneGraph &g : enumerate_ptgs(n, true)) {
            EXPECT_TRUE(validate_ptg(g).passed);
            EXPECT_TRUE(seen.insert(fingerprint(g)).second);
        }
    }
}

TEST(Fingerprint, IgnoresLabelsAndReflection)
{
    const PlaneGraph d = test::diamond();
    const PlaneGraph m = mirrored(d, {{1, 20}, {2, 7}, {3, 11}, {4, 3}});
    EXPECT_EQ(fingerprint(m), fingerprint(d));
    EXPECT_NE(fingerprint(d), fingerprint(test::k4()));
    EXPECT_EQ(fingerprint(d).rfind("n4e5-", 0), 0u);
}

TEST(Census, AgreesAndMatchesGolden)
{
    const auto rows = census(6);
    for (const CensusRow &r : rows)
        EXPECT_TRUE(r.agree()) << r.fingerprint;
    EXPECT_EQ(census_table(rows), golden("census_6.tsv"));
}

TEST(Census, SeparableSixVertexGraphsAgreeWithOracle)
{
    const auto plans = enumerate_floorplans(6, 0);
    int checked = 0;
    for (const PlaneGraph &g : enumerate_ptgs(6, true)) {
        if (decompose_blocks(g).cut_vertices.empty())
            continue;
        ++checked;
        EXPECT_EQ(decide(g).is_rdg, oracle_decide(g, plans).is_rdg) << serialize_graph(g);
    }
    EXPECT_EQ(checked, 38);
}
