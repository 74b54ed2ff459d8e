#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <string>

#include "rdg/cli.hpp"
#include "rdg/floorplan.hpp"
#include "rdg/plane_graph.hpp"

namespace rdg::test {

inline std::string corpus_path(const std::string &name)
{
    return std::string(RDG_CORPUS_DIR) + "/" + name + ".graph";
}

inline PlaneGraph corpus(const std::string &name)
{
    return load_graph(read_file(corpus_path(name)));
}

inline PlaneGraph graph(const std::vector<Vertex> &vertices, const std::map<Vertex, std::vector<Vertex>> &rotation,
                        const std::vector<Vertex> &outer)
{
    return PlaneGraph::from_neighbor_lists(vertices, rotation, outer);
}

/// Random plan grown by n - 1 one-unit slabs, each placed along a random side
/// over a random contiguous run of the rooms touching that side.
inline Floorplan random_plan(int n, std::mt19937 &rng)
{
    Floorplan f{1, 1, {{1, 0, 0, 1, 1}}};
    for (Vertex id = 2; id <= n; ++id) {
        const int side = std::uniform_int_distribution<int>(0, 3)(rng);
        const bool horizontal = side == 0 || side == 2;
        auto on_side = [&](const Rect &r) {
            switch (side) {
            case 0: return r.y + r.h == f.height;
            case 1: return r.x + r.w == f.width;
            case 2: return r.y == 0;
            default: return r.x == 0;
            }
        };
        std::vector<Rect> along;
        for (const Rect &r : f.rects)
            if (on_side(r))
                along.push_back(r);
        std::sort(along.begin(), along.end(),
                  [&](const Rect &a, const Rect &b) { return horizontal ? a.x < b.x : a.y < b.y; });
        std::uniform_int_distribution<std::size_t> pick(0, along.size() - 1);
        std::size_t i = pick(rng), j = pick(rng);
        if (i > j)
            std::swap(i, j);
        const int lo = horizontal ? along[i].x : along[i].y;
        const int hi = horizontal ? along[j].x + along[j].w : along[j].y + along[j].h;
        for (Rect &r : f.rects) {
            const int a = horizontal ? r.x : r.y;
            const bool covered = on_side(r) && a >= lo && a < hi;
            switch (side) {
            case 0: r.h += on_side(r) && !covered; break;
            case 1: r.w += on_side(r) && !covered; break;
            case 2: on_side(r) && !covered ? ++r.h : ++r.y; break;
            default: on_side(r) && !covered ? ++r.w : ++r.x;
            }
        }
        switch (side) {
        case 0: f.rects.push_back({id, lo, f.height, hi - lo, 1}); break;
        case 1: f.rects.push_back({id, f.width, lo, 1, hi - lo}); break;
        case 2: f.rects.push_back({id, lo, 0, hi - lo, 1}); break;
        default: f.rects.push_back({id, 0, lo, 1, hi - lo});
        }
        (horizontal ? f.height : f.width) += 1;
    }
    std::vector<Vertex> ids(static_cast<std::size_t>(n));
    std::iota(ids.begin(), ids.end(), 1);
    std::shuffle(ids.begin(), ids.end(), rng);
    for (Rect &r : f.rects)
        r.id = ids[static_cast<std::size_t>(r.id - 1)];
    return normalize(f);
}

} // namespace rdg::test

namespace rdg::test {

/// Equal as cyclic sequences.
inline bool same_cycle(const std::vector<Vertex> &a, const std::vector<Vertex> &b)
{
    if (a.size() != b.size())
        return false;
    if (a.empty())
        return true;
    const std::size_t n = a.size();
    for (std::size_t s = 0; s < n; ++s) {
        std::size_t i = 0;
        while (i < n && a[i] == b[(s + i) % n])
            ++i;
        if (i == n)
            return true;
    }
    return false;
}

/// Equal as cycles in either direction.
inline bool same_face(const std::vector<Vertex> &a, std::vector<Vertex> b)
{
    if (same_cycle(a, b))
        return true;
    std::reverse(b.begin(), b.end());
    return same_cycle(a, b);
}

inline PlaneGraph diamond()
{
    return graph({1, 2, 3, 4}, {{1, {2, 3, 4}}, {2, {3, 1}}, {3, {1, 2, 4}}, {4, {1, 3}}}, {1, 2, 3, 4});
}

inline PlaneGraph k4()
{
    return graph({1, 2, 3, 4}, {{1, {2, 4, 3}}, {2, {3, 4, 1}}, {3, {1, 4, 2}}, {4, {2, 3, 1}}}, {1, 2, 3});
}

inline PlaneGraph single_edge() { return graph({1, 2}, {{1, {2}}, {2, {1}}}, {1, 2}); }

} // namespace rdg::test

namespace rdg::test {

/// Square with a centre vertex 5 adjacent to all four.
inline PlaneGraph wheel4()
{
    return graph({1, 2, 3, 4, 5},
                 {{1, {2, 5, 4}}, {2, {1, 3, 5}}, {3, {4, 5, 2}}, {4, {1, 5, 3}}, {5, {1, 2, 3, 4}}},
                 {1, 2, 3, 4});
}

} // namespace rdg::test
