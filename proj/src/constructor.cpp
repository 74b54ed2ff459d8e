#include "rdg/constructor.hpp"

#include <algorithm>
#include <iterator>
#include <set>

namespace rdg {

namespace {

std::size_t position(const std::vector<Vertex> &list, Vertex v)
{
    return static_cast<std::size_t>(std::find(list.begin(), list.end(), v) - list.begin());
}

/// Removes room v by merging it into pole p; `run` receives the rooms that
/// become neighbours of p.
FourPole contract(const FourPole &x, Vertex v, Vertex p, std::vector<Vertex> &run)
{
    FourPole y = x;
    const auto &around = x.rotation.at(v);
    const std::size_t d = around.size();
    const std::size_t at = position(around, p);
    const Vertex before = around[(at + d - 1) % d];
    const Vertex after = around[(at + 1) % d];
    run.clear();
    for (std::size_t k = 2; k + 1 < d; ++k)
        run.push_back(around[(at + k) % d]);

    auto &rp = y.rotation.at(p);
    const std::size_t vp = position(rp, v);
    rp.erase(rp.begin() + static_cast<long>(vp));
    rp.insert(rp.begin() + static_cast<long>(vp), run.begin(), run.end());

    for (Vertex u : {before, after}) {
        auto &ru = y.rotation.at(u);
        ru.erase(ru.begin() + static_cast<long>(position(ru, v)));
    }
    for (Vertex u : run) {
        auto &ru = y.rotation.at(u);
        ru[position(ru, v)] = p;
    }
    y.rotation.erase(v);
    return y;
}

/// Grows the plan by a strip of thickness one along `side` (0 top, 1 right,
/// 2 bottom, 3 left); room v takes the part of the strip covering `run`.
void add_slab(Floorplan &f, int side, Vertex v, const std::vector<Vertex> &run)
{
    if (run.empty())
        throw Error(Errc::InternalInductionFailure, "room " + std::to_string(v) + " has nothing behind it");
    auto in_run = [&](const Rect &r) { return std::find(run.begin(), run.end(), r.id) != run.end(); };
    const bool horizontal = side == 0 || side == 2;
    int lo = horizontal ? f.width : f.height, hi = 0;
    for (const Rect &r : f.rects)
        if (in_run(r)) {
            lo = std::min(lo, horizontal ? r.x : r.y);
            hi = std::max(hi, horizontal ? r.x + r.w : r.y + r.h);
        }
    for (Rect &r : f.rects) {
        switch (side) {
        case 0:
            if (r.y + r.h == f.height && !in_run(r))
                r.h += 1;
            break;
        case 1:
            if (r.x + r.w == f.width && !in_run(r))
                r.w += 1;
            break;
        case 2:
            if (r.y == 0 && !in_run(r))
                r.h += 1;
            else
                r.y += 1;
            break;
        default:
            if (r.x == 0 && !in_run(r))
                r.w += 1;
            else
                r.x += 1;
        }
    }
    switch (side) {
    case 0:
        f.rects.push_back({v, lo, f.height, hi - lo, 1});
        break;
    case 1:
        f.rects.push_back({v, f.width, lo, 1, hi - lo});
        break;
    case 2:
        f.rects.push_back({v, lo, 0, hi - lo, 1});
        break;
    default:
        f.rects.push_back({v, 0, lo, 1, hi - lo});
    }
    (horizontal ? f.height : f.width) += 1;
}

} // namespace

Floorplan construct_four_pole(const FourPole &x)
{
    const auto rooms = x.rooms();
    if (rooms.empty())
        throw Error(Errc::PreconditionViolated, "four-pole graph without rooms");
    if (rooms.size() == 1)
        return {1, 1, {{rooms.front(), 0, 0, 1, 1}}};

    for (int side = 0; side < 4; ++side) {
        const Vertex pole = x.poles[static_cast<std::size_t>(side)];
        for (Vertex v : x.rotation.at(pole)) {
            if (x.is_pole(v))
                continue;
            std::vector<Vertex> run;
            const FourPole y = contract(x, v, pole, run);
            if (!check_four_pole(y).valid)
                continue;
            Floorplan f = construct_four_pole(y);
            add_slab(f, side, v, run);
            return f;
        }
    }
    throw Error(Errc::InternalInductionFailure, "no boundary room can be contracted into its side");
}

Floorplan construct_rfp(const Eptg &e)
{
    for (const auto &x : completions(e))
        if (check_four_pole(x).valid)
            return normalize(construct_four_pole(x));
    throw Error(Errc::PreconditionViolated, "the extension admits no rectangular plan");
}

DualReport dual_exactness(const Floorplan &f, const Eptg &e)
{
    DualReport r;
    std::set<std::pair<Vertex, Vertex>> want;
    for (const Edge &ed : e.base.edges())
        want.insert({std::min(ed.u, ed.v), std::max(ed.u, ed.v)});
    const auto got_list = adjacency(f);
    const std::set<std::pair<Vertex, Vertex>> got(got_list.begin(), got_list.end());
    std::set_difference(want.begin(), want.end(), got.begin(), got.end(), std::back_inserter(r.missing));
    std::set_difference(got.begin(), got.end(), want.begin(), want.end(), std::back_inserter(r.extra));

    std::set<Vertex> exterior;
    for (Vertex u : e.extended.neighbors(e.v_inf))
        exterior.insert(u);
    const auto boundary = boundary_rooms(f);
    std::set_symmetric_difference(exterior.begin(), exterior.end(), boundary.begin(), boundary.end(),
                                  std::back_inserter(r.boundary_mismatch));
    const std::set<Vertex> corners(e.corners.begin(), e.corners.end());
    const auto owners = corner_rooms(f);
    std::set_symmetric_difference(corners.begin(), corners.end(), owners.begin(), owners.end(),
                                  std::back_inserter(r.corner_mismatch));

    std::set<Vertex> ids;
    for (const Rect &a : f.rects)
        ids.insert(a.id);
    r.rooms_match = ids == std::set<Vertex>(e.base.vertices().begin(), e.base.vertices().end()) &&
                    ids.size() == f.rects.size();
    r.passed = r.missing.empty() && r.extra.empty() && r.boundary_mismatch.empty() &&
               r.corner_mismatch.empty() && r.rooms_match;
    return r;
}

nlohmann::ordered_json dual_report_to_json(const DualReport &r)
{
    auto pairs = [](const std::vector<std::pair<Vertex, Vertex>> &ps) {
        nlohmann::ordered_json j = nlohmann::ordered_json::array();
        for (const auto &[a, b] : ps)
            j.push_back({a, b});
        return j;
    };
    nlohmann::ordered_json j;
    j["passed"] = r.passed;
    j["missing"] = pairs(r.missing);
    j["extra"] = pairs(r.extra);
    j["boundary_mismatch"] = r.boundary_mismatch;
    j["corner_mismatch"] = r.corner_mismatch;
    j["rooms_match"] = r.rooms_match;
    return j;
}

} // namespace rdg
