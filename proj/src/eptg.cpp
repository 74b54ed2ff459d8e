#include "rdg/eptg.hpp"

#include <algorithm>
#include <set>

namespace rdg {

namespace {

struct Occurrence {
    Vertex w;
    Dart incoming;
    std::vector<EdgeId> added; ///< one enclosure edge, or [a, b] at a corner
};

Eptg extend_single_vertex(const PlaneGraph &g, const std::vector<Vertex> &corners)
{
    Eptg e;
    e.base = g;
    e.corners = corners;
    const Vertex v = g.vertices().front();
    e.v_inf = v + 1;
    std::vector<Edge> edges{{v, e.v_inf}};
    std::map<Vertex, std::vector<EdgeId>> rot;
    if (corners.empty()) {
        rot[v] = {0};
        rot[e.v_inf] = {0};
    } else {
        edges.push_back({v, e.v_inf});
        rot[v] = {0, 1};
        rot[e.v_inf] = {1, 0};
        e.construction_edges = {1};
    }
    e.enclosure_edges = {0};
    e.extended = PlaneGraph({v, e.v_inf}, std::move(edges), std::move(rot), PlaneGraph::dart_of(0, false));
    return e;
}

} // namespace

Eptg extend(const PlaneGraph &g, const std::vector<Vertex> &corners)
{
    if (corners.size() > 4)
        throw Error(Errc::TooManyCorners, std::to_string(corners.size()) + " corners given, at most 4 allowed");
    std::set<Vertex> distinct;
    for (Vertex c : corners) {
        if (!g.has_vertex(c))
            throw Error(Errc::UnknownVertex, "corner " + std::to_string(c) + " is not a vertex");
        if (!g.on_outer_face(c))
            throw Error(Errc::CornerNotExterior, "corner " + std::to_string(c) + " is not on the outer face");
        if (!distinct.insert(c).second)
            throw Error(Errc::PreconditionViolated, "corner " + std::to_string(c) + " given twice");
    }
    if (g.edge_count() == 0)
        return extend_single_vertex(g, corners);

    Eptg e;
    e.base = g;
    e.corners = corners;
    e.v_inf = g.vertices().back() + 1;

    const auto &darts = g.outer_face().darts;
    const std::size_t len = darts.size();
    std::vector<Edge> edges = g.edges();
    std::vector<Occurrence> occ;
    std::map<Dart, std::size_t> by_incoming;
    std::set<Vertex> cornered;
    for (std::size_t j = 0; j < len; ++j) {
        Occurrence o;
        o.w = g.tail(darts[j]);
        o.incoming = darts[(j + len - 1) % len];
        auto add = [&] {
            edges.push_back({o.w, e.v_inf});
            return static_cast<EdgeId>(edges.size() - 1);
        };
        const EdgeId first = add();
        o.added.push_back(first);
        e.enclosure_edges.push_back(first);
        if (distinct.count(o.w) && cornered.insert(o.w).second) {
            const EdgeId second = add();
            o.added.push_back(second);
            e.construction_edges.push_back(second);
        }
        by_incoming[o.incoming] = occ.size();
        occ.push_back(std::move(o));
    }

    std::map<Vertex, std::vector<EdgeId>> rot;
    for (Vertex w : g.vertices()) {
        auto &list = rot[w];
        for (EdgeId ed : g.rotation(w)) {
            list.push_back(ed);
            const Dart into = g.dart_from(w, ed) ^ 1;
            auto it = by_incoming.find(into);
            if (it != by_incoming.end() && occ[it->second].w == w)
                list.insert(list.end(), occ[it->second].added.begin(), occ[it->second].added.end());
        }
    }
    auto &inf = rot[e.v_inf];
    for (std::size_t j = len; j-- > 0;)
        inf.insert(inf.end(), occ[j].added.rbegin(), occ[j].added.rend());

    std::vector<Vertex> vs = g.vertices();
    vs.push_back(e.v_inf);
    e.extended = PlaneGraph(std::move(vs), std::move(edges), std::move(rot), darts.front());
    return e;
}

namespace {

std::vector<Vertex> lexicographic_fill(std::vector<Vertex> chosen, const std::vector<Vertex> &pool,
                                       const std::set<Vertex> &excluded, std::size_t limit)
{
    for (Vertex v : pool) {
        if (chosen.size() >= limit)
            break;
        if (excluded.count(v) || std::find(chosen.begin(), chosen.end(), v) != chosen.end())
            continue;
        chosen.push_back(v);
    }
    return chosen;
}

std::vector<Vertex> exterior_vertices(const PlaneGraph &g)
{
    std::set<Vertex> s(g.outer_face().boundary.begin(), g.outer_face().boundary.end());
    return {s.begin(), s.end()};
}

bool arc_has_inner_cut(const std::vector<Vertex> &arc, const BlockDecomposition &d)
{
    for (std::size_t i = 1; i + 1 < arc.size(); ++i)
        if (d.is_cut_vertex(arc[i]))
            return true;
    return false;
}

} // namespace

std::vector<Vertex> choose_corners(const PlaneGraph &g)
{
    if (g.vertex_count() == 1)
        return {g.vertices().front()};
    const auto dec = decompose_blocks(g);
    if (dec.cut_vertices.empty()) {
        if (g.vertex_count() == 2)
            return g.vertices();
        const auto shortcuts = find_shortcuts(g);
        std::vector<Vertex> chosen;
        std::set<Vertex> interior;
        std::size_t arcs = 0;
        for (const auto &s : shortcuts)
            for (const auto &arc : s.cips) {
                ++arcs;
                chosen.push_back(*std::min_element(arc.begin() + 1, arc.end() - 1));
                interior.insert(arc.begin() + 1, arc.end() - 1);
            }
        if (arcs > 4)
            throw Error(Errc::TooManyCriticalShortcuts,
                        std::to_string(arcs) + " corner implying paths, at most 4 can hold a corner");
        const auto ext = exterior_vertices(g);
        return lexicographic_fill(std::move(chosen), ext, interior, std::min<std::size_t>(4, ext.size()));
    }

    const auto bng = build_bng(dec);
    const auto deg = bng.degree();
    std::vector<Vertex> chosen;
    for (std::size_t i = 0; i < dec.blocks.size() && chosen.size() < 4; ++i) {
        if (deg[i] > 1)
            continue;
        const Block &b = dec.blocks[i];
        std::vector<Vertex> pick;
        std::set<Vertex> excluded(dec.cut_vertices.begin(), dec.cut_vertices.end());
        if (b.is_bridge()) {
            pick = lexicographic_fill({}, b.vertices, excluded, 1);
        } else {
            const auto bg = block_subgraph(g, b);
            for (const auto &s : find_shortcuts(bg))
                for (const auto &arc : s.cips) {
                    if (arc_has_inner_cut(arc, dec))
                        continue;
                    excluded.insert(arc.begin() + 1, arc.end() - 1);
                    if (pick.size() < 2)
                        pick.push_back(*std::min_element(arc.begin() + 1, arc.end() - 1));
                }
            pick = lexicographic_fill(std::move(pick), exterior_vertices(bg), excluded, 2);
        }
        for (Vertex v : pick)
            if (chosen.size() < 4)
                chosen.push_back(v);
    }
    return chosen;
}

EptgAudit audit(const Eptg &e)
{
    EptgAudit a;
    const PlaneGraph &x = e.extended;
    const long euler = static_cast<long>(x.vertex_count()) - static_cast<long>(x.edge_count()) +
                       static_cast<long>(x.faces().size());
    a.euler = euler == 2;
    std::map<Vertex, int> digons_at;
    for (const Face &f : x.faces()) {
        const auto &b = f.boundary;
        if (b.size() == 3 && b[0] != b[1] && b[1] != b[2] && b[0] != b[2]) {
            ++a.triangles;
        } else if (b.size() == 2 && (b[0] == e.v_inf || b[1] == e.v_inf)) {
            ++a.digons;
            ++digons_at[b[0] == e.v_inf ? b[1] : b[0]];
        } else {
            a.offending.push_back(f);
        }
    }
    const bool single = e.base.vertex_count() == 1;
    for (Vertex c : e.corners) {
        const int want = single ? 2 : 1;
        if (digons_at[c] != want)
            a.passed = false;
    }
    if (a.digons != (single ? 2 * e.corners.size() : e.corners.size()))
        a.passed = false;
    a.passed = a.passed && a.euler && a.offending.empty();
    return a;
}

std::vector<SeparatingTriangle> separating_triangles_through_vinf(const Eptg &e)
{
    std::vector<SeparatingTriangle> out;
    for (auto &t : find_separating_triangles(e.extended))
        if (std::find(t.vertices.begin(), t.vertices.end(), e.v_inf) != t.vertices.end())
            out.push_back(std::move(t));
    mark_critical(out);
    return out;
}

std::vector<CriticalSide> critical_sides(const Eptg &, const std::vector<SeparatingTriangle> &through_vinf)
{
    std::vector<CriticalSide> out;
    std::set<std::pair<std::array<Vertex, 3>, std::vector<Vertex>>> seen;
    for (const auto &t : through_vinf) {
        for (const auto *side : {&t.inside, &t.outside}) {
            std::vector<Vertex> region = *side;
            region.insert(region.end(), t.vertices.begin(), t.vertices.end());
            std::sort(region.begin(), region.end());
            bool holds_other = false;
            for (const auto &o : through_vinf) {
                if (o.vertices == t.vertices)
                    continue;
                if (std::all_of(o.vertices.begin(), o.vertices.end(), [&](Vertex v) {
                        return std::binary_search(region.begin(), region.end(), v);
                    })) {
                    holds_other = true;
                    break;
                }
            }
            if (!holds_other && seen.insert({t.vertices, *side}).second)
                out.push_back({t.vertices, *side});
        }
    }
    return out;
}

std::vector<Vertex> FourPole::rooms() const
{
    std::vector<Vertex> out;
    for (const auto &[v, _] : rotation)
        if (!is_pole(v))
            out.push_back(v);
    return out;
}

bool FourPole::is_pole(Vertex v) const
{
    return std::find(poles.begin(), poles.end(), v) != poles.end();
}

FourPoleCheck check_four_pole(const FourPole &x)
{
    FourPoleCheck r;
    auto fail = [&](std::string why, std::vector<Vertex> w) {
        r.valid = false;
        r.reason = std::move(why);
        r.witness = std::move(w);
        return r;
    };
    std::vector<Vertex> vs;
    for (const auto &[v, _] : x.rotation)
        vs.push_back(v);
    PlaneGraph g;
    try {
        g = PlaneGraph::from_neighbor_lists(vs, x.rotation, {x.poles.begin(), x.poles.end()}, true);
    } catch (const Error &err) {
        return fail(err.what(), {});
    }
    for (const Edge &ed : g.edges())
        if (g.multiplicity(ed.u, ed.v) > 1)
            return fail("doubled adjacency", {std::min(ed.u, ed.v), std::max(ed.u, ed.v)});
    for (int k = 0; k < 2; ++k)
        if (g.adjacent(x.poles[k], x.poles[k + 2]))
            return fail("opposite sides adjacent", {x.poles[k], x.poles[k + 2]});
    std::set<std::array<Vertex, 3>> facial;
    for (const Face &f : g.faces()) {
        if (f.is_outer)
            continue;
        if (f.boundary.size() != 3)
            return fail("non-triangular face", f.boundary);
        std::array<Vertex, 3> t{f.boundary[0], f.boundary[1], f.boundary[2]};
        std::sort(t.begin(), t.end());
        facial.insert(t);
    }
    for (const Edge &ed : g.edges()) {
        const Vertex u = std::min(ed.u, ed.v), v = std::max(ed.u, ed.v);
        for (Vertex w : g.neighbors(u))
            if (w > v && g.adjacent(v, w) && !facial.count({u, v, w}))
                return fail("separating triangle", {u, v, w});
    }
    return r;
}

namespace {

FourPole single_room(Vertex v, Vertex v_inf)
{
    FourPole x;
    for (int k = 0; k < 4; ++k)
        x.poles[k] = v_inf + 1 + k;
    x.rotation[v] = {x.poles[3], x.poles[2], x.poles[1], x.poles[0]};
    for (int k = 0; k < 4; ++k)
        x.rotation[x.poles[k]] = {v, x.poles[(k + 1) % 4], x.poles[(k + 3) % 4]};
    return x;
}

} // namespace

std::vector<FourPole> completions(const Eptg &e)
{
    const PlaneGraph &g = e.extended;
    if (e.corners.empty())
        return {};
    if (e.base.vertex_count() == 1)
        return {single_room(e.base.vertices().front(), e.v_inf)};

    const auto rot = g.rotation(e.v_inf);
    const std::size_t m = rot.size();
    // corner c owns the consecutive pair [b, a] in the rotation of v_inf
    std::map<EdgeId, Vertex> b_edge_of;
    for (EdgeId b : e.construction_edges)
        b_edge_of[b] = g.other(b, e.v_inf);
    std::vector<std::size_t> split_after;
    for (std::size_t i = 0; i < m; ++i)
        if (b_edge_of.count(rot[i]))
            split_after.push_back(i);
    const std::size_t k = split_after.size();
    if (k > 4)
        return {};

    std::vector<std::vector<EdgeId>> runs(k);
    std::vector<Vertex> corner_after(k);
    for (std::size_t r = 0; r < k; ++r) {
        std::size_t i = (split_after[r] + 1) % m;
        while (true) {
            runs[r].push_back(rot[i]);
            if (i == split_after[(r + 1) % k])
                break;
            i = (i + 1) % m;
        }
        corner_after[r] = b_edge_of.at(runs[r].back());
    }

    std::vector<FourPole> out;
    const std::size_t extra = 4 - k;
    std::vector<char> mask(k, 0);
    std::fill(mask.begin(), mask.begin() + static_cast<long>(std::min(extra, k)), 1);
    if (extra > k)
        return {};
    do {
        FourPole x;
        for (int p = 0; p < 4; ++p)
            x.poles[p] = e.v_inf + 1 + p;
        std::map<EdgeId, Vertex> pole_of_edge;
        std::map<Vertex, Vertex> mid_pole_of;
        std::vector<std::vector<Vertex>> sides;
        for (std::size_t r = 0; r < k; ++r) {
            const Vertex pole = x.poles[sides.size()];
            std::vector<Vertex> side;
            for (EdgeId ed : runs[r]) {
                pole_of_edge[ed] = pole;
                side.push_back(g.other(ed, e.v_inf));
            }
            sides.push_back(std::move(side));
            if (mask[r]) {
                mid_pole_of[corner_after[r]] = x.poles[sides.size()];
                sides.push_back({corner_after[r]});
            }
        }
        for (std::size_t p = 0; p < 4; ++p) {
            auto &list = x.rotation[x.poles[p]];
            list = sides[p];
            list.push_back(x.poles[(p + 1) % 4]);
            list.push_back(x.poles[(p + 3) % 4]);
        }
        for (Vertex v : e.base.vertices()) {
            auto &list = x.rotation[v];
            const auto around = g.rotation(v);
            auto mid = mid_pole_of.find(v);
            for (std::size_t i = 0; i < around.size(); ++i) {
                const EdgeId ed = around[i];
                const Vertex w = g.other(ed, v);
                if (w != e.v_inf) {
                    list.push_back(w);
                    continue;
                }
                list.push_back(pole_of_edge.at(ed));
                if (mid != mid_pole_of.end() && b_edge_of.count(around[(i + 1) % around.size()]))
                    list.push_back(mid->second);
            }
        }
        out.push_back(std::move(x));
    } while (std::prev_permutation(mask.begin(), mask.end()));
    return out;
}

nlohmann::ordered_json eptg_to_json(const Eptg &e)
{
    auto j = graph_to_json(e.extended);
    j["v_inf"] = e.v_inf;
    j["corners"] = e.corners;
    return j;
}

} // namespace rdg
