#include "rdg/structure.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <queue>
#include <set>

namespace rdg {

bool BlockDecomposition::is_cut_vertex(Vertex v) const
{
    return std::binary_search(cut_vertices.begin(), cut_vertices.end(), v);
}

BlockDecomposition decompose_blocks(const PlaneGraph &g)
{
    const std::size_t n = g.vertex_count();
    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<EdgeId> stack;
    std::set<Vertex> cuts;
    BlockDecomposition out;
    int timer = 0;

    std::function<void(Vertex, EdgeId)> dfs = [&](Vertex v, EdgeId via) {
        const std::size_t vi = g.index_of(v);
        disc[vi] = low[vi] = timer++;
        int children = 0;
        for (EdgeId e : g.rotation(v)) {
            if (e == via)
                continue;
            const Vertex w = g.other(e, v);
            const std::size_t wi = g.index_of(w);
            if (disc[wi] < 0) {
                stack.push_back(e);
                ++children;
                dfs(w, e);
                low[vi] = std::min(low[vi], low[wi]);
                if (low[wi] >= disc[vi]) {
                    if (via >= 0 || children > 1)
                        cuts.insert(v);
                    Block b;
                    std::set<Vertex> vs;
                    while (true) {
                        const EdgeId top = stack.back();
                        stack.pop_back();
                        b.edges.push_back(top);
                        vs.insert(g.edges()[top].u);
                        vs.insert(g.edges()[top].v);
                        if (top == e)
                            break;
                    }
                    std::sort(b.edges.begin(), b.edges.end());
                    b.vertices.assign(vs.begin(), vs.end());
                    out.blocks.push_back(std::move(b));
                }
            } else if (disc[wi] < disc[vi]) {
                stack.push_back(e);
                low[vi] = std::min(low[vi], disc[wi]);
            }
        }
    };
    dfs(g.vertices().front(), -1);
    std::sort(out.blocks.begin(), out.blocks.end(),
              [](const Block &a, const Block &b) { return a.vertices < b.vertices; });
    out.cut_vertices.assign(cuts.begin(), cuts.end());
    return out;
}

std::vector<int> Bng::degree() const
{
    std::vector<int> d(node_count, 0);
    for (const auto &l : links) {
        ++d[l.a];
        ++d[l.b];
    }
    return d;
}

Bng build_bng(const BlockDecomposition &d)
{
    Bng b;
    b.node_count = static_cast<int>(d.blocks.size());
    for (int i = 0; i < b.node_count; ++i)
        for (int j = i + 1; j < b.node_count; ++j) {
            const auto &x = d.blocks[i].vertices;
            const auto &y = d.blocks[j].vertices;
            std::vector<Vertex> common;
            std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(common));
            if (!common.empty())
                b.links.push_back({i, j, common.front()});
        }
    return b;
}

bool bng_is_path(const Bng &b)
{
    if (b.node_count <= 1)
        return true;
    if (static_cast<int>(b.links.size()) != b.node_count - 1)
        return false;
    for (int deg : b.degree())
        if (deg > 2 || deg == 0)
            return false;
    // n-1 links, no isolated node, max degree 2: connected iff acyclic
    return !bng_path_order(b).empty();
}

std::vector<int> bng_path_order(const Bng &b)
{
    if (b.node_count == 0)
        return {};
    if (b.node_count == 1)
        return {0};
    const auto deg = b.degree();
    int start = -1;
    for (int i = 0; i < b.node_count; ++i)
        if (deg[i] == 1) {
            start = i;
            break;
        }
    if (start < 0)
        return {};
    std::vector<int> order{start};
    std::vector<char> used(b.node_count, 0);
    used[start] = 1;
    while (true) {
        int next = -1;
        for (const auto &l : b.links) {
            const int cur = order.back();
            if (l.a == cur && !used[l.b])
                next = l.b;
            else if (l.b == cur && !used[l.a])
                next = l.a;
            if (next >= 0)
                break;
        }
        if (next < 0)
            break;
        used[next] = 1;
        order.push_back(next);
    }
    if (static_cast<int>(order.size()) != b.node_count)
        return {};
    return order;
}

PlaneGraph block_subgraph(const PlaneGraph &g, const Block &block)
{
    std::map<EdgeId, EdgeId> renumber;
    std::vector<Edge> edges;
    for (EdgeId e : block.edges) {
        renumber[e] = static_cast<EdgeId>(edges.size());
        edges.push_back(g.edges()[e]);
    }
    std::map<Vertex, std::vector<EdgeId>> rot;
    for (Vertex v : block.vertices) {
        auto &list = rot[v];
        for (EdgeId e : g.rotation(v)) {
            auto it = renumber.find(e);
            if (it != renumber.end())
                list.push_back(it->second);
        }
    }
    Dart outer = -1;
    for (Dart d : g.outer_face().darts) {
        auto it = renumber.find(PlaneGraph::edge_of(d));
        if (it != renumber.end()) {
            outer = PlaneGraph::dart_of(it->second, d % 2 == 1);
            break;
        }
    }
    if (outer < 0)
        outer = 0;
    return PlaneGraph(block.vertices, std::move(edges), std::move(rot), outer);
}

std::vector<Vertex> outer_cycle(const PlaneGraph &block)
{
    if (block.vertex_count() > 2 && !decompose_blocks(block).cut_vertices.empty())
        throw Error(Errc::NotBiconnected, "outer cycle requested for a separable graph");
    std::vector<Vertex> cyc = block.outer_face().boundary;
    auto it = std::min_element(cyc.begin(), cyc.end());
    std::rotate(cyc.begin(), it, cyc.end());
    return cyc;
}

std::vector<Shortcut> find_shortcuts(const PlaneGraph &block)
{
    const auto cyc = outer_cycle(block);
    if (cyc.size() < 3)
        return {};
    std::set<Vertex> on_cycle(cyc.begin(), cyc.end());
    std::set<EdgeId> cycle_edges;
    for (Dart d : block.outer_face().darts)
        cycle_edges.insert(PlaneGraph::edge_of(d));
    std::vector<Shortcut> out;
    for (EdgeId e = 0; e < static_cast<EdgeId>(block.edge_count()); ++e) {
        const Edge &ed = block.edges()[e];
        if (cycle_edges.count(e) || !on_cycle.count(ed.u) || !on_cycle.count(ed.v))
            continue;
        Shortcut s;
        s.a = std::min(ed.u, ed.v);
        s.b = std::max(ed.u, ed.v);
        s.edge = e;
        out.push_back(s);
    }
    std::sort(out.begin(), out.end(),
              [](const Shortcut &x, const Shortcut &y) { return std::tie(x.a, x.b) < std::tie(y.a, y.b); });
    return find_cips(block, std::move(out));
}

std::vector<Shortcut> find_cips(const PlaneGraph &block, std::vector<Shortcut> shortcuts)
{
    const auto cyc = outer_cycle(block);
    const std::size_t n = cyc.size();
    std::set<Vertex> endpoints;
    for (const auto &s : shortcuts) {
        endpoints.insert(s.a);
        endpoints.insert(s.b);
    }
    auto pos = [&](Vertex v) {
        return static_cast<std::size_t>(std::find(cyc.begin(), cyc.end(), v) - cyc.begin());
    };
    for (auto &s : shortcuts) {
        s.cips.clear();
        const std::size_t ia = pos(s.a), ib = pos(s.b);
        // arc a -> b in cycle order, then arc a -> b against cycle order
        for (int dir : {1, -1}) {
            std::vector<Vertex> arc{s.a};
            bool ok = true;
            std::size_t i = ia;
            while (true) {
                i = (i + n + static_cast<std::size_t>(dir == 1 ? 1 : n - 1)) % n;
                if (i == ib)
                    break;
                if (endpoints.count(cyc[i]))
                    ok = false;
                arc.push_back(cyc[i]);
            }
            arc.push_back(s.b);
            if (ok)
                s.cips.push_back(std::move(arc));
        }
        s.is_critical = !s.cips.empty();
    }
    return shortcuts;
}

std::size_t count_cips(const std::vector<Shortcut> &shortcuts)
{
    std::size_t c = 0;
    for (const auto &s : shortcuts)
        c += s.cips.size();
    return c;
}

namespace {

bool is_face_cycle(const PlaneGraph &g, const std::array<EdgeId, 3> &edges)
{
    std::set<EdgeId> want(edges.begin(), edges.end());
    for (const Face &f : g.faces()) {
        if (f.darts.size() != 3)
            continue;
        std::set<EdgeId> have;
        for (Dart d : f.darts)
            have.insert(PlaneGraph::edge_of(d));
        if (have == want)
            return true;
    }
    return false;
}

std::vector<EdgeId> edges_between(const PlaneGraph &g, Vertex a, Vertex b)
{
    std::vector<EdgeId> out;
    for (EdgeId e : g.rotation(a))
        if (g.other(e, a) == b)
            out.push_back(e);
    return out;
}

bool contains_all(const std::vector<Vertex> &sorted_set, const std::vector<Vertex> &items)
{
    return std::all_of(items.begin(), items.end(),
                       [&](Vertex v) { return std::binary_search(sorted_set.begin(), sorted_set.end(), v); });
}

} // namespace

void mark_critical(std::vector<SeparatingTriangle> &triangles)
{
    for (auto &t : triangles) {
        std::vector<Vertex> region = t.inside;
        region.insert(region.end(), t.vertices.begin(), t.vertices.end());
        std::sort(region.begin(), region.end());
        t.is_critical = true;
        for (const auto &o : triangles) {
            if (&o == &t || (o.vertices == t.vertices && o.inside == t.inside))
                continue;
            if (contains_all(region, o.inside) &&
                contains_all(region, std::vector<Vertex>(o.vertices.begin(), o.vertices.end())) &&
                o.inside.size() < t.inside.size()) {
                t.is_critical = false;
                break;
            }
        }
    }
}

std::vector<SeparatingTriangle> find_separating_triangles(const PlaneGraph &g)
{
    std::vector<SeparatingTriangle> out;
    std::set<std::pair<std::array<Vertex, 3>, std::vector<Vertex>>> seen;
    const auto &vs = g.vertices();
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j) {
            const auto ab = edges_between(g, vs[i], vs[j]);
            if (ab.empty())
                continue;
            for (std::size_t k = j + 1; k < vs.size(); ++k) {
                const auto bc = edges_between(g, vs[j], vs[k]);
                const auto ca = edges_between(g, vs[k], vs[i]);
                for (EdgeId e1 : ab)
                    for (EdgeId e2 : bc)
                        for (EdgeId e3 : ca) {
                            const std::array<EdgeId, 3> cyc{e1, e2, e3};
                            if (is_face_cycle(g, cyc))
                                continue;
                            auto sides = cycle_sides(g, cyc);
                            if (sides.inner_side.empty() || sides.outer_side.empty())
                                continue;
                            SeparatingTriangle t;
                            t.vertices = {vs[i], vs[j], vs[k]};
                            t.edges = cyc;
                            t.inside = std::move(sides.inner_side);
                            t.outside = std::move(sides.outer_side);
                            std::sort(t.inside.begin(), t.inside.end());
                            std::sort(t.outside.begin(), t.outside.end());
                            if (seen.insert({t.vertices, t.inside}).second)
                                out.push_back(std::move(t));
                        }
            }
        }
    mark_critical(out);
    return out;
}

namespace {

/// Unit vertex capacities except at the terminals; Edmonds-Karp on the split graph.
int vertex_disjoint_flow(const PlaneGraph &g, Vertex a, Vertex b, bool skip_direct)
{
    const std::size_t n = g.vertex_count();
    const int inf = std::numeric_limits<int>::max() / 4;
    const std::size_t nodes = 2 * n;
    std::vector<std::map<std::size_t, int>> cap(nodes);
    auto in = [&](Vertex v) { return 2 * g.index_of(v); };
    auto out = [&](Vertex v) { return 2 * g.index_of(v) + 1; };
    for (Vertex v : g.vertices())
        cap[in(v)][out(v)] = (v == a || v == b) ? inf : 1;
    for (const Edge &e : g.edges()) {
        if (skip_direct && ((e.u == a && e.v == b) || (e.u == b && e.v == a)))
            continue;
        cap[out(e.u)][in(e.v)] = inf;
        cap[out(e.v)][in(e.u)] = inf;
        cap[in(e.v)].try_emplace(out(e.u), 0);
        cap[in(e.u)].try_emplace(out(e.v), 0);
        cap[out(e.u)].try_emplace(in(e.u), 0);
        cap[out(e.v)].try_emplace(in(e.v), 0);
    }
    for (Vertex v : g.vertices())
        cap[out(v)].try_emplace(in(v), 0);
    const std::size_t s = out(a), t = in(b);
    int flow = 0;
    while (true) {
        std::vector<std::size_t> prev(nodes, nodes);
        std::queue<std::size_t> q;
        q.push(s);
        prev[s] = s;
        while (!q.empty() && prev[t] == nodes) {
            const std::size_t x = q.front();
            q.pop();
            for (const auto &[y, c] : cap[x])
                if (c > 0 && prev[y] == nodes) {
                    prev[y] = x;
                    q.push(y);
                }
        }
        if (prev[t] == nodes)
            break;
        int bottleneck = inf;
        for (std::size_t y = t; y != s; y = prev[y])
            bottleneck = std::min(bottleneck, cap[prev[y]][y]);
        for (std::size_t y = t; y != s; y = prev[y]) {
            cap[prev[y]][y] -= bottleneck;
            cap[y][prev[y]] += bottleneck;
        }
        flow += bottleneck;
        if (flow >= inf / 2)
            break;
    }
    return flow;
}

} // namespace

int count_disjoint_paths(const PlaneGraph &g, Vertex a, Vertex b)
{
    g.index_of(a);
    g.index_of(b);
    if (a == b)
        throw Error(Errc::SameVertex, "disjoint paths need two distinct vertices");
    if (g.adjacent(a, b))
        return 1 + vertex_disjoint_flow(g, a, b, true);
    return vertex_disjoint_flow(g, a, b, false);
}

int min_vertex_connectivity(const PlaneGraph &g)
{
    if (g.vertex_count() < 2)
        throw Error(Errc::PreconditionViolated, "connectivity needs at least two vertices");
    int best = std::numeric_limits<int>::max();
    const auto &vs = g.vertices();
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            best = std::min(best, count_disjoint_paths(g, vs[i], vs[j]));
    return best;
}

StructureReport analyze_structure(const PlaneGraph &g)
{
    StructureReport r;
    r.decomposition = decompose_blocks(g);
    r.bng = build_bng(r.decomposition);
    r.bng_is_path = bng_is_path(r.bng);
    for (std::size_t i = 0; i < r.decomposition.blocks.size(); ++i) {
        const auto bg = block_subgraph(g, r.decomposition.blocks[i]);
        BlockReport br;
        br.block = static_cast<int>(i);
        br.outer_cycle = outer_cycle(bg);
        br.shortcuts = find_shortcuts(bg);
        r.blocks.push_back(std::move(br));
    }
    r.separating_triangles = find_separating_triangles(g);
    return r;
}

nlohmann::ordered_json shortcut_to_json(const Shortcut &s)
{
    nlohmann::ordered_json j;
    j["edge"] = {s.a, s.b};
    j["critical"] = s.is_critical;
    j["cips"] = s.cips;
    return j;
}

nlohmann::ordered_json triangle_to_json(const SeparatingTriangle &t)
{
    nlohmann::ordered_json j;
    j["triangle"] = t.vertices;
    j["inside"] = t.inside;
    j["outside"] = t.outside;
    j["critical"] = t.is_critical;
    return j;
}

nlohmann::ordered_json structure_to_json(const StructureReport &r)
{
    nlohmann::ordered_json j;
    nlohmann::ordered_json blocks = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < r.decomposition.blocks.size(); ++i) {
        nlohmann::ordered_json b;
        b["vertices"] = r.decomposition.blocks[i].vertices;
        b["outer_cycle"] = r.blocks[i].outer_cycle;
        nlohmann::ordered_json sc = nlohmann::ordered_json::array();
        for (const auto &s : r.blocks[i].shortcuts)
            sc.push_back(shortcut_to_json(s));
        b["shortcuts"] = sc;
        blocks.push_back(b);
    }
    j["blocks"] = blocks;
    j["cut_vertices"] = r.decomposition.cut_vertices;
    nlohmann::ordered_json links = nlohmann::ordered_json::array();
    for (const auto &l : r.bng.links)
        links.push_back({l.a, l.b});
    j["bng_edges"] = links;
    j["bng_is_path"] = r.bng_is_path;
    nlohmann::ordered_json tris = nlohmann::ordered_json::array();
    for (const auto &t : r.separating_triangles)
        tris.push_back(triangle_to_json(t));
    j["separating_triangles"] = tris;
    return j;
}

} // namespace rdg
