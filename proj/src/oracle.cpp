#include "rdg/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "rdg/decision.hpp"

namespace rdg {

namespace {

void check_bounds(int n, int k)
{
    if (n < 1 || n > max_oracle_size || k < 1 || k > max_oracle_size)
        throw Error(Errc::BoundsTooLarge, "oracle supports 1 to " + std::to_string(max_oracle_size) +
                                              " rooms and grids up to the same size");
}

struct GridSearch {
    int n, cols, rows;
    std::vector<int> owner; ///< row-major, row 0 on top
    struct Placed {
        int c, r, w, h;
    };
    std::vector<Placed> placed;
    std::vector<Floorplan> *out;

    int &cell(int c, int r) { return owner[static_cast<std::size_t>(r * cols + c)]; }

    bool complete_ok()
    {
        for (int i = 1; i < cols; ++i)
            if (std::none_of(placed.begin(), placed.end(), [&](const Placed &p) { return p.c == i; }))
                return false;
        for (int j = 1; j < rows; ++j)
            if (std::none_of(placed.begin(), placed.end(), [&](const Placed &p) { return p.r == j; }))
                return false;
        for (int i = 1; i < cols; ++i)
            for (int j = 1; j < rows; ++j) {
                const std::set<int> around{cell(i - 1, j - 1), cell(i, j - 1), cell(i - 1, j), cell(i, j)};
                if (around.size() == 4)
                    return false;
            }
        return true;
    }

    void run()
    {
        std::size_t first = 0;
        while (first < owner.size() && owner[first] >= 0)
            ++first;
        if (first == owner.size()) {
            if (static_cast<int>(placed.size()) == n && complete_ok()) {
                Floorplan f{cols, rows, {}};
                for (std::size_t i = 0; i < placed.size(); ++i) {
                    const Placed &p = placed[i];
                    f.rects.push_back({static_cast<Vertex>(i + 1), p.c, rows - p.r - p.h, p.w, p.h});
                }
                out->push_back(std::move(f));
            }
            return;
        }
        if (static_cast<int>(placed.size()) == n)
            return;
        const int c = static_cast<int>(first) % cols, r = static_cast<int>(first) / cols;
        const int id = static_cast<int>(placed.size());
        for (int w = 1; c + w <= cols && cell(c + w - 1, r) < 0; ++w) {
            for (int h = 1; r + h <= rows; ++h) {
                bool free = true;
                for (int x = c; x < c + w && free; ++x)
                    free = cell(x, r + h - 1) < 0;
                if (!free)
                    break;
                for (int y = r; y < r + h; ++y)
                    for (int x = c; x < c + w; ++x)
                        cell(x, y) = id;
                placed.push_back({c, r, w, h});
                run();
                placed.pop_back();
                for (int y = r; y < r + h; ++y)
                    for (int x = c; x < c + w; ++x)
                        cell(x, y) = -1;
            }
        }
    }
};

using Rotation = std::map<Vertex, std::vector<Vertex>>;
using DartPair = std::pair<Vertex, Vertex>;

DartPair next_dart(const Rotation &rot, const DartPair &d)
{
    const auto &around = rot.at(d.second);
    const auto it = std::find(around.begin(), around.end(), d.first);
    const std::size_t i = static_cast<std::size_t>(it - around.begin());
    return {d.second, around[(i + 1) % around.size()]};
}

std::vector<std::vector<DartPair>> trace_faces(const Rotation &rot)
{
    std::set<DartPair> seen;
    std::vector<std::vector<DartPair>> faces;
    for (const auto &[u, around] : rot)
        for (Vertex w : around) {
            DartPair d{u, w};
            if (seen.count(d))
                continue;
            std::vector<DartPair> face;
            while (seen.insert(d).second) {
                face.push_back(d);
                d = next_dart(rot, d);
            }
            faces.push_back(std::move(face));
        }
    return faces;
}

struct Canonical {
    std::vector<int> code;
    bool mirrored = false;
    DartPair start;
    std::map<Vertex, int> label;
};

void bfs_code(const Rotation &rot, DartPair start, std::vector<int> &code, std::map<Vertex, int> &label)
{
    code.clear();
    label.clear();
    std::vector<Vertex> order{start.first};
    std::map<Vertex, Vertex> first_from;
    label[start.first] = 0;
    first_from[start.first] = start.second;
    for (std::size_t q = 0; q < order.size(); ++q) {
        const Vertex x = order[q];
        const auto &around = rot.at(x);
        const auto at = static_cast<std::size_t>(std::find(around.begin(), around.end(), first_from[x]) -
                                                 around.begin());
        for (std::size_t i = 0; i < around.size(); ++i) {
            const Vertex y = around[(at + i) % around.size()];
            auto it = label.find(y);
            if (it == label.end()) {
                it = label.emplace(y, static_cast<int>(order.size())).first;
                order.push_back(y);
                first_from[y] = x;
            }
            code.push_back(it->second);
        }
        code.push_back(-1);
    }
}

Rotation mirror(const Rotation &rot)
{
    Rotation m = rot;
    for (auto &[_, around] : m)
        std::reverse(around.begin(), around.end());
    return m;
}

Canonical canonical_form(const Rotation &rot, const std::vector<DartPair> &outer)
{
    Canonical best;
    bool have = false;
    const Rotation mirrored = mirror(rot);
    std::vector<int> code;
    std::map<Vertex, int> label;
    for (bool m : {false, true}) {
        const Rotation &r = m ? mirrored : rot;
        for (const DartPair &d : outer) {
            const DartPair start = m ? DartPair{d.second, d.first} : d;
            bfs_code(r, start, code, label);
            if (!have || code < best.code) {
                best.code = code;
                best.mirrored = m;
                best.start = start;
                best.label = label;
                have = true;
            }
        }
    }
    return best;
}

std::string hash_code(const std::vector<int> &code)
{
    std::uint64_t h = 1469598103934665603ull;
    for (int c : code) {
        h ^= static_cast<std::uint64_t>(c + 2);
        h *= 1099511628211ull;
    }
    std::ostringstream s;
    s << std::hex;
    s.width(16);
    s.fill('0');
    s << h;
    return s.str();
}

Rotation rotation_of(const PlaneGraph &g)
{
    Rotation rot;
    for (Vertex v : g.vertices())
        rot[v] = g.neighbors(v);
    return rot;
}

/// Builds the relabeled graph 1..n for the canonical choice.
PlaneGraph relabeled(const Rotation &rot, const Canonical &c)
{
    const Rotation r = c.mirrored ? mirror(rot) : rot;
    std::map<Vertex, std::vector<Vertex>> out;
    std::vector<Vertex> vs;
    for (const auto &[v, around] : r) {
        auto &list = out[c.label.at(v) + 1];
        for (Vertex w : around)
            list.push_back(c.label.at(w) + 1);
        vs.push_back(c.label.at(v) + 1);
    }
    std::sort(vs.begin(), vs.end());
    std::vector<Vertex> outer;
    if (r.at(c.start.first).empty()) {
        outer.push_back(c.label.at(c.start.first) + 1);
    } else {
        DartPair d = c.start;
        do {
            outer.push_back(c.label.at(d.first) + 1);
            d = next_dart(r, d);
        } while (d != c.start);
    }
    return PlaneGraph::from_neighbor_lists(vs, out, outer);
}

using Adjacency = std::vector<std::uint32_t>; ///< bitmask rows

bool connected(const Adjacency &adj, int n)
{
    std::uint32_t seen = 1, frontier = 1;
    while (frontier) {
        std::uint32_t next = 0;
        for (int v = 0; v < n; ++v)
            if (frontier >> v & 1u)
                next |= adj[static_cast<std::size_t>(v)];
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == (1u << n) - 1;
}

bool has_bridge(const Adjacency &adj, int n)
{
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (!(adj[static_cast<std::size_t>(u)] >> v & 1u))
                continue;
            Adjacency cut = adj;
            cut[static_cast<std::size_t>(u)] &= ~(1u << v);
            cut[static_cast<std::size_t>(v)] &= ~(1u << u);
            if (!connected(cut, n))
                return true;
        }
    return false;
}

bool isomorphic(const Adjacency &a, const Adjacency &b, int n)
{
    std::vector<int> map(static_cast<std::size_t>(n), -1);
    std::uint32_t used = 0;
    std::function<bool(int)> go = [&](int v) {
        if (v == n)
            return true;
        for (int w = 0; w < n; ++w) {
            if (used >> w & 1u)
                continue;
            if (__builtin_popcount(a[static_cast<std::size_t>(v)]) != __builtin_popcount(b[static_cast<std::size_t>(w)]))
                continue;
            bool ok = true;
            for (int u = 0; u < v && ok; ++u)
                ok = ((a[static_cast<std::size_t>(v)] >> u) & 1u) ==
                     ((b[static_cast<std::size_t>(w)] >> map[static_cast<std::size_t>(u)]) & 1u);
            if (!ok)
                continue;
            map[static_cast<std::size_t>(v)] = w;
            used |= 1u << w;
            if (go(v + 1))
                return true;
            used &= ~(1u << w);
        }
        return false;
    };
    return go(0);
}

std::vector<int> invariant(const Adjacency &adj, int n)
{
    std::vector<std::vector<int>> per(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        auto &p = per[static_cast<std::size_t>(v)];
        p.push_back(__builtin_popcount(adj[static_cast<std::size_t>(v)]));
        std::vector<int> nd;
        for (int w = 0; w < n; ++w)
            if (adj[static_cast<std::size_t>(v)] >> w & 1u)
                nd.push_back(__builtin_popcount(adj[static_cast<std::size_t>(w)]));
        std::sort(nd.begin(), nd.end());
        p.insert(p.end(), nd.begin(), nd.end());
    }
    std::sort(per.begin(), per.end());
    std::vector<int> flat;
    for (const auto &p : per) {
        flat.insert(flat.end(), p.begin(), p.end());
        flat.push_back(-1);
    }
    return flat;
}

std::vector<Adjacency> abstract_graphs(int n, bool allow_bridges)
{
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            pairs.emplace_back(u, v);
    const int max_edges = n >= 3 ? 3 * n - 6 : static_cast<int>(pairs.size());
    std::map<std::vector<int>, std::vector<Adjacency>> buckets;
    std::vector<Adjacency> out;
    const std::uint64_t total = 1ull << pairs.size();
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        if (__builtin_popcountll(mask) > max_edges || __builtin_popcountll(mask) < n - 1)
            continue;
        Adjacency adj(static_cast<std::size_t>(n), 0);
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if (mask >> i & 1ull) {
                adj[static_cast<std::size_t>(pairs[i].first)] |= 1u << pairs[i].second;
                adj[static_cast<std::size_t>(pairs[i].second)] |= 1u << pairs[i].first;
            }
        if (!connected(adj, n))
            continue;
        if (n >= 3 && !allow_bridges && has_bridge(adj, n))
            continue;
        auto &bucket = buckets[invariant(adj, n)];
        if (std::any_of(bucket.begin(), bucket.end(), [&](const Adjacency &b) { return isomorphic(adj, b, n); }))
            continue;
        bucket.push_back(adj);
        out.push_back(adj);
    }
    return out;
}

} // namespace

std::vector<Floorplan> enumerate_floorplans(int n, int k)
{
    if (k == 0)
        k = n;
    check_bounds(n, k);
    std::vector<Floorplan> out;
    for (int cols = 1; cols <= k; ++cols)
        for (int rows = 1; rows <= k; ++rows) {
            if (cols + rows > n + 1)
                continue;
            GridSearch s{n, cols, rows, std::vector<int>(static_cast<std::size_t>(cols * rows), -1), {}, &out};
            s.run();
        }
    return out;
}

OracleResult oracle_decide(const PlaneGraph &g, int k)
{
    const int n = static_cast<int>(g.vertex_count());
    check_bounds(n, k == 0 ? n : k);
    return oracle_decide(g, enumerate_floorplans(n, k == 0 ? n : k));
}

OracleResult oracle_decide(const PlaneGraph &g, const std::vector<Floorplan> &plans)
{
    const int n = static_cast<int>(g.vertex_count());
    if (n > max_oracle_size)
        throw Error(Errc::BoundsTooLarge, "oracle supports at most " + std::to_string(max_oracle_size) + " vertices");
    const auto &vs = g.vertices();
    Adjacency gadj(static_cast<std::size_t>(n), 0);
    std::uint32_t gboundary = 0;
    for (int i = 0; i < n; ++i) {
        for (Vertex w : g.neighbors(vs[static_cast<std::size_t>(i)]))
            gadj[static_cast<std::size_t>(i)] |= 1u << g.index_of(w);
        if (g.on_outer_face(vs[static_cast<std::size_t>(i)]))
            gboundary |= 1u << i;
    }
    OracleResult result;
    for (const Floorplan &f : plans) {
        if (static_cast<int>(f.rects.size()) != n)
            continue;
        ++result.plans_examined;
        std::map<Vertex, int> idx;
        for (int i = 0; i < n; ++i)
            idx[f.rects[static_cast<std::size_t>(i)].id] = i;
        Adjacency padj(static_cast<std::size_t>(n), 0);
        for (const auto &[a, b] : adjacency(f)) {
            padj[static_cast<std::size_t>(idx[a])] |= 1u << idx[b];
            padj[static_cast<std::size_t>(idx[b])] |= 1u << idx[a];
        }
        std::uint32_t pboundary = 0;
        for (Vertex id : boundary_rooms(f))
            pboundary |= 1u << idx[id];

        std::vector<int> map(static_cast<std::size_t>(n), -1);
        std::uint32_t used = 0;
        std::function<bool(int)> go = [&](int v) {
            if (v == n)
                return true;
            const auto vi = static_cast<std::size_t>(v);
            for (int w = 0; w < n; ++w) {
                const auto wi = static_cast<std::size_t>(w);
                if ((used >> w & 1u) || __builtin_popcount(gadj[vi]) != __builtin_popcount(padj[wi]) ||
                    ((gboundary >> v) & 1u) != ((pboundary >> w) & 1u))
                    continue;
                bool ok = true;
                for (int u = 0; u < v && ok; ++u)
                    ok = ((gadj[vi] >> u) & 1u) == ((padj[wi] >> map[static_cast<std::size_t>(u)]) & 1u);
                if (!ok)
                    continue;
                map[vi] = w;
                used |= 1u << w;
                if (go(v + 1))
                    return true;
                used &= ~(1u << w);
            }
            return false;
        };
        if (go(0)) {
            Floorplan w = f;
            for (int i = 0; i < n; ++i)
                w.rects[static_cast<std::size_t>(map[static_cast<std::size_t>(i)])].id = vs[static_cast<std::size_t>(i)];
            std::sort(w.rects.begin(), w.rects.end(), [](const Rect &a, const Rect &b) { return a.id < b.id; });
            result.is_rdg = true;
            result.witness = std::move(w);
            return result;
        }
    }
    return result;
}

std::vector<PlaneGraph> enumerate_ptgs(int n, bool allow_bridges)
{
    check_bounds(n, n);
    if (n == 1)
        return {PlaneGraph::from_neighbor_lists({1}, {{1, {}}}, {1})};
    if (n == 2)
        return {PlaneGraph::from_neighbor_lists({1, 2}, {{1, {2}}, {2, {1}}}, {1, 2})};

    std::map<std::vector<int>, PlaneGraph> found;
    for (const Adjacency &adj : abstract_graphs(n, allow_bridges)) {
        std::vector<std::vector<Vertex>> nbrs(static_cast<std::size_t>(n));
        int edges = 0;
        for (int v = 0; v < n; ++v)
            for (int w = 0; w < n; ++w)
                if (adj[static_cast<std::size_t>(v)] >> w & 1u) {
                    nbrs[static_cast<std::size_t>(v)].push_back(w);
                    ++edges;
                }
        edges /= 2;
        Rotation rot;
        for (int v = 0; v < n; ++v)
            rot[v] = nbrs[static_cast<std::size_t>(v)];
        // odometer over cyclic orders: the first neighbour stays in front
        std::function<void(int)> vary = [&](int v) {
            if (v == n) {
                const auto faces = trace_faces(rot);
                if (n - edges + static_cast<int>(faces.size()) != 2)
                    return;
                for (std::size_t f = 0; f < faces.size(); ++f) {
                    bool ok = true;
                    for (std::size_t o = 0; o < faces.size() && ok; ++o)
                        ok = o == f || faces[o].size() == 3;
                    if (!ok)
                        continue;
                    const Canonical c = canonical_form(rot, faces[f]);
                    if (!found.count(c.code))
                        found.emplace(c.code, relabeled(rot, c));
                }
                return;
            }
            auto &around = rot[v];
            std::sort(around.begin() + 1, around.end());
            do {
                vary(v + 1);
            } while (around.size() > 2 && std::next_permutation(around.begin() + 1, around.end()));
        };
        vary(0);
    }
    std::vector<PlaneGraph> out;
    for (auto &[_, g] : found)
        out.push_back(std::move(g));
    return out;
}

std::string fingerprint(const PlaneGraph &g)
{
    std::string prefix = "n" + std::to_string(g.vertex_count()) + "e" + std::to_string(g.edge_count()) + "-";
    if (g.edge_count() == 0)
        return prefix + hash_code({0, -1});
    std::vector<DartPair> outer;
    for (Dart d : g.outer_face().darts)
        outer.emplace_back(g.tail(d), g.head(d));
    return prefix + hash_code(canonical_form(rotation_of(g), outer).code);
}

std::vector<CensusRow> census(int max_n)
{
    check_bounds(max_n, max_n);
    std::vector<CensusRow> rows;
    for (int n = 1; n <= max_n; ++n) {
        const auto plans = enumerate_floorplans(n, n);
        for (const PlaneGraph &g : enumerate_ptgs(n)) {
            CensusRow r;
            r.fingerprint = fingerprint(g);
            r.vertices = n;
            r.edges = static_cast<int>(g.edge_count());
            r.theory = decide(g).is_rdg;
            r.oracle = oracle_decide(g, plans).is_rdg;
            rows.push_back(std::move(r));
        }
    }
    return rows;
}

std::string census_table(const std::vector<CensusRow> &rows)
{
    std::ostringstream s;
    s << "fingerprint\tn\tedges\ttheory\toracle\tagree\n";
    for (const auto &r : rows)
        s << r.fingerprint << '\t' << r.vertices << '\t' << r.edges << '\t' << (r.theory ? "accept" : "reject")
          << '\t' << (r.oracle ? "accept" : "reject") << '\t' << (r.agree() ? "yes" : "no") << '\n';
    return s.str();
}

} // namespace rdg
