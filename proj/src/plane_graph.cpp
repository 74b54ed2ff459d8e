#include "rdg/plane_graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>

namespace rdg {

namespace {

constexpr std::size_t npos = static_cast<std::size_t>(-1);

bool same_cycle(const std::vector<Vertex> &a, const std::vector<Vertex> &b)
{
    if (a.size() != b.size())
        return false;
    if (a.empty())
        return true;
    const std::size_t n = a.size();
    for (std::size_t shift = 0; shift < n; ++shift) {
        bool fwd = true, bwd = true;
        for (std::size_t i = 0; i < n && (fwd || bwd); ++i) {
            if (a[i] != b[(shift + i) % n])
                fwd = false;
            if (a[i] != b[(shift + n - i) % n])
                bwd = false;
        }
        if (fwd || bwd)
            return true;
    }
    return false;
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x)
    {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

} // namespace

PlaneGraph::PlaneGraph(std::vector<Vertex> vertices, std::vector<Edge> edges,
                       std::map<Vertex, std::vector<EdgeId>> rotation, Dart outer_dart)
    : vertices_(std::move(vertices)), edges_(std::move(edges)), outer_dart_(outer_dart)
{
    std::sort(vertices_.begin(), vertices_.end());
    if (vertices_.empty())
        throw Error(Errc::MalformedDocument, "graph has no vertices");
    if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end())
        throw Error(Errc::MalformedDocument, "duplicate vertex id");
    if (vertices_.front() < 0)
        throw Error(Errc::MalformedDocument, "vertex ids must be non-negative");
    index_.assign(static_cast<std::size_t>(vertices_.back()) + 1, npos);
    for (std::size_t i = 0; i < vertices_.size(); ++i)
        index_[vertices_[i]] = i;
    rotation_.resize(vertices_.size());
    for (auto &[v, list] : rotation) {
        if (!has_vertex(v))
            throw Error(Errc::MalformedDocument, "rotation names unknown vertex " + std::to_string(v));
        rotation_[index_[v]] = std::move(list);
    }
    validate_and_trace();
    outer_listing_ = outer_face().boundary;
}

bool PlaneGraph::has_vertex(Vertex v) const
{
    return v >= 0 && static_cast<std::size_t>(v) < index_.size() && index_[v] != npos;
}

std::size_t PlaneGraph::index_of(Vertex v) const
{
    if (!has_vertex(v))
        throw Error(Errc::UnknownVertex, "vertex " + std::to_string(v));
    return index_[v];
}

std::span<const EdgeId> PlaneGraph::rotation(Vertex v) const { return rotation_[index_of(v)]; }

std::vector<Vertex> PlaneGraph::neighbors(Vertex v) const
{
    std::vector<Vertex> out;
    for (EdgeId e : rotation(v))
        out.push_back(other(e, v));
    return out;
}

Vertex PlaneGraph::other(EdgeId e, Vertex v) const
{
    const Edge &ed = edges_[e];
    return ed.u == v ? ed.v : ed.u;
}

bool PlaneGraph::adjacent(Vertex a, Vertex b) const { return multiplicity(a, b) > 0; }

int PlaneGraph::multiplicity(Vertex a, Vertex b) const
{
    int count = 0;
    for (EdgeId e : rotation(a))
        if (other(e, a) == b)
            ++count;
    return count;
}

bool PlaneGraph::is_simple() const
{
    std::set<std::pair<Vertex, Vertex>> seen;
    for (const Edge &e : edges_) {
        if (e.u == e.v || !seen.insert(std::minmax(e.u, e.v)).second)
            return false;
    }
    return true;
}

Vertex PlaneGraph::tail(Dart d) const
{
    const Edge &e = edges_[edge_of(d)];
    return (d % 2 == 0) ? e.u : e.v;
}

Vertex PlaneGraph::head(Dart d) const
{
    const Edge &e = edges_[edge_of(d)];
    return (d % 2 == 0) ? e.v : e.u;
}

Dart PlaneGraph::dart_from(Vertex v, EdgeId e) const
{
    return dart_of(e, edges_[e].u != v);
}

Dart PlaneGraph::next_dart(Dart d) const
{
    const EdgeId e = edge_of(d);
    const Vertex h = head(d);
    const int pos = position_[e][d % 2 == 0 ? 1 : 0];
    const auto &rot = rotation_[index_[h]];
    const EdgeId next = rot[(static_cast<std::size_t>(pos) + 1) % rot.size()];
    return dart_from(h, next);
}

bool PlaneGraph::on_outer_face(Vertex v) const
{
    const auto &b = outer_face().boundary;
    return std::find(b.begin(), b.end(), v) != b.end();
}

void PlaneGraph::validate_and_trace()
{
    const std::size_t m = edges_.size();
    position_.assign(m, {-1, -1});
    for (std::size_t e = 0; e < m; ++e) {
        const Edge &ed = edges_[e];
        if (!has_vertex(ed.u) || !has_vertex(ed.v))
            throw Error(Errc::MalformedDocument, "edge with unknown endpoint");
        if (ed.u == ed.v)
            throw Error(Errc::MalformedDocument, "loop at vertex " + std::to_string(ed.u));
    }
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        const Vertex v = vertices_[i];
        for (std::size_t p = 0; p < rotation_[i].size(); ++p) {
            const EdgeId e = rotation_[i][p];
            if (e < 0 || static_cast<std::size_t>(e) >= m)
                throw Error(Errc::InconsistentRotation, "unknown edge id in rotation");
            const int side = edges_[e].u == v ? 0 : (edges_[e].v == v ? 1 : -1);
            if (side < 0 || position_[e][side] != -1)
                throw Error(Errc::InconsistentRotation,
                            "edge " + std::to_string(e) + " misplaced in rotation of " + std::to_string(v));
            position_[e][side] = static_cast<int>(p);
        }
    }
    for (std::size_t e = 0; e < m; ++e)
        if (position_[e][0] < 0 || position_[e][1] < 0)
            throw Error(Errc::InconsistentRotation,
                        "edge {" + std::to_string(edges_[e].u) + "," + std::to_string(edges_[e].v) +
                            "} missing from an endpoint rotation");

    // connectivity
    std::vector<char> seen(vertices_.size(), 0);
    std::queue<std::size_t> q;
    q.push(0);
    seen[0] = 1;
    std::size_t reached = 1;
    while (!q.empty()) {
        const std::size_t i = q.front();
        q.pop();
        for (EdgeId e : rotation_[i]) {
            const std::size_t j = index_[other(e, vertices_[i])];
            if (!seen[j]) {
                seen[j] = 1;
                ++reached;
                q.push(j);
            }
        }
    }
    if (reached != vertices_.size())
        throw Error(Errc::Disconnected, "graph is not connected");

    faces_.clear();
    dart_face_.assign(2 * m, -1);
    if (m == 0) {
        if (vertices_.size() != 1)
            throw Error(Errc::Disconnected, "edgeless graph with several vertices");
        faces_.push_back(Face{{vertices_.front()}, {}, true});
        outer_index_ = 0;
        return;
    }
    for (Dart start = 0; start < static_cast<Dart>(2 * m); ++start) {
        if (dart_face_[start] >= 0)
            continue;
        Face f;
        Dart d = start;
        do {
            dart_face_[d] = static_cast<int>(faces_.size());
            f.darts.push_back(d);
            f.boundary.push_back(tail(d));
            d = next_dart(d);
        } while (d != start);
        faces_.push_back(std::move(f));
    }
    const long euler = static_cast<long>(vertices_.size()) - static_cast<long>(m) +
                       static_cast<long>(faces_.size());
    if (euler != 2)
        throw Error(Errc::InconsistentRotation,
                    "rotation system is not planar (V-E+F=" + std::to_string(euler) + ")");
    if (outer_dart_ < 0 || outer_dart_ >= static_cast<Dart>(2 * m))
        throw Error(Errc::OuterFaceNotAFace, "outer dart out of range");
    outer_index_ = static_cast<std::size_t>(dart_face_[outer_dart_]);
    faces_[outer_index_].is_outer = true;
}

PlaneGraph PlaneGraph::from_neighbor_lists(const std::vector<Vertex> &vertices,
                                           const std::map<Vertex, std::vector<Vertex>> &rotation,
                                           const std::vector<Vertex> &outer_face, bool allow_parallel)
{
    std::set<Vertex> vset(vertices.begin(), vertices.end());
    if (vset.size() != vertices.size())
        throw Error(Errc::MalformedDocument, "duplicate vertex id");
    for (const auto &[v, list] : rotation) {
        if (!vset.count(v))
            throw Error(Errc::MalformedDocument, "rotation names unknown vertex " + std::to_string(v));
        for (Vertex w : list) {
            if (!vset.count(w))
                throw Error(Errc::MalformedDocument, "rotation of " + std::to_string(v) +
                                                         " names unknown vertex " + std::to_string(w));
            if (w == v)
                throw Error(Errc::MalformedDocument, "loop at vertex " + std::to_string(v));
        }
    }
    auto list_of = [&](Vertex v) -> const std::vector<Vertex> & {
        static const std::vector<Vertex> empty;
        auto it = rotation.find(v);
        return it == rotation.end() ? empty : it->second;
    };

    // Occurrence positions of each unordered pair in both rotations.
    struct PairClass {
        Vertex a, b; // a < b
        std::vector<std::size_t> at_a, at_b;
    };
    std::map<std::pair<Vertex, Vertex>, PairClass> classes;
    for (Vertex v : vset) {
        const auto &list = list_of(v);
        for (std::size_t p = 0; p < list.size(); ++p) {
            const Vertex w = list[p];
            auto key = std::minmax(v, w);
            auto &pc = classes[{key.first, key.second}];
            pc.a = key.first;
            pc.b = key.second;
            (v == pc.a ? pc.at_a : pc.at_b).push_back(p);
        }
    }
    std::vector<PairClass *> multi;
    for (auto &[key, pc] : classes) {
        if (pc.at_a.size() != pc.at_b.size())
            throw Error(Errc::InconsistentRotation, "edge {" + std::to_string(pc.a) + "," +
                                                        std::to_string(pc.b) +
                                                        "} listed unequally in the endpoint rotations");
        if (pc.at_a.size() > 1) {
            if (!allow_parallel)
                throw Error(Errc::MalformedDocument, "parallel edges {" + std::to_string(pc.a) + "," +
                                                         std::to_string(pc.b) + "}");
            multi.push_back(&pc);
        }
    }

    // Parallel copies pair up in reversed cyclic order; the cyclic offset is
    // not recorded in the document, so every offset is tried.
    std::vector<std::size_t> shift(multi.size(), 0);
    std::string last_error;
    while (true) {
        std::vector<Edge> edges;
        std::map<Vertex, std::vector<EdgeId>> rot;
        for (Vertex v : vset)
            rot[v].assign(list_of(v).size(), -1);
        std::size_t mi = 0;
        for (auto &[key, pc] : classes) {
            const std::size_t k = pc.at_a.size();
            const std::size_t s = (k > 1) ? shift[mi++] : 0;
            for (std::size_t i = 0; i < k; ++i) {
                const EdgeId id = static_cast<EdgeId>(edges.size());
                edges.push_back({pc.a, pc.b});
                rot[pc.a][pc.at_a[i]] = id;
                rot[pc.b][pc.at_b[(s + k - i) % k]] = id;
            }
        }
        try {
            PlaneGraph g(std::vector<Vertex>(vset.begin(), vset.end()), std::move(edges), std::move(rot), 0);
            int match = -1;
            for (std::size_t f = 0; f < g.faces_.size(); ++f)
                if (same_cycle(g.faces_[f].boundary, outer_face)) {
                    match = static_cast<int>(f);
                    break;
                }
            if (match < 0)
                throw Error(Errc::OuterFaceNotAFace, "outer_face does not bound a face of the embedding");
            for (auto &f : g.faces_)
                f.is_outer = false;
            g.outer_index_ = static_cast<std::size_t>(match);
            g.faces_[match].is_outer = true;
            g.outer_dart_ = g.faces_[match].darts.empty() ? -1 : g.faces_[match].darts.front();
            g.outer_listing_ = outer_face;
            return g;
        } catch (const Error &err) {
            if (multi.empty())
                throw;
            last_error = err.what();
        }
        std::size_t i = 0;
        for (; i < multi.size(); ++i) {
            if (++shift[i] < multi[i]->at_a.size())
                break;
            shift[i] = 0;
        }
        if (i == multi.size())
            throw Error(Errc::InconsistentRotation, "no planar pairing of parallel edges: " + last_error);
    }
}

int degree(const PlaneGraph &g, Vertex v) { return static_cast<int>(g.rotation(v).size()); }

bool is_exterior(const PlaneGraph &g, Vertex v)
{
    g.index_of(v);
    return g.on_outer_face(v);
}

std::vector<Face> faces(const PlaneGraph &g) { return g.faces(); }

PtgReport validate_ptg(const PlaneGraph &g)
{
    PtgReport report;
    for (const Face &f : g.faces()) {
        if (f.is_outer)
            continue;
        std::set<Vertex> distinct(f.boundary.begin(), f.boundary.end());
        if (f.boundary.size() != 3 || distinct.size() != 3) {
            report.passed = false;
            report.offending.push_back(f);
        }
    }
    return report;
}

CycleSides cycle_sides(const PlaneGraph &g, std::span<const EdgeId> cycle)
{
    std::set<EdgeId> on_cycle(cycle.begin(), cycle.end());
    std::set<Vertex> cycle_vertices;
    for (EdgeId e : cycle) {
        cycle_vertices.insert(g.edges()[e].u);
        cycle_vertices.insert(g.edges()[e].v);
    }
    UnionFind uf(g.faces().size());
    for (EdgeId e = 0; e < static_cast<EdgeId>(g.edge_count()); ++e)
        if (!on_cycle.count(e))
            uf.unite(g.face_of_dart(2 * e), g.face_of_dart(2 * e + 1));
    const int outer_root = uf.find(static_cast<int>(g.outer_face_index()));
    CycleSides sides;
    for (int f = 0; f < static_cast<int>(g.faces().size()); ++f)
        (uf.find(f) == outer_root ? sides.outer_faces : sides.inner_faces).push_back(f);
    for (Vertex v : g.vertices()) {
        if (cycle_vertices.count(v) || g.rotation(v).empty())
            continue;
        const int f = g.face_of_dart(g.dart_from(v, g.rotation(v).front()));
        (uf.find(f) == outer_root ? sides.outer_side : sides.inner_side).push_back(v);
    }
    return sides;
}

nlohmann::ordered_json graph_to_json(const PlaneGraph &g)
{
    nlohmann::ordered_json doc;
    doc["vertices"] = g.vertices();
    nlohmann::ordered_json rot = nlohmann::ordered_json::object();
    for (Vertex v : g.vertices())
        rot[std::to_string(v)] = g.neighbors(v);
    doc["rotation"] = rot;
    doc["outer_face"] = g.outer_listing();
    return doc;
}

PlaneGraph graph_from_json(const nlohmann::json &doc, bool allow_parallel)
{
    try {
        if (!doc.is_object() || !doc.contains("vertices") || !doc.contains("rotation") ||
            !doc.contains("outer_face"))
            throw Error(Errc::MalformedDocument, "expected fields vertices, rotation, outer_face");
        const auto vertices = doc.at("vertices").get<std::vector<Vertex>>();
        std::map<Vertex, std::vector<Vertex>> rotation;
        for (const auto &[key, list] : doc.at("rotation").items()) {
            std::size_t used = 0;
            const int v = std::stoi(key, &used);
            if (used != key.size())
                throw Error(Errc::MalformedDocument, "rotation key '" + key + "' is not an integer");
            rotation[v] = list.get<std::vector<Vertex>>();
        }
        const auto outer = doc.at("outer_face").get<std::vector<Vertex>>();
        return PlaneGraph::from_neighbor_lists(vertices, rotation, outer, allow_parallel);
    } catch (const nlohmann::json::exception &e) {
        throw Error(Errc::MalformedDocument, e.what());
    } catch (const std::invalid_argument &e) {
        throw Error(Errc::MalformedDocument, e.what());
    } catch (const std::out_of_range &e) {
        throw Error(Errc::MalformedDocument, e.what());
    }
}

PlaneGraph load_graph(std::string_view document)
{
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(document);
    } catch (const nlohmann::json::exception &e) {
        throw Error(Errc::MalformedDocument, e.what());
    }
    return graph_from_json(doc);
}

std::string serialize_graph(const PlaneGraph &g) { return graph_to_json(g).dump(2) + "\n"; }

} // namespace rdg
