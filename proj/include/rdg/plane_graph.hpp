#pragma once

#include <array>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "rdg/error.hpp"

namespace rdg {

using Vertex = int;
using EdgeId = int;
/// A dart is an edge traversed in one direction: 2*e is u->v, 2*e+1 is v->u.
using Dart = int;

struct Edge {
    Vertex u;
    Vertex v;
};

struct Face {
    std::vector<Vertex> boundary; ///< cyclic, in traversal order
    std::vector<Dart> darts;
    bool is_outer = false;
};

/// Combinatorial embedding of a connected plane (multi)graph.
///
/// Each vertex carries the clockwise cyclic order of its incident edges.
/// Faces are traced by taking, after arriving at v along e, the edge that
/// follows e in the rotation of v. One face is designated as the outer face.
/// The value is immutable; all invariants are checked on construction.
class PlaneGraph {
public:
    PlaneGraph() = default;

    /// Builds from explicit edge ids. `outer_dart` names a dart on the outer
    /// face; it is ignored for the edgeless single-vertex graph.
    PlaneGraph(std::vector<Vertex> vertices, std::vector<Edge> edges,
               std::map<Vertex, std::vector<EdgeId>> rotation, Dart outer_dart);

    /// Builds from per-vertex neighbour lists (parallel edges repeat the
    /// neighbour) and the outer face as a vertex cycle in either direction.
    static PlaneGraph from_neighbor_lists(const std::vector<Vertex> &vertices,
                                          const std::map<Vertex, std::vector<Vertex>> &rotation,
                                          const std::vector<Vertex> &outer_face,
                                          bool allow_parallel = false);

    const std::vector<Vertex> &vertices() const { return vertices_; }
    const std::vector<Edge> &edges() const { return edges_; }
    std::size_t vertex_count() const { return vertices_.size(); }
    std::size_t edge_count() const { return edges_.size(); }
    bool has_vertex(Vertex v) const;

    std::span<const EdgeId> rotation(Vertex v) const;
    /// Neighbours in rotation order, with multiplicity.
    std::vector<Vertex> neighbors(Vertex v) const;
    Vertex other(EdgeId e, Vertex v) const;
    bool adjacent(Vertex a, Vertex b) const;
    int multiplicity(Vertex a, Vertex b) const;
    bool is_simple() const;

    static Dart dart_of(EdgeId e, bool reversed) { return 2 * e + (reversed ? 1 : 0); }
    static EdgeId edge_of(Dart d) { return d / 2; }
    Vertex tail(Dart d) const;
    Vertex head(Dart d) const;
    Dart next_dart(Dart d) const;
    /// Dart leaving `v` along edge `e`.
    Dart dart_from(Vertex v, EdgeId e) const;

    const std::vector<Face> &faces() const { return faces_; }
    const Face &outer_face() const { return faces_[outer_index_]; }
    std::size_t outer_face_index() const { return outer_index_; }
    int face_of_dart(Dart d) const { return dart_face_[d]; }
    bool on_outer_face(Vertex v) const;

    /// Outer face listing used for serialization (the document's own listing
    /// when loaded from one).
    const std::vector<Vertex> &outer_listing() const { return outer_listing_; }

    std::size_t index_of(Vertex v) const;

private:
    void validate_and_trace();

    std::vector<Vertex> vertices_;
    std::vector<Edge> edges_;
    std::vector<std::vector<EdgeId>> rotation_;
    std::vector<std::size_t> index_;  ///< vertex id -> position, npos if absent
    std::vector<std::array<int, 2>> position_; ///< edge -> index in rotation of u / v
    std::vector<Face> faces_;
    std::vector<int> dart_face_;
    std::size_t outer_index_ = 0;
    Dart outer_dart_ = -1;
    std::vector<Vertex> outer_listing_;
};

int degree(const PlaneGraph &g, Vertex v);
bool is_exterior(const PlaneGraph &g, Vertex v);
std::vector<Face> faces(const PlaneGraph &g);

struct PtgReport {
    bool passed = true;
    std::vector<Face> offending; ///< interior faces whose boundary is not a triangle
};

PtgReport validate_ptg(const PlaneGraph &g);

/// The two sides of a closed walk given by its edges: vertices strictly on each
/// side; side 0 is the one holding the outer face.
struct CycleSides {
    std::vector<Vertex> outer_side;
    std::vector<Vertex> inner_side;
    std::vector<int> outer_faces; ///< face indices on the outer side
    std::vector<int> inner_faces;
};

CycleSides cycle_sides(const PlaneGraph &g, std::span<const EdgeId> cycle);

nlohmann::ordered_json graph_to_json(const PlaneGraph &g);
PlaneGraph graph_from_json(const nlohmann::json &doc, bool allow_parallel = false);
PlaneGraph load_graph(std::string_view document);
std::string serialize_graph(const PlaneGraph &g);

} // namespace rdg
