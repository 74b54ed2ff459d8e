#pragma once

#include <array>
#include <utility>
#include <vector>

#include "json.hpp"
#include "rdg/plane_graph.hpp"

namespace rdg {

struct Block {
    std::vector<Vertex> vertices; ///< sorted
    std::vector<EdgeId> edges;    ///< edge ids of the parent graph, sorted
    bool is_bridge() const { return edges.size() == 1; }
};

struct BlockDecomposition {
    std::vector<Block> blocks;        ///< ordered by their sorted vertex lists
    std::vector<Vertex> cut_vertices; ///< sorted
    bool is_cut_vertex(Vertex v) const;
};

/// Maximal biconnected components; bridges form K2 blocks.
BlockDecomposition decompose_blocks(const PlaneGraph &g);

struct BngLink {
    int a;
    int b;
    Vertex shared;
};

/// Block neighbourhood graph: one node per block, linked when two blocks share a vertex.
struct Bng {
    int node_count = 0;
    std::vector<BngLink> links;
    std::vector<int> degree() const;
};

Bng build_bng(const BlockDecomposition &d);
bool bng_is_path(const Bng &b);
/// Block indices along the path, starting at the lower-numbered endpoint.
/// Empty when the BNG is not a path.
std::vector<int> bng_path_order(const Bng &b);

/// The block as a plane graph carrying the restriction of the parent embedding.
PlaneGraph block_subgraph(const PlaneGraph &g, const Block &block);

/// Boundary of the outer face of a block, starting at its smallest vertex. K2
/// blocks give the degenerate 2-walk. Throws NotBiconnected when the graph has
/// a cut vertex.
std::vector<Vertex> outer_cycle(const PlaneGraph &block);

struct Shortcut {
    Vertex a = 0; ///< a < b
    Vertex b = 0;
    EdgeId edge = -1;
    /// Outer-cycle arcs from a to b that qualify as corner implying paths.
    std::vector<std::vector<Vertex>> cips;
    bool is_critical = false;
};

std::vector<Shortcut> find_shortcuts(const PlaneGraph &block);
std::vector<Shortcut> find_cips(const PlaneGraph &block, std::vector<Shortcut> shortcuts);
std::size_t count_cips(const std::vector<Shortcut> &shortcuts);

struct SeparatingTriangle {
    std::array<Vertex, 3> vertices{}; ///< sorted
    std::array<EdgeId, 3> edges{};
    std::vector<Vertex> inside;  ///< sorted
    std::vector<Vertex> outside; ///< sorted
    bool is_critical = false;
};

/// Non-facial 3-cycles with vertices strictly on both sides. The inside is
/// the side away from the outer face.
std::vector<SeparatingTriangle> find_separating_triangles(const PlaneGraph &g);

/// Marks each triangle critical iff no other listed triangle lies within its
/// inside (vertex containment).
void mark_critical(std::vector<SeparatingTriangle> &triangles);

/// Maximum number of internally vertex-disjoint a-b paths in the underlying
/// simple graph. A direct edge counts as one path.
int count_disjoint_paths(const PlaneGraph &g, Vertex a, Vertex b);
int min_vertex_connectivity(const PlaneGraph &g);

struct BlockReport {
    int block = 0;
    std::vector<Vertex> outer_cycle;
    std::vector<Shortcut> shortcuts;
};

struct StructureReport {
    BlockDecomposition decomposition;
    Bng bng;
    bool bng_is_path = true;
    std::vector<BlockReport> blocks;
    std::vector<SeparatingTriangle> separating_triangles;
};

StructureReport analyze_structure(const PlaneGraph &g);

nlohmann::ordered_json shortcut_to_json(const Shortcut &s);
nlohmann::ordered_json triangle_to_json(const SeparatingTriangle &t);
nlohmann::ordered_json structure_to_json(const StructureReport &r);

} // namespace rdg
