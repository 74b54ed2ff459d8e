#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "rdg/plane_graph.hpp"
#include "rdg/structure.hpp"

namespace rdg {

/// A PTG extended by v_inf. Every outer-walk occurrence of a vertex gets one
/// edge to v_inf; each corner gets a second, parallel construction edge.
struct Eptg {
    PlaneGraph base;
    Vertex v_inf = 0;
    std::vector<Vertex> corners;
    PlaneGraph extended;
    std::vector<EdgeId> enclosure_edges;    ///< edge ids in `extended`
    std::vector<EdgeId> construction_edges; ///< the parallel copy at each corner
};

Eptg extend(const PlaneGraph &g, const std::vector<Vertex> &corners);

/// Deterministic corner choice: one vertex strictly inside each usable CIP
/// arc, then the smallest remaining exterior vertices.
std::vector<Vertex> choose_corners(const PlaneGraph &g);

struct EptgAudit {
    bool passed = true;
    bool euler = true;
    std::size_t triangles = 0;
    std::size_t digons = 0;
    std::vector<Face> offending;
};

/// Faces must be triangles except one (v_inf, corner) digon per corner.
EptgAudit audit(const Eptg &e);

std::vector<SeparatingTriangle> separating_triangles_through_vinf(const Eptg &e);

/// A side of a separating triangle through v_inf that holds no other such triangle.
struct CriticalSide {
    std::array<Vertex, 3> triangle{};
    std::vector<Vertex> side;
};

std::vector<CriticalSide> critical_sides(const Eptg &e, const std::vector<SeparatingTriangle> &through_vinf);

/// Triangulated disc bounded by four poles N, E, S, W (in that cyclic order).
/// Non-pole vertices are the rooms of a rectangular plan; a room adjacent to a
/// pole touches the corresponding side of the enclosure.
struct FourPole {
    std::map<Vertex, std::vector<Vertex>> rotation;
    std::array<Vertex, 4> poles{};

    std::vector<Vertex> rooms() const;
    bool is_pole(Vertex v) const;
};

struct FourPoleCheck {
    bool valid = true;
    std::string reason;
    std::vector<Vertex> witness;
};

FourPoleCheck check_four_pole(const FourPole &x);

/// The four-pole graphs obtained by giving 4 - k corners a second enclosure
/// corner, in a fixed order. Empty when the extension has no corner.
std::vector<FourPole> completions(const Eptg &e);

nlohmann::ordered_json eptg_to_json(const Eptg &e);

} // namespace rdg
