#pragma once

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "rdg/plane_graph.hpp"

namespace rdg {

/// Axis-aligned room on the integer grid; (x, y) is the lower-left corner.
struct Rect {
    Vertex id = 0;
    int x = 0;
    int y = 0;
    int w = 1;
    int h = 1;

    bool operator==(const Rect &) const = default;
};

struct Floorplan {
    int width = 0;
    int height = 0;
    std::vector<Rect> rects;

    bool operator==(const Floorplan &) const = default;
};

struct FloorplanReport {
    bool valid = true;
    std::vector<std::string> problems;
};

/// Partition of the enclosure with no point where four rooms meet.
FloorplanReport validate_floorplan(const Floorplan &f);

/// Pairs (a < b) of rooms sharing a boundary segment of positive length, sorted.
std::vector<std::pair<Vertex, Vertex>> adjacency(const Floorplan &f);
/// Rooms touching the enclosure boundary, sorted.
std::vector<Vertex> boundary_rooms(const Floorplan &f);
/// Rooms holding at least one corner of the enclosure, sorted.
std::vector<Vertex> corner_rooms(const Floorplan &f);

/// Compresses coordinates so every grid line is used; rooms sorted by id.
Floorplan normalize(const Floorplan &f);

std::string render_svg(const Floorplan &f);

/// Adjacency graph of a valid plan. Each room lists its neighbours clockwise
/// around its boundary; the rooms along the enclosure form the outer face.
PlaneGraph dual_graph(const Floorplan &f);

nlohmann::ordered_json floorplan_to_json(const Floorplan &f);
Floorplan floorplan_from_json(const nlohmann::json &doc);

} // namespace rdg
