#pragma once

#include <utility>
#include <vector>

#include "json.hpp"
#include "rdg/eptg.hpp"
#include "rdg/floorplan.hpp"

namespace rdg {

/// Builds a normalized plan realizing the extension. Rooms adjacent to v_inf
/// touch the enclosure; the corner vertices own the enclosure corners.
/// Throws PreconditionViolated when no corner completion is admissible.
Floorplan construct_rfp(const Eptg &e);

/// Plan for a valid four-pole graph with the first pole on top and the rest
/// following clockwise.
Floorplan construct_four_pole(const FourPole &x);

struct DualReport {
    bool passed = true;
    std::vector<std::pair<Vertex, Vertex>> missing; ///< graph edges without a shared wall
    std::vector<std::pair<Vertex, Vertex>> extra;   ///< shared walls without a graph edge
    std::vector<Vertex> boundary_mismatch;          ///< rooms on the wrong side of "touches the enclosure"
    std::vector<Vertex> corner_mismatch;            ///< symmetric difference of corner rooms and corners
    bool rooms_match = true;
};

DualReport dual_exactness(const Floorplan &f, const Eptg &e);

nlohmann::ordered_json dual_report_to_json(const DualReport &r);

} // namespace rdg
