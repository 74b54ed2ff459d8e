#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rdg/floorplan.hpp"
#include "rdg/plane_graph.hpp"

namespace rdg {

inline constexpr int max_oracle_size = 7;

/// All normalized plans with n rooms on grids of at most k columns and k
/// rows: every interior grid line is used and no four rooms meet at a point.
/// Rooms are numbered 1..n in placement order (top row first, left to right).
std::vector<Floorplan> enumerate_floorplans(int n, int k);

struct OracleResult {
    bool is_rdg = false;
    std::optional<Floorplan> witness; ///< relabeled with the graph's vertex ids
    std::size_t plans_examined = 0;
};

/// Brute-force decision: some enumerated plan realizes the adjacency of g with
/// exactly the exterior vertices of g on the enclosure boundary.
OracleResult oracle_decide(const PlaneGraph &g, int k = 0);
OracleResult oracle_decide(const PlaneGraph &g, const std::vector<Floorplan> &plans);

/// Connected plane graphs on n vertices whose interior faces are triangles,
/// one per embedding class (mirror images identified), vertices numbered
/// 1..n. For n >= 3 graphs with a bridge are skipped unless allowed.
std::vector<PlaneGraph> enumerate_ptgs(int n, bool allow_bridges = false);

/// Stable identifier of an embedded graph up to relabeling and reflection.
std::string fingerprint(const PlaneGraph &g);

struct CensusRow {
    std::string fingerprint;
    int vertices = 0;
    int edges = 0;
    bool theory = false;
    bool oracle = false;
    bool agree() const { return theory == oracle; }
};

std::vector<CensusRow> census(int max_n);
std::string census_table(const std::vector<CensusRow> &rows);

} // namespace rdg
