#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "rdg/plane_graph.hpp"
#include "rdg/structure.hpp"

namespace rdg {

enum class Mode { Effective, Literal };

std::string to_string(Mode m);
Mode parse_mode(const std::string &text);

struct Witness {
    std::vector<Vertex> vertices;
    std::vector<std::pair<Vertex, Vertex>> edges;
    std::string note;

    bool empty() const { return vertices.empty() && edges.empty() && note.empty(); }
};

struct Condition {
    std::string id;
    bool passed = true;
    /// Informational conditions are reported but do not decide the verdict.
    bool gating = true;
    std::string description;
    Witness witness;
};

struct Verdict {
    bool is_rdg = false;
    std::string theorem; ///< "5.1", "5.2", "5.3", or "1.1" / "2.2" for legacy checks
    Mode mode = Mode::Effective;
    std::vector<Condition> conditions;
    std::vector<Verdict> legacy;
    std::optional<StructureReport> structure;

    /// Sets is_rdg from the gating conditions.
    void settle();
    const Condition *find(const std::string &id) const;
};

nlohmann::ordered_json witness_to_json(const Witness &w);
nlohmann::ordered_json verdict_to_json(const Verdict &v);

/// Literal check for a nonseparable PTG: at most 4 CIPs and no separating triangle.
Verdict legacy_kk_nonseparable(const PlaneGraph &block);
/// Literal check for a separable PTG: no separating triangle, BNG a path, end
/// blocks with at most 2 CIPs and the remaining blocks with none.
Verdict legacy_kk_separable(const PlaneGraph &g);

} // namespace rdg
