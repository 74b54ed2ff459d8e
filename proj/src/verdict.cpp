#include "rdg/verdict.hpp"

#include <algorithm>

namespace rdg {

std::string to_string(Mode m)
{
    return m == Mode::Literal ? "literal" : "effective";
}

Mode parse_mode(const std::string &text)
{
    if (text == "effective")
        return Mode::Effective;
    if (text == "literal")
        return Mode::Literal;
    throw Error(Errc::MalformedDocument, "unknown mode '" + text + "'");
}

void Verdict::settle()
{
    is_rdg = std::all_of(conditions.begin(), conditions.end(),
                         [](const Condition &c) { return c.passed || !c.gating; });
}

const Condition *Verdict::find(const std::string &id) const
{
    for (const auto &c : conditions)
        if (c.id == id)
            return &c;
    return nullptr;
}

nlohmann::ordered_json witness_to_json(const Witness &w)
{
    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    if (!w.vertices.empty())
        j["vertices"] = w.vertices;
    if (!w.edges.empty()) {
        nlohmann::ordered_json edges = nlohmann::ordered_json::array();
        for (const auto &[a, b] : w.edges)
            edges.push_back({a, b});
        j["edges"] = edges;
    }
    if (!w.note.empty())
        j["note"] = w.note;
    return j;
}

nlohmann::ordered_json verdict_to_json(const Verdict &v)
{
    nlohmann::ordered_json j;
    j["is_rdg"] = v.is_rdg;
    j["theorem"] = v.theorem;
    j["mode"] = to_string(v.mode);
    nlohmann::ordered_json conds = nlohmann::ordered_json::array();
    for (const auto &c : v.conditions) {
        nlohmann::ordered_json cj;
        cj["id"] = c.id;
        cj["passed"] = c.passed;
        cj["gating"] = c.gating;
        cj["description"] = c.description;
        if (!c.witness.empty())
            cj["witness"] = witness_to_json(c.witness);
        conds.push_back(cj);
    }
    j["conditions"] = conds;
    if (!v.legacy.empty()) {
        nlohmann::ordered_json legacy = nlohmann::ordered_json::array();
        for (const auto &l : v.legacy)
            legacy.push_back(verdict_to_json(l));
        j["legacy"] = legacy;
    }
    if (v.structure)
        j["structure"] = structure_to_json(*v.structure);
    return j;
}

namespace {

Condition no_separating_triangle(const std::string &id, const PlaneGraph &g)
{
    Condition c{id, true, true, "no separating triangle", {}};
    const auto tris = find_separating_triangles(g);
    if (!tris.empty()) {
        c.passed = false;
        const auto &t = tris.front();
        c.witness.vertices.assign(t.vertices.begin(), t.vertices.end());
        c.witness.note = "separating triangle";
    }
    return c;
}

Witness cip_witness(const std::vector<Shortcut> &shortcuts)
{
    Witness w;
    for (const auto &s : shortcuts)
        if (s.is_critical)
            w.edges.emplace_back(s.a, s.b);
    w.note = std::to_string(count_cips(shortcuts)) + " CIPs";
    return w;
}

} // namespace

Verdict legacy_kk_nonseparable(const PlaneGraph &block)
{
    Verdict v;
    v.theorem = "2.2";
    const auto shortcuts = find_shortcuts(block);
    Condition cips{"2.2a", count_cips(shortcuts) <= 4, true, "at most 4 CIPs", {}};
    if (!cips.passed)
        cips.witness = cip_witness(shortcuts);
    v.conditions.push_back(cips);
    v.conditions.push_back(no_separating_triangle("2.2b", block));
    v.settle();
    return v;
}

Verdict legacy_kk_separable(const PlaneGraph &g)
{
    Verdict v;
    v.theorem = "1.1";
    v.conditions.push_back(no_separating_triangle("1.1i", g));

    const auto dec = decompose_blocks(g);
    const auto bng = build_bng(dec);
    Condition path{"1.1ii", bng_is_path(bng), true, "BNG is a path", {}};
    if (!path.passed) {
        for (const auto &l : bng.links)
            path.witness.vertices.push_back(l.shared);
        std::sort(path.witness.vertices.begin(), path.witness.vertices.end());
        path.witness.vertices.erase(std::unique(path.witness.vertices.begin(), path.witness.vertices.end()),
                                    path.witness.vertices.end());
        path.witness.note = "BNG has " + std::to_string(bng.node_count) + " blocks and " +
                            std::to_string(bng.links.size()) + " links";
    }
    v.conditions.push_back(path);

    Condition ends{"1.1iii", true, true, "end blocks contain at most 2 CIPs", {}};
    Condition middle{"1.1iv", true, true, "other blocks contain no CIP", {}};
    const auto deg = bng.degree();
    for (std::size_t i = 0; i < dec.blocks.size(); ++i) {
        const auto shortcuts = find_shortcuts(block_subgraph(g, dec.blocks[i]));
        const std::size_t n = count_cips(shortcuts);
        const bool is_end = deg[i] <= 1;
        Condition &c = is_end ? ends : middle;
        if (n > (is_end ? 2u : 0u) && c.passed) {
            c.passed = false;
            c.witness = cip_witness(shortcuts);
            c.witness.vertices = dec.blocks[i].vertices;
        }
    }
    v.conditions.push_back(ends);
    v.conditions.push_back(middle);
    v.settle();
    return v;
}

} // namespace rdg
