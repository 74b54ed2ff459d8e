#include "rdg/decision.hpp"

#include <algorithm>
#include <set>

namespace rdg {

namespace {

std::pair<Vertex, Vertex> ordered(Vertex a, Vertex b)
{
    return {std::min(a, b), std::max(a, b)};
}

std::string list_text(const std::vector<Vertex> &vs)
{
    std::string s;
    for (Vertex v : vs)
        s += (s.empty() ? "" : ",") + std::to_string(v);
    return s;
}

Condition connectivity_condition(const std::string &id, const PlaneGraph &g, bool gating)
{
    Condition c{id, false, gating, "4-connected", {}};
    if (g.vertex_count() < 5) {
        c.witness.note = "fewer than 5 vertices";
        return c;
    }
    const auto &vs = g.vertices();
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j) {
            const int k = count_disjoint_paths(g, vs[i], vs[j]);
            if (k < 4) {
                c.witness.vertices = {vs[i], vs[j]};
                c.witness.note = std::to_string(k) + " disjoint paths";
                return c;
            }
        }
    c.passed = true;
    return c;
}

Vertex unpole(const FourPole &x, Vertex v, Vertex v_inf)
{
    return x.is_pole(v) ? v_inf : v;
}

} // namespace

Verdict decide_eptg(const Eptg &e, Mode mode)
{
    Verdict v;
    v.theorem = "5.1";
    v.mode = mode;
    const PlaneGraph &x = e.extended;
    const int missing = 4 - static_cast<int>(std::min<std::size_t>(4, e.corners.size()));

    Condition degrees{"5.1a", true, true, "every vertex has degree at least 4", {}};
    for (Vertex u : x.vertices()) {
        int d = degree(x, u);
        if (u == e.v_inf)
            d += missing;
        else if (missing > 0 && std::find(e.corners.begin(), e.corners.end(), u) != e.corners.end())
            d += e.base.vertex_count() == 1 ? missing : 1;
        if (d < 4) {
            degrees.passed = false;
            degrees.witness.vertices = {u};
            degrees.witness.note = "degree " + std::to_string(degree(x, u));
            break;
        }
    }
    v.conditions.push_back(degrees);

    const auto all = find_separating_triangles(x);
    Condition confined{"5.1b", true, true, "every separating triangle passes through v_inf", {}};
    std::vector<SeparatingTriangle> through;
    for (const auto &t : all) {
        if (std::find(t.vertices.begin(), t.vertices.end(), e.v_inf) != t.vertices.end()) {
            through.push_back(t);
        } else if (confined.passed) {
            confined.passed = false;
            confined.witness.vertices.assign(t.vertices.begin(), t.vertices.end());
            confined.witness.note = "separating triangle enclosing " + list_text(t.inside);
        }
    }
    mark_critical(through);
    v.conditions.push_back(confined);

    const auto sides = critical_sides(e, through);
    Condition critical{"5.1c", sides.size() <= 4, true,
                       "at most 4 critical separating triangles through v_inf", {}};
    if (!critical.passed) {
        std::set<Vertex> vs;
        for (const auto &s : sides)
            vs.insert(s.triangle.begin(), s.triangle.end());
        critical.witness.vertices.assign(vs.begin(), vs.end());
        critical.witness.note = std::to_string(sides.size()) + " critical separating triangles";
    }
    v.conditions.push_back(critical);

    Condition layout{"5.1d", false, true, "corners admit a four-sided enclosure", {}};
    const auto options = completions(e);
    if (options.empty())
        layout.witness.note = e.corners.empty() ? "no corner vertices" : "more than 4 corners";
    for (const auto &option : options) {
        const auto check = check_four_pole(option);
        if (check.valid) {
            layout.passed = true;
            layout.witness = {};
            break;
        }
        if (layout.witness.empty()) {
            std::set<Vertex> w;
            for (Vertex u : check.witness)
                w.insert(unpole(option, u, e.v_inf));
            layout.witness.vertices.assign(w.begin(), w.end());
            layout.witness.note = check.reason;
        }
    }
    v.conditions.push_back(layout);

    if (mode == Mode::Literal)
        v.conditions.push_back(connectivity_condition("5.1L", x, false));
    v.settle();
    return v;
}

Verdict decide_block(const PlaneGraph &g, Mode mode)
{
    const auto dec = decompose_blocks(g);
    if (!dec.cut_vertices.empty())
        throw Error(Errc::NotBiconnected, "graph has cut vertex " + std::to_string(dec.cut_vertices.front()));
    Verdict v;
    v.theorem = "5.2";
    v.mode = mode;

    Condition shortcuts{"5.2b", true, true, "at most 4 critical shortcuts", {}};
    std::vector<Vertex> corners;
    try {
        corners = choose_corners(g);
    } catch (const Error &err) {
        if (err.code() != Errc::TooManyCriticalShortcuts)
            throw;
        shortcuts.passed = false;
        for (const auto &s : find_shortcuts(g))
            if (s.is_critical)
                shortcuts.witness.edges.push_back({s.a, s.b});
        shortcuts.witness.note = std::to_string(shortcuts.witness.edges.size()) + " critical shortcuts";
        std::set<Vertex> ext(g.outer_face().boundary.begin(), g.outer_face().boundary.end());
        for (Vertex u : ext)
            if (corners.size() < 4)
                corners.push_back(u);
    }

    const Eptg e = extend(g, corners);
    const Verdict inner = decide_eptg(e, Mode::Effective);
    Condition eptg{"5.2a", inner.is_rdg, true, "the extension satisfies the EPTG conditions", {}};
    if (!inner.is_rdg)
        for (const auto &c : inner.conditions)
            if (!c.passed && c.gating) {
                eptg.witness = c.witness;
                eptg.witness.note = c.id + ": " + c.witness.note;
                break;
            }
    v.conditions.push_back(eptg);
    v.conditions.push_back(shortcuts);
    for (auto c : inner.conditions) {
        c.gating = false;
        v.conditions.push_back(std::move(c));
    }
    v.conditions.push_back(connectivity_condition("5.2L", g, mode == Mode::Literal));
    v.settle();
    return v;
}

Verdict decide_separable(const PlaneGraph &g, Mode mode)
{
    const auto dec = decompose_blocks(g);
    if (dec.cut_vertices.empty())
        throw Error(Errc::NotSeparable, "graph has no cut vertex");
    Verdict v;
    v.theorem = "5.3";
    v.mode = mode;
    const auto bng = build_bng(dec);
    const auto deg = bng.degree();

    bool has_bridge = false;
    Condition blocks{"5.3i", true, true, "every block admits a plan", {}};
    Condition literal{"5.3iL", true, mode == Mode::Literal, "every block is 4-connected", {}};
    Condition exterior{"5.3iii", true, true, "no exterior edge of a block joins two cut vertices", {}};
    Condition ends{"5.3iv", true, true, "end blocks have at most 2 critical paths avoiding cut vertices", {}};
    Condition middle{"5.3v", true, true, "inner blocks have no critical path avoiding cut vertices", {}};
    Condition ends_edge{"5.3iv-endpoint", true, false,
                        "end blocks have at most 2 critical shortcuts without a cut vertex endpoint", {}};
    Condition middle_edge{"5.3v-endpoint", true, false,
                          "inner blocks have no critical shortcut without a cut vertex endpoint", {}};

    for (std::size_t i = 0; i < dec.blocks.size(); ++i) {
        const Block &b = dec.blocks[i];
        if (b.is_bridge()) {
            has_bridge = true;
            if (literal.passed) {
                literal.passed = false;
                literal.witness.vertices = b.vertices;
                literal.witness.note = "bridge block";
            }
            continue;
        }
        const PlaneGraph bg = block_subgraph(g, b);
        const Verdict bv = decide_block(bg, Mode::Effective);
        if (!bv.is_rdg && blocks.passed) {
            blocks.passed = false;
            blocks.witness.vertices = b.vertices;
            for (const auto &c : bv.conditions)
                if (!c.passed && c.gating) {
                    blocks.witness.edges = c.witness.edges;
                    blocks.witness.note = c.id + ": " + c.witness.note;
                    break;
                }
        }
        if (literal.passed) {
            const auto lc = connectivity_condition("", bg, true);
            if (!lc.passed) {
                literal.passed = false;
                literal.witness.vertices = b.vertices;
                literal.witness.note = lc.witness.note;
            }
        }

        const auto cyc = outer_cycle(bg);
        for (std::size_t k = 0; k < cyc.size() && exterior.passed; ++k) {
            const Vertex a = cyc[k], c = cyc[(k + 1) % cyc.size()];
            if (dec.is_cut_vertex(a) && dec.is_cut_vertex(c)) {
                exterior.passed = false;
                exterior.witness.edges = {ordered(a, c)};
                exterior.witness.note = "both endpoints are cut vertices";
            }
        }

        const bool is_end = deg[i] <= 1;
        std::size_t arcs = 0, edges = 0;
        std::vector<std::pair<Vertex, Vertex>> arc_shortcuts, edge_shortcuts;
        for (const auto &s : find_shortcuts(bg)) {
            for (const auto &arc : s.cips) {
                const bool clean = std::none_of(arc.begin() + 1, arc.end() - 1,
                                                [&](Vertex u) { return dec.is_cut_vertex(u); });
                if (clean) {
                    ++arcs;
                    arc_shortcuts.push_back({s.a, s.b});
                }
            }
            if (s.is_critical && !dec.is_cut_vertex(s.a) && !dec.is_cut_vertex(s.b)) {
                ++edges;
                edge_shortcuts.push_back({s.a, s.b});
            }
        }
        const std::size_t limit = is_end ? 2 : 0;
        Condition &arc_cond = is_end ? ends : middle;
        if (arcs > limit && arc_cond.passed) {
            arc_cond.passed = false;
            arc_cond.witness.vertices = b.vertices;
            arc_cond.witness.edges = arc_shortcuts;
            arc_cond.witness.note = std::to_string(arcs) + " critical paths";
        }
        Condition &edge_cond = is_end ? ends_edge : middle_edge;
        if (edges > limit && edge_cond.passed) {
            edge_cond.passed = false;
            edge_cond.witness.vertices = b.vertices;
            edge_cond.witness.edges = edge_shortcuts;
            edge_cond.witness.note = std::to_string(edges) + " critical shortcuts";
        }
    }
    if (has_bridge)
        blocks.description += " (bridge blocks are taken as strips by convention)";

    Condition path{"5.3ii", bng_is_path(bng), true, "BNG is a path", {}};
    if (!path.passed) {
        std::set<Vertex> shared;
        for (const auto &l : bng.links)
            shared.insert(l.shared);
        path.witness.vertices.assign(shared.begin(), shared.end());
        path.witness.note = std::to_string(bng.node_count) + " blocks, " + std::to_string(bng.links.size()) +
                            " links";
    }

    v.conditions = {blocks, path, exterior, ends, middle, ends_edge, middle_edge, literal};
    v.settle();
    return v;
}

Verdict decide(const PlaneGraph &g, Mode mode, bool legacy)
{
    const auto ptg = validate_ptg(g);
    if (!ptg.passed)
        throw Error(Errc::PreconditionViolated,
                    "interior face " + list_text(ptg.offending.front().boundary) + " is not a triangle");
    const auto structure = analyze_structure(g);
    const bool separable = !structure.decomposition.cut_vertices.empty();
    Verdict v = separable ? decide_separable(g, mode) : decide_block(g, mode);
    if (legacy)
        v.legacy.push_back(separable ? legacy_kk_separable(g) : legacy_kk_nonseparable(g));
    v.structure = structure;
    return v;
}

} // namespace rdg
