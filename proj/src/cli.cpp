#include "rdg/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include "rdg/constructor.hpp"
#include "rdg/decision.hpp"
#include "rdg/oracle.hpp"
#include "rdg/structure.hpp"

namespace rdg {

namespace {

struct Outcome {
    std::string artifact;
    bool accepted = true;
};

void write_file(const std::string &path, const std::string &text)
{
    std::ofstream f(path, std::ios::binary);
    if (!f || !(f << text))
        throw Error(Errc::PreconditionViolated, "cannot write " + path);
}

std::string dump(const nlohmann::ordered_json &j) { return j.dump(2) + "\n"; }

nlohmann::ordered_json face_json(const Face &f)
{
    return {{"boundary", f.boundary}, {"is_outer", f.is_outer}};
}

Outcome validate(const PlaneGraph &g)
{
    const PtgReport r = validate_ptg(g);
    nlohmann::ordered_json j;
    j["vertices"] = g.vertices().size();
    j["edges"] = g.edges().size();
    j["outer_face"] = g.outer_face().boundary;
    nlohmann::ordered_json all = nlohmann::ordered_json::array();
    for (const Face &f : faces(g))
        all.push_back(face_json(f));
    j["faces"] = all;
    j["ptg"] = r.passed;
    nlohmann::ordered_json bad = nlohmann::ordered_json::array();
    for (const Face &f : r.offending)
        bad.push_back(face_json(f));
    j["offending"] = bad;
    return {dump(j), r.passed};
}

Outcome dualize(const PlaneGraph &g, const RunConfig &c)
{
    const Verdict v = decide(g, c.mode, c.legacy);
    if (!v.is_rdg)
        return {dump(verdict_to_json(v)), false};
    const Floorplan plan = construct_rfp(extend(g, choose_corners(g)));
    if (!c.svg.empty())
        write_file(c.svg, render_svg(plan));
    return {dump(floorplan_to_json(plan)), true};
}

Outcome oracle(const PlaneGraph &g, int grid)
{
    const OracleResult r = oracle_decide(g, grid);
    nlohmann::ordered_json j;
    j["is_rdg"] = r.is_rdg;
    j["plans_examined"] = r.plans_examined;
    j["witness"] = r.witness ? floorplan_to_json(*r.witness) : nlohmann::ordered_json();
    return {dump(j), r.is_rdg};
}

Outcome census_command(int n)
{
    const auto rows = census(n);
    bool agree = true;
    for (const auto &row : rows)
        agree = agree && row.agree();
    return {census_table(rows), agree};
}

Outcome dispatch(const RunConfig &c)
{
    if (c.command == "census")
        return census_command(c.census_n);
    const PlaneGraph g = load_graph(read_file(c.input));
    if (c.command == "validate")
        return validate(g);
    if (c.command == "analyze") {
        const PtgReport r = validate_ptg(g);
        if (!r.passed)
            throw Error(Errc::PreconditionViolated, "not a plane triangulated graph");
        return {dump(structure_to_json(analyze_structure(g))), true};
    }
    if (c.command == "decide") {
        const Verdict v = decide(g, c.mode, c.legacy);
        return {dump(verdict_to_json(v)), v.is_rdg};
    }
    if (c.command == "dualize")
        return dualize(g, c);
    if (c.command == "oracle")
        return oracle(g, c.grid);
    throw Error(Errc::PreconditionViolated, "unknown command '" + c.command + "'");
}

std::string one_line(std::string s)
{
    for (char &ch : s)
        if (ch == '\n' || ch == '\r')
            ch = ' ';
    return s;
}

} // namespace

std::string read_file(const std::string &path)
{
    std::ifstream f(path, std::ios::binary);
    if (!f)
        throw Error(Errc::MalformedDocument, "cannot read " + path);
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
}

int run(const RunConfig &config, std::ostream &out, std::ostream &err)
{
    try {
        const Outcome o = dispatch(config);
        if (config.output.empty())
            out << o.artifact;
        else
            write_file(config.output, o.artifact);
        return o.accepted ? 0 : 1;
    } catch (const std::exception &e) {
        err << "rdg: " << one_line(e.what()) << "\n";
    }
    return 2;
}

} // namespace rdg
