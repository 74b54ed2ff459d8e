#include "rdg/floorplan.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace rdg {

namespace {

int overlap(int a0, int a1, int b0, int b1)
{
    return std::min(a1, b1) - std::max(a0, b0);
}

bool touches(const Rect &a, const Rect &b)
{
    if (a.x + a.w == b.x || b.x + b.w == a.x)
        return overlap(a.y, a.y + a.h, b.y, b.y + b.h) > 0;
    if (a.y + a.h == b.y || b.y + b.h == a.y)
        return overlap(a.x, a.x + a.w, b.x, b.x + b.w) > 0;
    return false;
}

} // namespace

FloorplanReport validate_floorplan(const Floorplan &f)
{
    FloorplanReport r;
    auto problem = [&](std::string p) {
        r.valid = false;
        r.problems.push_back(std::move(p));
    };
    if (f.width < 1 || f.height < 1)
        problem("enclosure has no area");
    if (f.rects.empty())
        problem("no rooms");
    long long area = 0;
    std::set<Vertex> ids;
    for (const Rect &a : f.rects) {
        const std::string name = "room " + std::to_string(a.id);
        if (!ids.insert(a.id).second)
            problem(name + " appears twice");
        if (a.w < 1 || a.h < 1)
            problem(name + " is degenerate");
        if (a.x < 0 || a.y < 0 || a.x + a.w > f.width || a.y + a.h > f.height)
            problem(name + " leaves the enclosure");
        area += static_cast<long long>(a.w) * a.h;
    }
    for (std::size_t i = 0; i < f.rects.size(); ++i)
        for (std::size_t j = i + 1; j < f.rects.size(); ++j) {
            const Rect &a = f.rects[i], &b = f.rects[j];
            if (overlap(a.x, a.x + a.w, b.x, b.x + b.w) > 0 && overlap(a.y, a.y + a.h, b.y, b.y + b.h) > 0)
                problem("rooms " + std::to_string(a.id) + " and " + std::to_string(b.id) + " overlap");
        }
    if (area != static_cast<long long>(f.width) * f.height)
        problem("room areas do not fill the enclosure");

    std::map<std::pair<int, int>, int> corners;
    for (const Rect &a : f.rects)
        for (int dx : {0, a.w})
            for (int dy : {0, a.h})
                ++corners[{a.x + dx, a.y + dy}];
    for (const auto &[p, count] : corners)
        if (count >= 4)
            problem("four rooms meet at (" + std::to_string(p.first) + "," + std::to_string(p.second) + ")");
    return r;
}

std::vector<std::pair<Vertex, Vertex>> adjacency(const Floorplan &f)
{
    std::vector<std::pair<Vertex, Vertex>> out;
    for (std::size_t i = 0; i < f.rects.size(); ++i)
        for (std::size_t j = i + 1; j < f.rects.size(); ++j)
            if (touches(f.rects[i], f.rects[j]))
                out.emplace_back(std::min(f.rects[i].id, f.rects[j].id), std::max(f.rects[i].id, f.rects[j].id));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Vertex> boundary_rooms(const Floorplan &f)
{
    std::vector<Vertex> out;
    for (const Rect &a : f.rects)
        if (a.x == 0 || a.y == 0 || a.x + a.w == f.width || a.y + a.h == f.height)
            out.push_back(a.id);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Vertex> corner_rooms(const Floorplan &f)
{
    std::set<Vertex> out;
    for (const Rect &a : f.rects) {
        const bool left = a.x == 0, right = a.x + a.w == f.width;
        const bool bottom = a.y == 0, top = a.y + a.h == f.height;
        if ((left || right) && (bottom || top))
            out.insert(a.id);
    }
    return {out.begin(), out.end()};
}

Floorplan normalize(const Floorplan &f)
{
    std::set<int> xs{0, f.width}, ys{0, f.height};
    for (const Rect &a : f.rects) {
        xs.insert({a.x, a.x + a.w});
        ys.insert({a.y, a.y + a.h});
    }
    std::map<int, int> xi, yi;
    for (int x : xs)
        xi.emplace(x, static_cast<int>(xi.size()));
    for (int y : ys)
        yi.emplace(y, static_cast<int>(yi.size()));
    Floorplan out;
    out.width = xi.at(f.width);
    out.height = yi.at(f.height);
    for (const Rect &a : f.rects) {
        const int x0 = xi.at(a.x), y0 = yi.at(a.y);
        out.rects.push_back({a.id, x0, y0, xi.at(a.x + a.w) - x0, yi.at(a.y + a.h) - y0});
    }
    std::sort(out.rects.begin(), out.rects.end(), [](const Rect &a, const Rect &b) { return a.id < b.id; });
    return out;
}

std::string render_svg(const Floorplan &f)
{
    if (f.rects.empty())
        throw Error(Errc::PreconditionViolated, "cannot render a plan without rooms");
    constexpr int unit = 40;
    constexpr int margin = 10;
    std::ostringstream s;
    s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << f.width * unit + 2 * margin << "\" height=\""
      << f.height * unit + 2 * margin << "\">\n";
    for (const Rect &a : f.rects) {
        const int px = margin + a.x * unit;
        const int py = margin + (f.height - a.y - a.h) * unit;
        s << "  <g id=\"room-" << a.id << "\">\n";
        s << "    <rect x=\"" << px << "\" y=\"" << py << "\" width=\"" << a.w * unit << "\" height=\""
          << a.h * unit << "\" fill=\"#f4f1e8\" stroke=\"#333\" stroke-width=\"2\"/>\n";
        s << "    <text x=\"" << px + a.w * unit / 2 << "\" y=\"" << py + a.h * unit / 2
          << "\" text-anchor=\"middle\" dominant-baseline=\"middle\" font-family=\"sans-serif\" font-size=\"14\">"
          << a.id << "</text>\n";
        s << "  </g>\n";
    }
    s << "</svg>\n";
    return s.str();
}

PlaneGraph dual_graph(const Floorplan &f)
{
    using Key = std::pair<int, Vertex>;
    std::map<Vertex, std::vector<Vertex>> rot;
    std::vector<Vertex> ids;
    for (const Rect &r : f.rects) {
        ids.push_back(r.id);
        std::vector<Key> top, right, bottom, left;
        for (const Rect &s : f.rects) {
            if (s.id == r.id)
                continue;
            const bool xo = overlap(r.x, r.x + r.w, s.x, s.x + s.w) > 0;
            const bool yo = overlap(r.y, r.y + r.h, s.y, s.y + s.h) > 0;
            if (xo && s.y == r.y + r.h)
                top.push_back({s.x, s.id});
            else if (yo && s.x == r.x + r.w)
                right.push_back({-s.y, s.id});
            else if (xo && s.y + s.h == r.y)
                bottom.push_back({-s.x, s.id});
            else if (yo && s.x + s.w == r.x)
                left.push_back({s.y, s.id});
        }
        auto &list = rot[r.id];
        for (auto *side : {&top, &right, &bottom, &left}) {
            std::sort(side->begin(), side->end());
            for (const auto &[_, id] : *side)
                list.push_back(id);
        }
    }
    std::vector<Key> top, right, bottom, left;
    for (const Rect &r : f.rects) {
        if (r.y + r.h == f.height)
            top.push_back({r.x, r.id});
        if (r.x + r.w == f.width)
            right.push_back({-r.y, r.id});
        if (r.y == 0)
            bottom.push_back({-r.x, r.id});
        if (r.x == 0)
            left.push_back({r.y, r.id});
    }
    std::vector<Vertex> outer;
    for (auto *side : {&top, &right, &bottom, &left}) {
        std::sort(side->begin(), side->end());
        for (const auto &[_, id] : *side)
            if (outer.empty() || outer.back() != id)
                outer.push_back(id);
    }
    while (outer.size() > 1 && outer.front() == outer.back())
        outer.pop_back();
    std::sort(ids.begin(), ids.end());
    return PlaneGraph::from_neighbor_lists(ids, rot, outer);
}

nlohmann::ordered_json floorplan_to_json(const Floorplan &f)
{
    nlohmann::ordered_json j;
    j["width"] = f.width;
    j["height"] = f.height;
    nlohmann::ordered_json rects = nlohmann::ordered_json::array();
    for (const Rect &a : f.rects)
        rects.push_back({{"id", a.id}, {"x", a.x}, {"y", a.y}, {"w", a.w}, {"h", a.h}});
    j["rects"] = rects;
    return j;
}

Floorplan floorplan_from_json(const nlohmann::json &doc)
{
    try {
        Floorplan f;
        f.width = doc.at("width").get<int>();
        f.height = doc.at("height").get<int>();
        for (const auto &r : doc.at("rects"))
            f.rects.push_back({r.at("id").get<Vertex>(), r.at("x").get<int>(), r.at("y").get<int>(),
                               r.at("w").get<int>(), r.at("h").get<int>()});
        return f;
    } catch (const nlohmann::json::exception &e) {
        throw Error(Errc::MalformedDocument, e.what());
    }
}

} // namespace rdg
