#include "varpi/norm_io.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <vector>

#include "varpi/pivalue.hpp"

namespace varpi {

namespace {

using nlohmann::json;

double number_field(const json& doc, const char* key) {
    if (!doc.contains(key)) throw ParseError(std::string("missing key \"") + key + "\"");
    if (!doc[key].is_number())
        throw ParseError(std::string("key \"") + key + "\" must be a number");
    return doc[key].get<double>();
}

Point2 parse_point(const json& node, const char* key) {
    if (!node.is_array() || node.size() != 2 || !node[0].is_number() || !node[1].is_number())
        throw ParseError(std::string("key \"") + key + "\" must hold [x, y] number pairs");
    return {node[0].get<double>(), node[1].get<double>()};
}

NormSpec parse_polygon(const json& doc) {
    if (!doc.contains("vertices")) throw ParseError("missing key \"vertices\"");
    const json& verts = doc["vertices"];
    if (!verts.is_array() || verts.empty())
        throw ParseError("key \"vertices\" must be a non-empty array");
    std::vector<Point2> pts;
    pts.reserve(verts.size());
    for (const json& v : verts) pts.push_back(parse_point(v, "vertices"));
    return NormSpec::polygonal(symmetric_hull(pts));
}

NormSpec parse_lp(const json& doc) {
    if (!doc.contains("p")) throw ParseError("missing key \"p\"");
    const json& p = doc["p"];
    if (p.is_string()) {
        if (p.get<std::string>() != "inf")
            throw ParseError("key \"p\" accepts only the string \"inf\"");
        return NormSpec::lp_infinity();
    }
    if (!p.is_number()) throw ParseError("key \"p\" must be a number or \"inf\"");
    return NormSpec::lp(p.get<double>());
}

NormSpec parse_linear_image(const json& doc) {
    if (!doc.contains("matrix")) throw ParseError("missing key \"matrix\"");
    const json& m = doc["matrix"];
    if (!m.is_array() || m.size() != 2)
        throw ParseError("key \"matrix\" must be [[a, b], [c, d]]");
    const Point2 row1 = parse_point(m[0], "matrix");
    const Point2 row2 = parse_point(m[1], "matrix");
    if (!doc.contains("inner")) throw ParseError("missing key \"inner\"");
    const LinearMap2 map{row1.x, row1.y, row2.x, row2.y};
    // Collapsing through pushforward keeps polygonal balls polygonal.
    return pushforward(map, parse_norm(doc["inner"]));
}

}  // namespace

NormSpec parse_norm(const json& doc) {
    if (!doc.is_object()) throw ParseError("norm description must be an object");
    if (!doc.contains("type")) throw ParseError("missing key \"type\"");
    if (!doc["type"].is_string()) throw ParseError("key \"type\" must be a string");
    const std::string type = doc["type"].get<std::string>();
    if (type == "polygon") return parse_polygon(doc);
    if (type == "lp") return parse_lp(doc);
    if (type == "linear_image") return parse_linear_image(doc);
    if (type == "xt") return make_xt(number_field(doc, "t"));
    throw ParseError("key \"type\" must be one of polygon, lp, linear_image, xt");
}

NormSpec parse_norm_text(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    return parse_norm(doc);
}

NormSpec load_norm_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open norm file: " + path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return parse_norm_text(text);
}

json point_to_json(Point2 p) { return json::array({p.x, p.y}); }

json map_to_json(const LinearMap2& m) {
    return json::array({json::array({m.a11, m.a12}), json::array({m.a21, m.a22})});
}

json norm_to_json(const NormSpec& norm) {
    if (const PolygonalNorm* poly = norm.as_polygonal()) {
        json verts = json::array();
        for (const Point2& v : poly->ball.vertices()) verts.push_back(point_to_json(v));
        return {{"type", "polygon"}, {"vertices", verts}};
    }
    if (const LpNorm* lp = norm.as_lp()) {
        if (lp->p == std::numeric_limits<double>::infinity())
            return {{"type", "lp"}, {"p", "inf"}};
        return {{"type", "lp"}, {"p", lp->p}};
    }
    const LinearImageNorm& li = *norm.as_linear_image();
    return {{"type", "linear_image"}, {"matrix", map_to_json(li.map)},
            {"inner", norm_to_json(*li.inner)}};
}

}  // namespace varpi
