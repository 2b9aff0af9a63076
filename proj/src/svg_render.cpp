#include "varpi/svg_render.hpp"

#include <array>
#include <cstdio>
#include <numbers>
#include <span>

namespace varpi {

namespace {

void append_coord(std::string& out, double value) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.9g", value);
    out += buf;
}

void append_points(std::string& out, std::span<const Point2> pts) {
    bool first = true;
    for (const Point2& p : pts) {
        if (!first) out += " ";
        first = false;
        append_coord(out, p.x);
        out += ",";
        append_coord(out, p.y);
    }
}

void append_polyline(std::string& out, std::span<const Point2> pts, const char* stroke,
                     const char* width) {
    out += "  <polyline fill=\"none\" stroke=\"";
    out += stroke;
    out += "\" stroke-width=\"";
    out += width;
    out += "\" points=\"";
    append_points(out, pts);
    out += "\"/>\n";
}

}  // namespace

std::string render_svg(const NormSpec& norm, const std::optional<HexagonCertificate>& hexagon,
                       const std::optional<NormalizationCertificate>& parallelogram) {
    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"-1.6 -1.6 3.2 3.2\">\n";
    // Flip to the mathematical orientation (y up); the viewBox is symmetric.
    out += "<g transform=\"scale(1,-1)\">\n";
    out += "  <line x1=\"-1.6\" y1=\"0\" x2=\"1.6\" y2=\"0\" stroke=\"#999999\" "
           "stroke-width=\"0.008\"/>\n";
    out += "  <line x1=\"0\" y1=\"-1.6\" x2=\"0\" y2=\"1.6\" stroke=\"#999999\" "
           "stroke-width=\"0.008\"/>\n";

    std::vector<Point2> circle(513);
    for (int i = 0; i < 512; ++i)
        circle[i] = boundary_point(norm, 2.0 * std::numbers::pi * i / 512.0);
    circle[512] = circle[0];
    append_polyline(out, circle, "#000000", "0.015");

    if (hexagon) {
        std::array<Point2, 7> hex;
        for (int i = 0; i < 6; ++i) hex[i] = hexagon->vertices[i];
        hex[6] = hex[0];
        append_polyline(out, hex, "#d62728", "0.012");
    }
    if (parallelogram) {
        const Point2 u = parallelogram->u, v = parallelogram->v;
        const std::array<Point2, 5> quad{u + v, v - u, -u - v, u - v, u + v};
        append_polyline(out, quad, "#1f77b4", "0.012");
    }
    out += "</g>\n</svg>\n";
    return out;
}

}  // namespace varpi
