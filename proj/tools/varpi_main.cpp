#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "varpi/classify.hpp"
#include "varpi/norm_io.hpp"
#include "varpi/pivalue.hpp"
#include "varpi/svg_render.hpp"
#include "varpi/verify.hpp"

namespace {

using nlohmann::json;
using namespace varpi;

constexpr double kDefaultCertifiedTol = 1e-6;  // certified intervals
constexpr double kDefaultExactTol = 1e-9;      // exact-polygonal assertions

// 17 significant digits: round-trip exact for 64-bit floats, locale-free.
std::string format_number(double value) {
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

json hexagon_to_json(const HexagonCertificate& cert) {
    json vertices = json::array();
    json sides = json::array();
    json vertex_gauges = json::array();
    for (int i = 0; i < 6; ++i) {
        vertices.push_back(point_to_json(cert.vertices[i]));
        sides.push_back(cert.side_gauges[i]);
        vertex_gauges.push_back(cert.vertex_gauges[i]);
    }
    return {{"u", point_to_json(cert.u)},
            {"v", point_to_json(cert.v)},
            {"vertices", vertices},
            {"side_gauges", sides},
            {"vertex_gauges", vertex_gauges}};
}

std::string extremal_name(ExtremalKind kind) {
    switch (kind) {
        case ExtremalKind::parallelogram:
            return "parallelogram";
        case ExtremalKind::linearly_regular_hexagon:
            return "linearly-regular-hexagon";
        default:
            return "generic";
    }
}

void emit(const json& doc) { std::cout << doc.dump(2) << "\n"; }

int cmd_pi(const std::string& norm_path, double tol) {
    NormSpec norm = load_norm_file(norm_path);
    const PiReport report = pi_certificates(norm, tol);
    json doc{{"lower", report.value.lower},
             {"upper", report.value.upper},
             {"method", report.method == PiMethod::exact_polygonal ? "exact-polygonal"
                                                                   : "certified"},
             {"refinements", report.value.refinements}};
    doc["hexagon"] = report.hexagon ? hexagon_to_json(*report.hexagon) : json(nullptr);
    doc["parallelogram_map"] =
        report.parallelogram_map ? map_to_json(*report.parallelogram_map) : json(nullptr);
    doc["classification"] =
        report.classification ? json(extremal_name(report.classification->kind)) : json(nullptr);
    emit(doc);
    return 0;
}

int cmd_classify(const std::string& norm_path, double tol) {
    NormSpec norm = load_norm_file(norm_path);
    json doc;
    if (std::optional<SymmetricPolygon> ball = polygonal_form(norm)) {
        const ExtremalTag tag = classify_extremal(*ball, tol);
        doc["extremal"] = extremal_name(tag.kind);
        if (tag.kind != ExtremalKind::generic) {
            doc["u"] = point_to_json(tag.u);
            doc["v"] = point_to_json(tag.v);
        }
    } else {
        doc["extremal"] = "generic";  // smooth balls are never extremal
    }
    const std::optional<LinearMap2> quarter = quarter_turn_map(norm, tol);
    doc["quarter_turn"] = quarter ? map_to_json(*quarter) : json(nullptr);
    const EuclideanTestResult euclid = euclidean_test(norm, tol, 64);
    doc["euclidean"] = euclid.is_euclidean;
    doc["max_residual"] = euclid.max_residual;
    doc["tangent_defect"] = tangent_defect(norm, 256, 0.5);
    emit(doc);
    return 0;
}

int cmd_normalize(const std::string& norm_path, double tol) {
    NormSpec norm = load_norm_file(norm_path);
    const NormalizationCertificate cert = circumscribe_normalize(norm, tol);
    json doc{{"matrix", map_to_json(cert.map)},
             {"u", point_to_json(cert.u)},
             {"v", point_to_json(cert.v)}};
    if (std::optional<SymmetricPolygon> ball = polygonal_form(pushforward(cert.map, norm))) {
        json verts = json::array();
        for (const Point2& v : ball->vertices()) verts.push_back(point_to_json(v));
        doc["normalized_vertices"] = verts;
    } else {
        doc["normalized_vertices"] = nullptr;
    }
    emit(doc);
    return 0;
}

int cmd_hexagon(const std::string& norm_path, double tol, const std::string& u_text) {
    NormSpec norm = load_norm_file(norm_path);
    std::optional<Point2> u;
    if (!u_text.empty()) {
        const std::size_t comma = u_text.find(',');
        if (comma == std::string::npos)
            throw ParseError("--u expects \"X,Y\"");
        try {
            u = Point2{std::stod(u_text.substr(0, comma)), std::stod(u_text.substr(comma + 1))};
        } catch (const std::exception&) {
            throw ParseError("--u expects \"X,Y\" with numeric coordinates");
        }
    }
    emit(hexagon_to_json(inscribed_hexagon(norm, tol, u)));
    return 0;
}

int cmd_lp_curve(const std::vector<std::string>& ps_text, double tol, const std::string& csv_path) {
    std::vector<double> ps;
    for (const std::string& chunk : ps_text) {
        std::size_t start = 0;
        while (start <= chunk.size()) {
            const std::size_t comma = chunk.find(',', start);
            const std::string item =
                chunk.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
            if (!item.empty()) {
                if (item == "inf") {
                    ps.push_back(std::numeric_limits<double>::infinity());
                } else {
                    try {
                        ps.push_back(std::stod(item));
                    } catch (const std::exception&) {
                        throw ParseError("--ps entries must be numbers or \"inf\"");
                    }
                }
            }
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
    }
    if (ps.empty()) throw ParseError("--ps needs at least one exponent");

    const std::vector<LpPiRow> rows = lp_pi_table(ps, tol);

    if (!csv_path.empty()) {
        std::ofstream csv(csv_path, std::ios::binary);  // binary keeps LF terminators
        if (!csv) throw ParseError("cannot open CSV output: " + csv_path);
        csv << "p,lower,upper\n";
        for (const LpPiRow& row : rows)
            csv << format_number(row.p) << "," << format_number(row.lower) << ","
                << format_number(row.upper) << "\n";
    }

    json out = json::array();
    for (const LpPiRow& row : rows) {
        json r{{"lower", row.lower}, {"upper", row.upper}};
        r["p"] = std::isinf(row.p) ? json("inf") : json(row.p);
        out.push_back(r);
    }
    emit(json{{"rows", out}});
    return 0;
}

int cmd_verify(std::uint64_t seed, std::uint64_t trials, double tol) {
    const SuiteReport report = run_suite(seed, trials, tol);
    json violations = json::array();
    for (const Violation& v : report.violations)
        violations.push_back({{"check", v.check},
                              {"seed", v.seed},
                              {"shape_dump", v.shape_dump},
                              {"observed", v.observed},
                              {"bound", v.bound}});
    json timings = json::object();
    for (const auto& [name, seconds] : report.timings) timings[name] = seconds;
    json coverage = json::object();
    for (const auto& [name, count] : report.coverage) coverage[name] = count;
    emit(json{{"trials", report.trials},
              {"violations", violations},
              {"timings", timings},
              {"coverage", coverage}});
    return report.violations.empty() ? 0 : 1;
}

int cmd_render(const std::string& norm_path, const std::string& out_path, bool certificates,
               double tol) {
    NormSpec norm = load_norm_file(norm_path);
    std::optional<HexagonCertificate> hexagon;
    std::optional<NormalizationCertificate> parallelogram;
    if (certificates) {
        hexagon = inscribed_hexagon(norm, tol);
        parallelogram = circumscribe_normalize(norm, tol);
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw ParseError("cannot open SVG output: " + out_path);
    out << render_svg(norm, hexagon, parallelogram);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "varpi: pi-values of planar norms, with constructive certificates.\n"
        "Default tolerances: 1e-9 for exact-polygonal assertions, 1e-6 for\n"
        "certified intervals."};
    app.require_subcommand(1);

    std::string norm_path, out_path, csv_path, u_text;
    std::vector<std::string> ps_text;
    double tol_pi = kDefaultCertifiedTol;
    double tol_exact = kDefaultExactTol;
    std::uint64_t seed = 0;
    std::uint64_t trials = 100;
    bool certificates = false;

    CLI::App* pi = app.add_subcommand("pi", "pi-value with certificates");
    pi->add_option("--norm", norm_path, "norm description file")->required();
    pi->add_option("--tol", tol_pi, "certified-interval tolerance (default 1e-6)");

    CLI::App* classify = app.add_subcommand("classify", "extremal/quarter-turn/euclidean tags");
    classify->add_option("--norm", norm_path, "norm description file")->required();
    classify->add_option("--tol", tol_exact, "classification tolerance (default 1e-9)");

    CLI::App* normalize = app.add_subcommand("normalize", "circumscribed-parallelogram basis");
    normalize->add_option("--norm", norm_path, "norm description file")->required();
    normalize->add_option("--tol", tol_exact, "certificate tolerance (default 1e-9)");

    CLI::App* hexagon = app.add_subcommand("hexagon", "inscribed equilateral hexagon");
    hexagon->add_option("--norm", norm_path, "norm description file")->required();
    hexagon->add_option("--u", u_text, "seed vertex as X,Y (default canonical)");
    hexagon->add_option("--tol", tol_pi, "certificate tolerance (default 1e-6)");

    CLI::App* lp_curve = app.add_subcommand("lp-curve", "pi-value enclosures over l^p exponents");
    lp_curve->add_option("--ps", ps_text, "comma-separated exponents (\"inf\" allowed)")
        ->required();
    lp_curve->add_option("--tol", tol_pi, "enclosure tolerance")->required();
    lp_curve->add_option("--csv", csv_path, "write rows as CSV (columns p,lower,upper)");

    CLI::App* verify = app.add_subcommand("verify", "seeded property suite");
    verify->add_option("--seed", seed, "suite seed (required; no wall-clock seeding)")->required();
    verify->add_option("--trials", trials, "random trials per check")->required();
    verify->add_option("--tol", tol_exact, "certificate tolerance (default 1e-9)");

    CLI::App* render = app.add_subcommand("render", "SVG picture of the unit circle");
    render->add_option("--norm", norm_path, "norm description file")->required();
    render->add_option("--out", out_path, "output SVG path")->required();
    render->add_flag("--certificates", certificates, "overlay hexagon and parallelogram");
    render->add_option("--tol", tol_pi, "certificate tolerance (default 1e-6)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*pi) return cmd_pi(norm_path, tol_pi);
        if (*classify) return cmd_classify(norm_path, tol_exact);
        if (*normalize) return cmd_normalize(norm_path, tol_exact);
        if (*hexagon) return cmd_hexagon(norm_path, tol_pi, u_text);
        if (*lp_curve) return cmd_lp_curve(ps_text, tol_pi, csv_path);
        if (*verify) return cmd_verify(seed, trials, tol_exact);
        if (*render) return cmd_render(norm_path, out_path, certificates, tol_pi);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const DegenerateBody& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const SingularMap& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
