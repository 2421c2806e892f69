#include "core/json_io.hpp"

#include <fstream>

#include "core/errors.hpp"

namespace isosurf {

namespace {

double get_num(const Json& j, const char* key, std::optional<double> dflt = std::nullopt) {
    if (!j.contains(key)) {
        if (dflt) return *dflt;
        fail(Errc::Config, std::string("missing numeric field \"") + key + "\"");
    }
    if (!j.at(key).is_number())
        fail(Errc::Config, std::string("field \"") + key + "\" must be a number");
    return j.at(key).get<double>();
}

std::string get_str(const Json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_string())
        fail(Errc::Config, std::string("missing string field \"") + key + "\"");
    return j.at(key).get<std::string>();
}

} // namespace

Json subgroup_to_json(const MotionSubgroup& g) {
    return Json{{"signature", signature_name(g.sig)}, {"phi", g.phi}, {"a", g.a}, {"b", g.b},
                {"c", g.c},                           {"c1", g.c1},   {"c2", g.c2}};
}

MotionSubgroup subgroup_from_json(const Json& j) {
    if (!j.is_object()) fail(Errc::Config, "subgroup spec must be a JSON object");
    MotionSubgroup g;
    g.sig = signature_from_name(get_str(j, "signature"));
    g.phi = get_num(j, "phi", 0.0);
    g.a = get_num(j, "a", 0.0);
    g.b = get_num(j, "b", 0.0);
    g.c = get_num(j, "c", 0.0);
    g.c1 = get_num(j, "c1", 0.0);
    g.c2 = get_num(j, "c2", 0.0);
    return g;
}

GeneratingCurve curve_from_json(const Json& j) {
    if (!j.is_object()) fail(Errc::Config, "curve spec must be a JSON object");
    const CurvePlane plane = curve_plane_from_name(get_str(j, "plane"));
    const std::string kind = get_str(j, "kind");
    std::vector<double> p;
    if (j.contains("params")) {
        if (!j.at("params").is_array()) fail(Errc::Config, "curve params must be an array");
        p = j.at("params").get<std::vector<double>>();
    }
    auto need = [&](std::size_t n) {
        if (p.size() < n)
            fail(Errc::Config, "curve kind \"" + kind + "\" needs at least " + std::to_string(n) +
                                   " params");
    };
    if (kind == "line") {
        need(4);
        return GeneratingCurve::line(plane, p[0], p[1], p[2], p[3]);
    }
    if (kind == "circle") {
        need(1);
        return GeneratingCurve::circle(plane, p[0], p.size() > 1 ? p[1] : 0.0,
                                       p.size() > 2 ? p[2] : 0.0);
    }
    if (kind == "hyperbola") {
        need(1);
        return GeneratingCurve::hyperbola(plane, p[0], p.size() > 1 ? p[1] : 0.0,
                                          p.size() > 2 ? p[2] : 0.0);
    }
    if (kind == "parabola") {
        need(1);
        return GeneratingCurve::parabola(plane, p[0]);
    }
    if (kind == "graph") {
        need(1);
        return GeneratingCurve::graph(plane, p);
    }
    fail(Errc::Config, "unknown curve kind \"" + kind + "\"");
}

CurvatureProfile profile_from_json(const Json& j, double s_min, double s_max) {
    if (!j.is_object()) fail(Errc::Config, "profile spec must be a JSON object");
    const std::string kind = get_str(j, "kind");
    std::vector<double> p;
    if (j.contains("params")) p = j.at("params").get<std::vector<double>>();
    if (kind == "constant") {
        if (p.size() != 1) fail(Errc::Config, "constant profile needs exactly one param");
        return CurvatureProfile::constant(p[0], s_min, s_max);
    }
    if (kind == "poly") {
        if (p.empty()) fail(Errc::Config, "poly profile needs coefficients");
        return CurvatureProfile::poly(p, s_min, s_max);
    }
    if (kind == "sin") {
        if (p.size() < 2) fail(Errc::Config, "sin profile needs [amplitude, omega(, phase)]");
        return CurvatureProfile::sine(p[0], p[1], s_min, s_max, p.size() > 2 ? p[2] : 0.0);
    }
    fail(Errc::Config, "unknown profile kind \"" + kind + "\"");
}

GenerateConfig generate_config_from_json(const Json& j) {
    if (!j.is_object()) fail(Errc::Config, "generate config must be a JSON object");
    GenerateConfig cfg;
    if (!j.contains("subgroup")) fail(Errc::Config, "generate config needs \"subgroup\"");
    cfg.subgroup = subgroup_from_json(j.at("subgroup"));
    if (!j.contains("curve")) fail(Errc::Config, "generate config needs \"curve\"");
    cfg.curve_spec = j.at("curve");
    curve_from_json(cfg.curve_spec); // validate now

    if (!j.contains("domain") || !j.at("domain").is_object())
        fail(Errc::Config, "generate config needs \"domain\": {\"u\":[..],\"t\":[..]}");
    const auto& d = j.at("domain");
    auto span = [&](const char* key) -> std::pair<double, double> {
        if (!d.contains(key) || !d.at(key).is_array() || d.at(key).size() != 2)
            fail(Errc::Config, std::string("domain needs \"") + key + "\": [lo, hi]");
        const double lo = d.at(key).at(0).get<double>();
        const double hi = d.at(key).at(1).get<double>();
        if (!(hi > lo)) fail(Errc::Config, std::string("domain \"") + key + "\" is empty");
        return {lo, hi};
    };
    std::tie(cfg.domain.u0, cfg.domain.u1) = span("u");
    std::tie(cfg.domain.t0, cfg.domain.t1) = span("t");

    if (j.contains("grid")) {
        const auto& g = j.at("grid");
        if (!g.is_array() || g.size() != 2) fail(Errc::Config, "\"grid\" must be [nu, nt]");
        cfg.nu = g.at(0).get<int>();
        cfg.nt = g.at(1).get<int>();
        if (cfg.nu < 2 || cfg.nt < 2) fail(Errc::Config, "grid resolution must be >= 2 per axis");
    }
    cfg.tol = get_num(j, "tol", 0.0);
    if (j.contains("name")) cfg.name = get_str(j, "name");
    if (j.contains("outputs")) {
        const auto& o = j.at("outputs");
        if (o.contains("obj")) cfg.obj_path = o.at("obj").get<std::string>();
        if (o.contains("csv")) cfg.csv_path = o.at("csv").get<std::string>();
        if (o.contains("report")) cfg.report_path = o.at("report").get<std::string>();
    }
    return cfg;
}

SolveConfig solve_config_from_json(const Json& j) {
    if (!j.is_object()) fail(Errc::Config, "solve config must be a JSON object");
    SolveConfig cfg;
    cfg.solver = get_str(j, "solver");
    cfg.sig = signature_from_name(get_str(j, "signature"));
    if (j.contains("plane")) cfg.plane = curve_plane_from_name(get_str(j, "plane"));
    if (j.contains("eps")) cfg.eps = j.at("eps").get<int>();
    if (!j.contains("profile")) fail(Errc::Config, "solve config needs \"profile\"");
    cfg.profile_spec = j.at("profile");

    if (!j.contains("domain") || !j.at("domain").is_array() || j.at("domain").size() != 2)
        fail(Errc::Config, "solve config needs \"domain\": [s_min, s_max]");
    cfg.s_min = j.at("domain").at(0).get<double>();
    cfg.s_max = j.at("domain").at(1).get<double>();
    if (!(cfg.s_max > cfg.s_min)) fail(Errc::Config, "solve domain is empty");
    profile_from_json(cfg.profile_spec, cfg.s_min, cfg.s_max); // validate now

    const Json c = j.contains("constants") ? j.at("constants") : Json::object();
    cfg.c0 = c.contains("k0") ? c.at("k0").get<double>()
                              : (c.contains("h0") ? c.at("h0").get<double>() : 0.0);
    cfg.c1 = c.contains("k1") ? c.at("k1").get<double>()
                              : (c.contains("h1") ? c.at("h1").get<double>() : 0.0);

    const Json p = j.contains("params") ? j.at("params") : Json::object();
    cfg.c = get_num(p, "c", 0.0);
    cfg.phi = get_num(p, "phi", 0.0);
    cfg.a = get_num(p, "a", 0.0);
    cfg.b = get_num(p, "b", 0.0);
    cfg.cc1 = get_num(p, "c1", 0.0);
    cfg.cc2 = get_num(p, "c2", 0.0);

    if (j.contains("samples")) cfg.samples = j.at("samples").get<int>();
    if (cfg.samples < 2) fail(Errc::Config, "samples must be >= 2");
    if (j.contains("roundtrip")) cfg.roundtrip = j.at("roundtrip").get<bool>();
    cfg.quad_tol = get_num(j, "quad_tol", 1e-10);
    if (j.contains("outputs")) {
        const auto& o = j.at("outputs");
        if (o.contains("curve_csv")) cfg.curve_csv_path = o.at("curve_csv").get<std::string>();
        if (o.contains("roundtrip_csv"))
            cfg.roundtrip_csv_path = o.at("roundtrip_csv").get<std::string>();
        if (o.contains("report")) cfg.report_path = o.at("report").get<std::string>();
    }
    return cfg;
}

Json parse_json(const std::string& text) {
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded()) fail(Errc::Config, "malformed JSON");
    return j;
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(Errc::Config, "cannot open config file: " + path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return parse_json(text);
}

void apply_override(Json& j, const std::string& dotted_key, const std::string& value) {
    Json* node = &j;
    std::size_t pos = 0;
    while (true) {
        const std::size_t dot = dotted_key.find('.', pos);
        const std::string key = dotted_key.substr(pos, dot == std::string::npos ? dot : dot - pos);
        if (key.empty()) fail(Errc::Config, "bad override key: " + dotted_key);
        if (dot == std::string::npos) {
            Json parsed = Json::parse(value, nullptr, false);
            (*node)[key] = parsed.is_discarded() ? Json(value) : parsed;
            return;
        }
        node = &((*node)[key]);
        pos = dot + 1;
    }
}

} // namespace isosurf
