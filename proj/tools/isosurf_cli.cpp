// isosurf command-line front end.  All engine work goes through the C API in
// include/isosurf.h; this file only handles configs, overrides and files.
//
// Exit codes: 0 ok, 2 config error, 3 domain/admissibility error,
// 4 verification failure.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "isosurf.h"

namespace {

using Json = nlohmann::json;

int exit_code_of(isosurf_status st) {
    switch (st) {
    case ISOSURF_OK: return 0;
    case ISOSURF_ERR_CONFIG:
    case ISOSURF_ERR_INVALID_ARG:
    case ISOSURF_ERR_IO: return 2;
    case ISOSURF_ERR_DOMAIN:
    case ISOSURF_ERR_UNCLASSIFIABLE:
    case ISOSURF_ERR_NO_CLOSED_FORM:
    case ISOSURF_ERR_NO_CONVERGENCE: return 3;
    case ISOSURF_ERR_VERIFY: return 4;
    default: return 1;
    }
}

[[noreturn]] void bail(isosurf_status st, const std::string& context) {
    std::cerr << "isosurf: " << context << ": " << isosurf_last_error() << "\n";
    std::exit(exit_code_of(st));
}

void check(isosurf_status st, const std::string& context) {
    if (st != ISOSURF_OK) bail(st, context);
}

struct Options {
    std::string config_path;
    std::string out_dir = ".";
    std::string grid;
    double tol = 0.0;
    std::vector<std::string> overrides;
};

Json load_config(const Options& opt) {
    Json cfg = Json::object();
    if (!opt.config_path.empty()) {
        std::ifstream in(opt.config_path);
        if (!in) {
            std::cerr << "isosurf: cannot open config file: " << opt.config_path << "\n";
            std::exit(2);
        }
        cfg = Json::parse(in, nullptr, false);
        if (cfg.is_discarded()) {
            std::cerr << "isosurf: malformed JSON in " << opt.config_path << "\n";
            std::exit(2);
        }
    }
    // flags win over the config file
    for (const std::string& kv : opt.overrides) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos) {
            std::cerr << "isosurf: bad --set (expected key.path=value): " << kv << "\n";
            std::exit(2);
        }
        Json* node = &cfg;
        std::string path = kv.substr(0, eq);
        std::size_t pos = 0;
        while (true) {
            const auto dot = path.find('.', pos);
            const std::string key =
                path.substr(pos, dot == std::string::npos ? dot : dot - pos);
            if (dot == std::string::npos) {
                Json parsed = Json::parse(kv.substr(eq + 1), nullptr, false);
                (*node)[key] = parsed.is_discarded() ? Json(kv.substr(eq + 1)) : parsed;
                break;
            }
            node = &((*node)[key]);
            pos = dot + 1;
        }
    }
    if (!opt.grid.empty()) {
        const auto x = opt.grid.find('x');
        if (x == std::string::npos) {
            std::cerr << "isosurf: --grid expects NxM\n";
            std::exit(2);
        }
        cfg["grid"] = Json::array(
            {std::stoi(opt.grid.substr(0, x)), std::stoi(opt.grid.substr(x + 1))});
    }
    if (opt.tol > 0.0) cfg["tol"] = opt.tol;
    return cfg;
}

std::string out_path(const Options& opt, const std::string& name) {
    std::filesystem::create_directories(opt.out_dir);
    return (std::filesystem::path(opt.out_dir) / name).string();
}

using SubgroupPtr = std::unique_ptr<isosurf_subgroup, decltype(&isosurf_subgroup_free)>;
using CurvePtr = std::unique_ptr<isosurf_curve, decltype(&isosurf_curve_free)>;
using SurfacePtr = std::unique_ptr<isosurf_surface, decltype(&isosurf_surface_free)>;

SubgroupPtr make_subgroup(const Json& cfg) {
    if (!cfg.contains("subgroup")) {
        std::cerr << "isosurf: config needs a \"subgroup\" object\n";
        std::exit(2);
    }
    isosurf_subgroup* g = nullptr;
    check(isosurf_subgroup_from_json(cfg.at("subgroup").dump().c_str(), &g), "subgroup");
    return SubgroupPtr(g, isosurf_subgroup_free);
}

double eval_profile(const Json& spec, double s) {
    const std::string kind = spec.value("kind", "constant");
    std::vector<double> p;
    if (spec.contains("params")) p = spec.at("params").get<std::vector<double>>();
    if (kind == "constant") return p.at(0);
    if (kind == "poly") {
        double r = 0.0;
        for (auto it = p.rbegin(); it != p.rend(); ++it) r = r * s + *it;
        return r;
    }
    if (kind == "sin") return p.at(0) * std::sin(p.at(1) * s + (p.size() > 2 ? p[2] : 0.0));
    std::cerr << "isosurf: unknown profile kind " << kind << "\n";
    std::exit(2);
}

int cmd_classify(const Options& opt) {
    const Json cfg = load_config(opt);
    SubgroupPtr g = make_subgroup(cfg);
    int type = 0;
    char name[96];
    check(isosurf_subgroup_classify(g.get(), &type, name, sizeof(name)), "classify");
    const char* orbit = type == 1 ? "circle" : type == 2 ? "helix" : type == 3 ? "parabola" : "line";
    const bool ruled = type >= 4;
    std::cout << name << "; orbit: " << orbit << "; ruled: " << (ruled ? "yes" : "no") << "\n";
    const Json report{{"schema", "isosurf/1"}, {"command", "classify"}, {"type", type},
                      {"name", name},          {"orbit", orbit},        {"ruled", ruled}};
    std::cout << report.dump(2) << "\n";
    return 0;
}

int cmd_generate(const Options& opt) {
    Json cfg = load_config(opt);
    const std::string name = cfg.value("name", "surface");

    isosurf_mesh* mesh = nullptr;
    check(isosurf_mesh_generate(cfg.dump().c_str(), &mesh), "generate");
    std::unique_ptr<isosurf_mesh, decltype(&isosurf_mesh_free)> mp(mesh, isosurf_mesh_free);

    size_t nv = 0, nf = 0;
    isosurf_mesh_counts(mesh, &nv, &nf);

    const Json outputs = cfg.value("outputs", Json::object());
    const std::string obj = out_path(opt, outputs.value("obj", name + ".obj"));
    const std::string csv = out_path(opt, outputs.value("csv", name + ".csv"));
    check(isosurf_mesh_write_obj(mesh, obj.c_str()), "write obj");
    check(isosurf_mesh_write_csv(mesh, csv.c_str()), "write csv");

    char family[32] = "";
    {
        isosurf_curve* c = nullptr;
        check(isosurf_curve_from_json(cfg.at("curve").dump().c_str(), &c), "curve");
        CurvePtr cp(c, isosurf_curve_free);
        SubgroupPtr g = make_subgroup(cfg);
        isosurf_surface* s = nullptr;
        check(isosurf_surface_create(cp.get(), g.get(), &s), "surface");
        SurfacePtr sp(s, isosurf_surface_free);
        isosurf_surface_family(s, family, sizeof(family));
    }

    const Json report{{"schema", "isosurf/1"}, {"command", "generate"}, {"family", family},
                      {"vertices", nv},        {"faces", nf},           {"obj", obj},
                      {"csv", csv}};
    std::cout << report.dump(2) << "\n";
    if (outputs.contains("report")) {
        std::ofstream out(out_path(opt, outputs.at("report").get<std::string>()));
        out << report.dump(2) << "\n";
    }
    return 0;
}

int cmd_curvature(const Options& opt) {
    const Json cfg = load_config(opt);
    isosurf_curve* c = nullptr;
    check(isosurf_curve_from_json(cfg.at("curve").dump().c_str(), &c), "curve");
    CurvePtr cp(c, isosurf_curve_free);
    SubgroupPtr g = make_subgroup(cfg);
    isosurf_surface* s = nullptr;
    check(isosurf_surface_create(cp.get(), g.get(), &s), "surface");
    SurfacePtr sp(s, isosurf_surface_free);

    const auto& dom = cfg.at("domain");
    const double u0 = dom.at("u").at(0), u1 = dom.at("u").at(1);
    const double t0 = dom.at("t").at(0), t1 = dom.at("t").at(1);
    int nu = 16, nt = 4;
    if (cfg.contains("grid")) {
        nu = cfg.at("grid").at(0);
        nt = cfg.at("grid").at(1);
    }

    char family[32] = "";
    isosurf_surface_family(s, family, sizeof(family));
    Json records = Json::array();
    for (int i = 0; i < nu; ++i) {
        const double u = u0 + (u1 - u0) * i / std::max(1, nu - 1);
        double Kc = 0.0, Hc = 0.0;
        const bool closed_ok =
            isosurf_surface_curvature_closed(s, u, &Kc, &Hc) == ISOSURF_OK;
        for (int j = 0; j < nt; ++j) {
            const double t = t0 + (t1 - t0) * j / std::max(1, nt - 1);
            double K = 0.0, H = 0.0;
            check(isosurf_surface_curvature(s, u, t, &K, &H), "curvature");
            isosurf_forms F{};
            check(isosurf_surface_forms(s, u, t, &F), "forms");
            Json rec{{"u", u},
                     {"t", t},
                     {"K_numeric", K},
                     {"H_numeric", H},
                     {"det_g", F.g11 * F.g22 - F.g12 * F.g12}};
            rec["K_closed"] = closed_ok ? Json(Kc) : Json(nullptr);
            rec["H_closed"] = closed_ok ? Json(Hc) : Json(nullptr);
            records.push_back(std::move(rec));
        }
    }
    const Json report{{"schema", "isosurf/1"},
                      {"command", "curvature"},
                      {"family", family},
                      {"records", records}};
    std::cout << report.dump(2) << "\n";
    const Json outputs = cfg.value("outputs", Json::object());
    if (outputs.contains("report")) {
        std::ofstream out(out_path(opt, outputs.at("report").get<std::string>()));
        out << report.dump(2) << "\n";
    }
    return 0;
}

int cmd_solve(const Options& opt) {
    const Json cfg = load_config(opt);
    isosurf_curve* curve = nullptr;
    char* report_cstr = nullptr;
    check(isosurf_solve(cfg.dump().c_str(), &curve, &report_cstr), "solve");
    CurvePtr cp(curve, isosurf_curve_free);
    Json report = Json::parse(report_cstr);
    isosurf_string_free(report_cstr);

    const double lo = report.at("validity").at(0), hi = report.at("validity").at(1);
    const int samples = cfg.value("samples", 50);
    const Json outputs = cfg.value("outputs", Json::object());

    const std::string curve_csv = out_path(opt, outputs.value("curve_csv", "curve.csv"));
    {
        std::ofstream out(curve_csv);
        out << "s,x,y,z\n";
        char buf[160];
        for (int i = 0; i < samples; ++i) {
            const double s = lo + (hi - lo) * i / (samples - 1);
            double v[3];
            check(isosurf_curve_eval(curve, s, v, nullptr, nullptr), "curve eval");
            std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g,%.17g\n", s, v[0], v[1], v[2]);
            out << buf;
        }
    }
    report["curve_csv"] = curve_csv;

    if (cfg.value("roundtrip", false)) {
        // rebuild the surface with the matching subgroup and tabulate the error
        const Json p = cfg.value("params", Json::object());
        const std::string solver = cfg.at("solver").get<std::string>();
        const bool helicoidal = solver.find("helicoidal") != std::string::npos;
        const Json sub{{"signature", cfg.at("signature")},
                       {"phi", helicoidal ? p.value("phi", 1.0) : 0.0},
                       {"a", helicoidal ? 0.0 : p.value("a", 0.0)},
                       {"b", helicoidal ? 0.0 : p.value("b", 0.0)},
                       {"c", helicoidal ? p.value("c", 0.0) : 0.0},
                       {"c1", helicoidal ? 0.0 : p.value("c1", 0.0)},
                       {"c2", helicoidal ? 0.0 : p.value("c2", 0.0)}};
        isosurf_subgroup* g = nullptr;
        check(isosurf_subgroup_from_json(sub.dump().c_str(), &g), "subgroup");
        SubgroupPtr gp(g, isosurf_subgroup_free);
        isosurf_surface* s = nullptr;
        check(isosurf_surface_create(curve, g, &s), "surface");
        SurfacePtr sp(s, isosurf_surface_free);

        const bool is_K = solver.rfind("K_", 0) == 0;
        const double margin = 0.02 * (hi - lo);
        double max_err = 0.0;
        const std::string rt_csv = out_path(opt, outputs.value("roundtrip_csv", "roundtrip.csv"));
        std::ofstream out(rt_csv);
        out << "s,prescribed,recomputed,abs_err\n";
        char buf[160];
        for (int i = 0; i < samples; ++i) {
            const double sv = (lo + margin) + (hi - lo - 2 * margin) * i / (samples - 1);
            double K = 0.0, H = 0.0;
            check(isosurf_surface_curvature(s, sv, 0.25, &K, &H), "roundtrip curvature");
            const double want = eval_profile(cfg.at("profile"), sv);
            const double got = is_K ? K : H;
            max_err = std::max(max_err, std::abs(got - want));
            std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g,%.17g\n", sv, want, got,
                          std::abs(got - want));
            out << buf;
        }
        report["roundtrip"] =
            Json{{"max_abs_error", max_err}, {"tolerance", 1e-5}, {"csv", rt_csv},
                 {"pass", max_err <= 1e-5}};
    }

    std::cout << report.dump(2) << "\n";
    if (outputs.contains("report")) {
        std::ofstream out(out_path(opt, outputs.at("report").get<std::string>()));
        out << report.dump(2) << "\n";
    }
    return 0;
}

int cmd_verify(const Options& opt) {
    Json cfg = load_config(opt);
    char* summary = nullptr;
    const isosurf_status st = isosurf_verify(cfg.empty() ? nullptr : cfg.dump().c_str(), &summary);
    if (summary) {
        const Json report = Json::parse(summary);
        isosurf_string_free(summary);
        for (const auto& suite : report.at("suites"))
            std::cout << (suite.at("pass").get<bool>() ? "PASS " : "FAIL ")
                      << suite.at("name").get<std::string>() << "  max_error "
                      << suite.at("max_error").get<double>() << "  tolerance "
                      << suite.at("tolerance").get<double>() << "\n";
        std::cout << report.dump(2) << "\n";
        const Json outputs = cfg.value("outputs", Json::object());
        if (outputs.contains("report")) {
            std::ofstream out(out_path(opt, outputs.at("report").get<std::string>()));
            out << report.dump(2) << "\n";
        }
    }
    if (st != ISOSURF_OK && st != ISOSURF_ERR_VERIFY) bail(st, "verify");
    return st == ISOSURF_OK ? 0 : 4;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"invariant surfaces in simply and pseudo isotropic 3-space"};
    app.require_subcommand(1);

    Options opt;
    app.add_option("--config", opt.config_path, "JSON config file")->expected(1);
    app.add_option("--out", opt.out_dir, "output directory");
    app.add_option("--grid", opt.grid, "grid resolution NxM");
    app.add_option("--tol", opt.tol, "tolerance override");
    app.add_option("--set", opt.overrides, "config override key.path=value (repeatable)");

    auto* classify = app.add_subcommand("classify", "classify a 1-parameter subgroup");
    auto* generate = app.add_subcommand("generate", "sample a surface to OBJ/CSV");
    auto* curvature = app.add_subcommand("curvature", "per-sample curvature report");
    auto* solve = app.add_subcommand("solve", "prescribed curvature solvers");
    auto* verify = app.add_subcommand("verify", "run the verification suites");

    // global flags may come after the subcommand name too
    for (auto* sub : {classify, generate, curvature, solve, verify}) {
        sub->add_option("--config", opt.config_path)->expected(1);
        sub->add_option("--out", opt.out_dir);
        sub->add_option("--grid", opt.grid);
        sub->add_option("--tol", opt.tol);
        sub->add_option("--set", opt.overrides);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2; // usage problems are config errors
    }

    try {
        if (classify->parsed()) return cmd_classify(opt);
        if (generate->parsed()) return cmd_generate(opt);
        if (curvature->parsed()) return cmd_curvature(opt);
        if (solve->parsed()) return cmd_solve(opt);
        if (verify->parsed()) return cmd_verify(opt);
    } catch (const Json::exception& e) {
        std::cerr << "isosurf: config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "isosurf: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
