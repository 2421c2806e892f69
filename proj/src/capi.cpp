// extern-C implementation of include/isosurf.h on top of the core library.

#include "isosurf.h"

#include <cstring>
#include <string>

#include "core/curvature.hpp"
#include "core/errors.hpp"
#include "core/json_io.hpp"
#include "core/mesh_io.hpp"
#include "core/prescribed.hpp"
#include "core/verify.hpp"

using namespace isosurf;

struct isosurf_subgroup {
    MotionSubgroup g;
};
struct isosurf_curve {
    GeneratingCurve c;
};
struct isosurf_surface {
    InvariantSurface s;
};
struct isosurf_mesh {
    MeshOutput m;
};

namespace {

thread_local std::string g_last_error;

isosurf_status status_of(Errc code) {
    switch (code) {
    case Errc::InvalidArgument:
    case Errc::NotOrthogonal: return ISOSURF_ERR_INVALID_ARG;
    case Errc::Config:
    case Errc::IncompatiblePlane: return ISOSURF_ERR_CONFIG;
    case Errc::NotAdmissible:
    case Errc::DomainError:
    case Errc::EmptyValidity:
    case Errc::DegenerateParameters:
    case Errc::ChartUnavailable: return ISOSURF_ERR_DOMAIN;
    case Errc::Unclassifiable: return ISOSURF_ERR_UNCLASSIFIABLE;
    case Errc::NoClosedForm: return ISOSURF_ERR_NO_CLOSED_FORM;
    case Errc::NoConvergence: return ISOSURF_ERR_NO_CONVERGENCE;
    case Errc::Io: return ISOSURF_ERR_IO;
    case Errc::VerifyFailed: return ISOSURF_ERR_VERIFY;
    }
    return ISOSURF_ERR_INTERNAL;
}

template <typename Fn> isosurf_status guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const Error& e) {
        g_last_error = e.what();
        return status_of(e.code());
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return ISOSURF_ERR_INTERNAL;
    } catch (...) {
        g_last_error = "unknown error";
        return ISOSURF_ERR_INTERNAL;
    }
}

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void copy_into(char* buf, size_t len, const std::string& s) {
    if (!buf || len == 0) return;
    const size_t n = std::min(len - 1, s.size());
    std::memcpy(buf, s.data(), n);
    buf[n] = '\0';
}

isosurf_status require(bool ok, const char* what) {
    if (ok) return ISOSURF_OK;
    g_last_error = what;
    return ISOSURF_ERR_INVALID_ARG;
}

} // namespace

extern "C" {

const char* isosurf_last_error(void) {
    return g_last_error.c_str();
}

void isosurf_string_free(char* s) {
    delete[] s;
}

isosurf_status isosurf_subgroup_from_json(const char* json, isosurf_subgroup** out) {
    if (require(json && out, "null argument") != ISOSURF_OK) return ISOSURF_ERR_INVALID_ARG;
    return guarded([&] {
        *out = new isosurf_subgroup{subgroup_from_json(parse_json(json))};
        return ISOSURF_OK;
    });
}

isosurf_status isosurf_subgroup_create(const char* signature, double phi, double a, double b,
                                       double c, double c1, double c2, isosurf_subgroup** out) {
    if (require(signature && out, "null argument") != ISOSURF_OK) return ISOSURF_ERR_INVALID_ARG;
    return guarded([&] {
        MotionSubgroup g{signature_from_name(signature), phi, a, b, c, c1, c2};
        *out = new isosurf_subgroup{g};
        return ISOSURF_OK;
    });
}

void isosurf_subgroup_free(isosurf_subgroup* g) {
    delete g;
}

isosurf_status isosurf_subgroup_matrix(const isosurf_subgroup* g, double t, double out[16]) {
    if (require(g && out, "null argument") != ISOSURF_OK) return ISOSURF_ERR_INVALID_ARG;
    return guarded([&] {
        const Mat4 m = evaluate(g->g, t).m;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) out[4 * i + j] = m.m[i][j];
        return ISOSURF_OK;
    });
}

isosurf_status isosurf_subgroup_classify(const isosurf_subgroup* g, int* type, char* name_buf,
                                         size_t buf_len) {
    if (require(g && type, "null argument") != ISOSURF_OK) return ISOSURF_ERR_INVALID_ARG;
    return guarded([&] {
        const MotionType t = classify(g->g);
        *type = static_cast<int>(t);
        copy_into(name_buf, buf_len, motion_type_name(t));
        return ISOSURF_OK;
    });
}

isosurf_status isosurf_subgroup_apply(const isosurf_subgroup* g, double t, const double p[3],
                                      double out[3]) {
    if (require(g && p && out, "null argument") != ISOSURF_OK) return ISOSURF_ERR_INVALID_ARG;
    return guarded([&] {
        const Vec3 v = apply(evaluate(g->g, t), Vec3{p[0], p[1], p[2]});
        out[0] = v.x;
        out[1] = v.y;
        out[2] = v.z;
        return ISOSURF_OK;
    });
}

isosurf_status isosurf_subgroup_to_json(const isosurf_subgroup* g, char** out_json) {
    if (require(g && out_json, "null argument") != ISOSURF_OK) return ISOSURF_ERR_INVALID_ARG;
    return guarded([&] {
        *out_json = dup_string(subgroup_to_json(g->g).dump());
        return ISOSURF_OK;
    });
}

isosurf_status isosurf_curve_from_json(const char* json, isosurf_curve** out) {
    if (require(json && out, "null argument") != ISOSURF_OK) return ISOSURF_ERR_INVALID_ARG;
    return guarded([&] {
        *out = new isosurf_curve{curve_from_json(parse_json(json))};
        return ISOSURF_OK;
    });
}

void isosurf_curve_free(isosurf_curve* c) {
    delete c;
}

isosurf_status isosurf_curve_eval(const isosurf_curve* c, double u, double value[3], double d1[3],
                                  double d2[3]) {
    if (require(c && value, "null argument") != ISOSURF_OK) return ISOSURF_ERR_INVALID_ARG;
    return guarded([&] {
        const Vec3 v = c->c.value(u);
        value[0] = v.x;
        value[1] = v.y;
        value[2] = v.z;
        if (d1) {
            const Vec3 w = c->c.d1(u);
            d1[0] = w.x;
            d1[1] = w.y;
            d1[2] = w.z;
        }
        if (d2) {
            const Vec3 w = c->c.d2(u);
            d2[0] = w.x;
            d2[1] = w.y;
            d2[2] = w.z;
        }
        return ISOSURF_OK;
    });
}

isosurf_status isosurf_surface_create(const isosurf_curve* curve, const isosurf_subgroup* group,
                                      isosurf_surface** out) {
    if (require(curve && group && out, "null argument") != ISOSURF_OK)
        return ISOSURF_ERR_INVALID_ARG;
    return guarded([&] {
        *out = new isosurf_surface{InvariantSurface(curve->c, group->g)};
        return ISOSURF_OK;
    });
}

void isosurf_surface_free(isosurf_surface* s) {
    delete s;
}

isosurf_status isosurf_surface_family(const isosurf_surface* s, char* buf, size_t buf_len) {
    if (require(s && buf, "null argument") != ISOSURF_OK) return ISOSURF_ERR_INVALID_ARG;
    copy_into(buf, buf_len, s->s.family().label());
    return ISOSURF_OK;
}

isosurf_status isosurf_surface_eval(const isosurf_surface* s, double u, double t, double out[3]) {
    if (require(s && out, "null argument") != ISOSURF_OK) return ISOSURF_ERR_INVALID_ARG;
    return guarded([&] {
        const Vec3 v = s->s.value(u, t);
        out[0] = v.x;
        out[1] = v.y;
        out[2] = v.z;
        return ISOSURF_OK;
    });
}

isosurf_status isosurf_surface_is_ruled(const isosurf_surface* s, int* ruled) {
    if (require(s && ruled, "null argument") != ISOSURF_OK) return ISOSURF_ERR_INVALID_ARG;
    return guarded([&] {
        *ruled = is_ruled(s->s) ? 1 : 0;
        return ISOSURF_OK;
    });
}

isosurf_status isosurf_surface_admissibility(const isosurf_surface* s, double u0, double u1,
                                             double t0, double t1, int nu, int nt,
                                             isosurf_admissibility_report* out) {
    if (require(s && out, "null argument") != ISOSURF_OK) return ISOSURF_ERR_INVALID_ARG;
    return guarded([&] {
        const AdmissibilityReport rep = admissibility(s->s, Rect{u0, u1, t0, t1}, nu, nt);
        out->admissible = rep.admissible ? 1 : 0;
        out->det_g_min = rep.det_g_min;
        out->witness_u = rep.witness_u;
        out->witness_t = rep.witness_t;
        copy_into(out->obstruction, sizeof(out->obstruction),
                  rep.obstruction ? *rep.obstruction : std::string());
        return ISOSURF_OK;
    });
}

isosurf_status isosurf_surface_forms(const isosurf_surface* s, double u, double t,
                                     isosurf_forms* out) {
    if (require(s && out, "null argument") != ISOSURF_OK) return ISOSURF_ERR_INVALID_ARG;
    return guarded([&] {
        const FundamentalForms F = fundamental_forms(s->s, u, t);
        *out = isosurf_forms{F.g11, F.g12, F.g22, F.h11, F.h12, F.h22,
                             F.X12, F.X13, F.X23, F.X31};
        return ISOSURF_OK;
    });
}

isosurf_status isosurf_surface_gauss_map(const isosurf_surface* s, double u, double t,
                                         double out[3]) {
    if (require(s && out, "null argument") != ISOSURF_OK) return ISOSURF_ERR_INVALID_ARG;
    return guarded([&] {
        const Vec3 xi = gauss_map(s->s, u, t);
        out[0] = xi.x;
        out[1] = xi.y;
        out[2] = xi.z;
        return ISOSURF_OK;
    });
}

isosurf_status isosurf_surface_curvature(const isosurf_surface* s, double u, double t, double* K,
                                         double* H) {
    if (require(s && K && H, "null argument") != ISOSURF_OK) return ISOSURF_ERR_INVALID_ARG;
    return guarded([&] {
        const CurvaturePair p = curvatures_numeric(s->s, u, t);
        *K = p.K;
        *H = p.H;
        return ISOSURF_OK;
    });
}

isosurf_status isosurf_surface_curvature_closed(const isosurf_surface* s, double u, double* K,
                                                double* H) {
    if (require(s && K && H, "null argument") != ISOSURF_OK) return ISOSURF_ERR_INVALID_ARG;
    return guarded([&] {
        const CurvaturePair p = curvatures_closed_form(s->s, u);
        *K = p.K;
        *H = p.H;
        return ISOSURF_OK;
    });
}

isosurf_status isosurf_solve(const char* config_json, isosurf_curve** out_curve,
                             char** out_report_json) {
    if (require(config_json && out_curve, "null argument") != ISOSURF_OK)
        return ISOSURF_ERR_INVALID_ARG;
    return guarded([&] {
        const SolveConfig cfg = solve_config_from_json(parse_json(config_json));
        const CurvatureProfile prof = profile_from_json(cfg.profile_spec, cfg.s_min, cfg.s_max);
        SolverOutput out = [&] {
            if (cfg.solver == "K_helicoidal_ni")
                return solve_K_helicoidal_ni(prof, cfg.c, cfg.phi, cfg.c0, cfg.c1, cfg.sig,
                                             cfg.eps, cfg.quad_tol);
            if (cfg.solver == "K_helicoidal_i")
                return solve_K_helicoidal_i(prof, cfg.c, cfg.phi, cfg.c0, cfg.c1, cfg.sig,
                                            cfg.plane, cfg.quad_tol);
            if (cfg.solver == "H_helicoidal_i")
                return solve_H_helicoidal_i(prof, cfg.c0, cfg.c1, cfg.sig, cfg.eps, cfg.quad_tol);
            if (cfg.solver == "K_parabolic_i")
                return solve_K_parabolic_i(prof, cfg.a, cfg.b, cfg.cc1, cfg.cc2, cfg.c0, cfg.c1,
                                           cfg.sig, cfg.plane, cfg.quad_tol);
            if (cfg.solver == "H_parabolic_i")
                return solve_H_parabolic_i(prof, cfg.a, cfg.b, cfg.cc1, cfg.cc2, cfg.c0, cfg.c1,
                                           cfg.sig, cfg.plane, cfg.quad_tol);
            fail(Errc::Config, "unknown solver \"" + cfg.solver + "\"");
        }();
        if (out_report_json) {
            Json samples = Json::array();
            for (int i = 0; i <= 16; ++i) {
                const double s = out.valid_lo + (out.valid_hi - out.valid_lo) * i / 16.0;
                const Vec3 v = out.curve.value(s);
                samples.push_back(Json{{"s", s}, {"x", v.x}, {"y", v.y}, {"z", v.z}});
            }
            const Json rep{{"schema", kSchemaTag},
                           {"command", "solve"},
                           {"solver", out.cell},
                           {"signature", signature_name(out.sig)},
                           {"constants", Json{{"c0", out.c0}, {"c1", out.c1}}},
                           {"validity", Json::array({out.valid_lo, out.valid_hi})},
                           {"samples", samples}};
            *out_report_json = dup_string(rep.dump(2));
        }
        *out_curve = new isosurf_curve{std::move(out.curve)};
        return ISOSURF_OK;
    });
}

isosurf_status isosurf_mesh_generate(const char* config_json, isosurf_mesh** out) {
    if (require(config_json && out, "null argument") != ISOSURF_OK) return ISOSURF_ERR_INVALID_ARG;
    return guarded([&] {
        *out = new isosurf_mesh{generate_mesh(generate_config_from_json(parse_json(config_json)))};
        return ISOSURF_OK;
    });
}

void isosurf_mesh_free(isosurf_mesh* m) {
    delete m;
}

isosurf_status isosurf_mesh_counts(const isosurf_mesh* m, size_t* n_vertices, size_t* n_faces) {
    if (require(m && n_vertices && n_faces, "null argument") != ISOSURF_OK)
        return ISOSURF_ERR_INVALID_ARG;
    *n_vertices = m->m.vertices.size();
    *n_faces = m->m.faces.size();
    return ISOSURF_OK;
}

isosurf_status isosurf_mesh_write_obj(const isosurf_mesh* m, const char* path) {
    if (require(m && path, "null argument") != ISOSURF_OK) return ISOSURF_ERR_INVALID_ARG;
    return guarded([&] {
        write_obj(m->m, path);
        return ISOSURF_OK;
    });
}

isosurf_status isosurf_mesh_write_csv(const isosurf_mesh* m, const char* path) {
    if (require(m && path, "null argument") != ISOSURF_OK) return ISOSURF_ERR_INVALID_ARG;
    return guarded([&] {
        write_csv(m->m, path);
        return ISOSURF_OK;
    });
}

isosurf_status isosurf_verify(const char* config_json, char** out_summary_json) {
    return guarded([&] {
        std::uint64_t seed = 20250809;
        if (config_json) {
            const Json j = parse_json(config_json);
            if (j.contains("seed")) seed = j.at("seed").get<std::uint64_t>();
        }
        const auto suites = run_all_suites(seed);
        const Json summary = suites_to_json(suites, seed);
        if (out_summary_json) *out_summary_json = dup_string(summary.dump(2));
        for (const SuiteResult& s : suites)
            if (!s.pass) {
                g_last_error = "verification suite failed: " + s.name;
                return ISOSURF_ERR_VERIFY;
            }
        return ISOSURF_OK;
    });
}

} // extern "C"
