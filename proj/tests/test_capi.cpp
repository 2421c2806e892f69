// C API smoke tests; links the shared library like an external client.
#include "isosurf.h"

#include <cmath>
#include <cstdio>
#include <cstring>
#include <string>

static int failures = 0;

#define EXPECT(cond)                                                                              \
    do {                                                                                          \
        if (!(cond)) {                                                                            \
            std::fprintf(stderr, "FAIL %s:%d: %s\n", __FILE__, __LINE__, #cond);                  \
            ++failures;                                                                           \
        }                                                                                         \
    } while (0)

int main() {
    // subgroup lifecycle + evaluation
    isosurf_subgroup* g = nullptr;
    EXPECT(isosurf_subgroup_from_json(
               R"({"signature":"simply","phi":1.0,"a":0,"b":0,"c":1.0,"c1":0,"c2":0})", &g) ==
           ISOSURF_OK);
    double m[16];
    EXPECT(isosurf_subgroup_matrix(g, 0.0, m) == ISOSURF_OK);
    EXPECT(m[0] == 1.0 && m[5] == 1.0 && m[10] == 1.0 && m[15] == 1.0);
    int type = 0;
    char name[64];
    EXPECT(isosurf_subgroup_classify(g, &type, name, sizeof(name)) == ISOSURF_OK);
    EXPECT(type == 2);
    EXPECT(std::strstr(name, "helicoidal") != nullptr);
    double p[3] = {1, 0, 0}, q[3];
    EXPECT(isosurf_subgroup_apply(g, 3.141592653589793 / 2, p, q) == ISOSURF_OK);
    EXPECT(std::abs(q[0]) < 1e-12 && std::abs(q[1] - 1.0) < 1e-12);
    char* json = nullptr;
    EXPECT(isosurf_subgroup_to_json(g, &json) == ISOSURF_OK);
    EXPECT(std::strstr(json, "\"phi\"") != nullptr);
    isosurf_string_free(json);

    // malformed specs report config errors with a message
    isosurf_subgroup* bad = nullptr;
    EXPECT(isosurf_subgroup_from_json("{\"signature\":\"weird\"}", &bad) == ISOSURF_ERR_CONFIG);
    EXPECT(std::strlen(isosurf_last_error()) > 0);

    // curve + surface + curvature
    isosurf_curve* c = nullptr;
    EXPECT(isosurf_curve_from_json(R"({"plane":"xz","kind":"line","params":[0,0,1,0]})", &c) ==
           ISOSURF_OK);
    double v[3], d1[3], d2[3];
    EXPECT(isosurf_curve_eval(c, 2.0, v, d1, d2) == ISOSURF_OK);
    EXPECT(v[0] == 2.0 && d1[0] == 1.0 && d2[0] == 0.0);

    isosurf_surface* s = nullptr;
    EXPECT(isosurf_surface_create(c, g, &s) == ISOSURF_OK);
    char fam[16];
    EXPECT(isosurf_surface_family(s, fam, sizeof(fam)) == ISOSURF_OK);
    EXPECT(std::strcmp(fam, "Z2") == 0);
    int ruled = -1;
    EXPECT(isosurf_surface_is_ruled(s, &ruled) == ISOSURF_OK);
    EXPECT(ruled == 0);
    double K = 0, H = 0;
    EXPECT(isosurf_surface_curvature(s, 1.0, 0.5, &K, &H) == ISOSURF_OK);
    EXPECT(std::abs(K + 1.0) < 1e-10 && std::abs(H) < 1e-10);
    EXPECT(isosurf_surface_curvature_closed(s, 1.0, &K, &H) == ISOSURF_OK);
    EXPECT(std::abs(K + 1.0) < 1e-12);
    isosurf_forms F;
    EXPECT(isosurf_surface_forms(s, 1.0, 0.5, &F) == ISOSURF_OK);
    EXPECT(std::abs(F.h12 + 1.0) < 1e-12);
    double xi[3];
    EXPECT(isosurf_surface_gauss_map(s, 1.0, 0.5, xi) == ISOSURF_OK);
    EXPECT(std::abs(xi[2] - 0.5 * (1.0 - xi[0] * xi[0] - xi[1] * xi[1])) < 1e-12);

    isosurf_admissibility_report rep;
    EXPECT(isosurf_surface_admissibility(s, 1.0, 2.0, 0.0, 1.0, 16, 16, &rep) == ISOSURF_OK);
    EXPECT(rep.admissible == 1);

    // admissibility failure carries the obstruction name
    isosurf_curve* iso_line = nullptr;
    EXPECT(isosurf_curve_from_json(R"({"plane":"xz","kind":"line","params":[2,0,0,1]})",
                                   &iso_line) == ISOSURF_OK);
    isosurf_surface* cyl = nullptr;
    EXPECT(isosurf_surface_create(iso_line, g, &cyl) == ISOSURF_OK);
    EXPECT(isosurf_surface_admissibility(cyl, 0.0, 1.0, 0.0, 1.0, 16, 16, &rep) == ISOSURF_OK);
    EXPECT(rep.admissible == 0);
    EXPECT(std::strcmp(rep.obstruction, "isotropic line") == 0);
    EXPECT(isosurf_surface_curvature(cyl, 0.5, 0.5, &K, &H) == ISOSURF_ERR_DOMAIN);

    // solver entry point
    isosurf_curve* sol = nullptr;
    char* report = nullptr;
    const char* cfg = R"({
      "solver": "H_helicoidal_i", "signature": "simply",
      "profile": {"kind": "constant", "params": [0.0]},
      "constants": {"h0": 0.1, "h1": 0.5},
      "domain": [1.0, 2.0]
    })";
    EXPECT(isosurf_solve(cfg, &sol, &report) == ISOSURF_OK);
    EXPECT(std::strstr(report, "\"validity\"") != nullptr);
    EXPECT(isosurf_curve_eval(sol, 1.5, v, nullptr, nullptr) == ISOSURF_OK);
    EXPECT(std::abs(v[2] - (0.1 + 0.5 * std::log(1.5))) < 1e-10);
    isosurf_string_free(report);

    // mesh generation via JSON config
    isosurf_mesh* mesh = nullptr;
    const char* gen = R"({
      "name": "m",
      "subgroup": {"signature":"simply","phi":1.0,"c":1.0},
      "curve": {"plane":"xz","kind":"line","params":[0,0,1,0]},
      "domain": {"u":[0.5,2.0],"t":[0.0,3.0]},
      "grid": [4,4]
    })";
    EXPECT(isosurf_mesh_generate(gen, &mesh) == ISOSURF_OK);
    size_t nv = 0, nf = 0;
    EXPECT(isosurf_mesh_counts(mesh, &nv, &nf) == ISOSURF_OK);
    EXPECT(nv == 16 && nf == 9);

    // null-argument guard
    EXPECT(isosurf_subgroup_matrix(nullptr, 0.0, m) == ISOSURF_ERR_INVALID_ARG);

    // verification entry point
    char* summary = nullptr;
    EXPECT(isosurf_verify("{\"seed\": 7}", &summary) == ISOSURF_OK);
    EXPECT(summary && std::strstr(summary, "\"pass\": true") != nullptr);
    isosurf_string_free(summary);

    isosurf_mesh_free(mesh);
    isosurf_curve_free(sol);
    isosurf_surface_free(cyl);
    isosurf_curve_free(iso_line);
    isosurf_surface_free(s);
    isosurf_curve_free(c);
    isosurf_subgroup_free(g);

    if (failures == 0) std::printf("test_capi: all checks passed\n");
    return failures == 0 ? 0 : 1;
}
