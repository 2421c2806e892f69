/* isosurf — invariant surfaces in simply and pseudo isotropic 3-space.
 *
 * C interface to the isosurf engine: 1-parameter subgroups of isotropic
 * rigid motions, the surfaces they sweep, their curvatures, and the
 * prescribed-curvature solvers.  All functions return isosurf_status;
 * on failure isosurf_last_error() holds a thread-local message.
 *
 * JSON specs (subgroup / curve / profile / job configs) follow the
 * "isosurf/1" schema documented in the project README.
 */
#ifndef ISOSURF_H
#define ISOSURF_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum isosurf_status {
    ISOSURF_OK = 0,
    ISOSURF_ERR_INVALID_ARG = 1,
    ISOSURF_ERR_CONFIG = 2,        /* malformed spec / bad parameters */
    ISOSURF_ERR_DOMAIN = 3,        /* admissibility or validity failure */
    ISOSURF_ERR_VERIFY = 4,        /* a verification suite failed */
    ISOSURF_ERR_UNCLASSIFIABLE = 5,
    ISOSURF_ERR_NO_CLOSED_FORM = 6,
    ISOSURF_ERR_NO_CONVERGENCE = 7,
    ISOSURF_ERR_IO = 8,
    ISOSURF_ERR_INTERNAL = 9
} isosurf_status;

typedef struct isosurf_subgroup isosurf_subgroup;
typedef struct isosurf_curve isosurf_curve;
typedef struct isosurf_surface isosurf_surface;
typedef struct isosurf_mesh isosurf_mesh;

/* Last error message for the calling thread; never NULL. */
const char* isosurf_last_error(void);

/* Frees strings returned through char** out-parameters. */
void isosurf_string_free(char* s);

/* ---- 1-parameter subgroups -------------------------------------------- */

/* spec: {"signature":"simply"|"pseudo","phi":..,"a":..,"b":..,"c":..,
 *        "c1":..,"c2":..} */
isosurf_status isosurf_subgroup_from_json(const char* json, isosurf_subgroup** out);
isosurf_status isosurf_subgroup_create(const char* signature, double phi, double a, double b,
                                       double c, double c1, double c2, isosurf_subgroup** out);
void isosurf_subgroup_free(isosurf_subgroup* g);

/* psi_t as a row-major 4x4 matrix. */
isosurf_status isosurf_subgroup_matrix(const isosurf_subgroup* g, double t, double out[16]);
/* type: 1..7 (I..VII); name_buf receives e.g. "II helicoidal". */
isosurf_status isosurf_subgroup_classify(const isosurf_subgroup* g, int* type, char* name_buf,
                                         size_t buf_len);
isosurf_status isosurf_subgroup_apply(const isosurf_subgroup* g, double t, const double p[3],
                                      double out[3]);
isosurf_status isosurf_subgroup_to_json(const isosurf_subgroup* g, char** out_json);

/* ---- generating curves ------------------------------------------------- */

/* spec: {"plane":"xy"|"xz"|"yz","kind":"line"|"circle"|"hyperbola"|
 *        "parabola"|"graph","params":[...]} */
isosurf_status isosurf_curve_from_json(const char* json, isosurf_curve** out);
void isosurf_curve_free(isosurf_curve* c);
/* value, first and second derivative at u; d1/d2 may be NULL. */
isosurf_status isosurf_curve_eval(const isosurf_curve* c, double u, double value[3], double d1[3],
                                  double d2[3]);

/* ---- invariant surfaces ------------------------------------------------ */

isosurf_status isosurf_surface_create(const isosurf_curve* curve, const isosurf_subgroup* group,
                                      isosurf_surface** out);
void isosurf_surface_free(isosurf_surface* s);
/* family label, e.g. "Z2", "Yh3", "Wh6". */
isosurf_status isosurf_surface_family(const isosurf_surface* s, char* buf, size_t buf_len);
isosurf_status isosurf_surface_eval(const isosurf_surface* s, double u, double t, double out[3]);
isosurf_status isosurf_surface_is_ruled(const isosurf_surface* s, int* ruled);

typedef struct isosurf_admissibility_report {
    int admissible;
    double det_g_min;
    double witness_u, witness_t;
    char obstruction[160]; /* empty when none recognized */
} isosurf_admissibility_report;

isosurf_status isosurf_surface_admissibility(const isosurf_surface* s, double u0, double u1,
                                             double t0, double t1, int nu, int nt,
                                             isosurf_admissibility_report* out);

typedef struct isosurf_forms {
    double g11, g12, g22;
    double h11, h12, h22;
    double x12, x13, x23, x31;
} isosurf_forms;

isosurf_status isosurf_surface_forms(const isosurf_surface* s, double u, double t,
                                     isosurf_forms* out);
isosurf_status isosurf_surface_gauss_map(const isosurf_surface* s, double u, double t,
                                         double out[3]);
/* Numeric route (general machinery). */
isosurf_status isosurf_surface_curvature(const isosurf_surface* s, double u, double t, double* K,
                                         double* H);
/* Printed per-family closed form; t-independent. */
isosurf_status isosurf_surface_curvature_closed(const isosurf_surface* s, double u, double* K,
                                                double* H);

/* ---- prescribed-curvature solvers -------------------------------------- */

/* config: {"solver":"K_helicoidal_ni"|"K_helicoidal_i"|"H_helicoidal_i"|
 *          "K_parabolic_i"|"H_parabolic_i", "signature":..., "plane":...,
 *          "eps":..., "profile":{...}, "constants":{...}, "params":{...},
 *          "domain":[s_min,s_max], ...}
 * On success *out_curve is the reconstructed generating curve and
 * *out_report_json a JSON report (constants, validity interval, samples). */
isosurf_status isosurf_solve(const char* config_json, isosurf_curve** out_curve,
                             char** out_report_json);

/* ---- meshes ------------------------------------------------------------ */

isosurf_status isosurf_mesh_generate(const char* config_json, isosurf_mesh** out);
void isosurf_mesh_free(isosurf_mesh* m);
isosurf_status isosurf_mesh_counts(const isosurf_mesh* m, size_t* n_vertices, size_t* n_faces);
isosurf_status isosurf_mesh_write_obj(const isosurf_mesh* m, const char* path);
isosurf_status isosurf_mesh_write_csv(const isosurf_mesh* m, const char* path);

/* ---- verification ------------------------------------------------------ */

/* config (optional, may be NULL): {"seed": <integer>}.  Always produces the
 * JSON summary; returns ISOSURF_ERR_VERIFY when any suite fails. */
isosurf_status isosurf_verify(const char* config_json, char** out_summary_json);

#ifdef __cplusplus
}
#endif

#endif /* ISOSURF_H */
