#ifndef ISOSURF_CURVATURE_HPP
#define ISOSURF_CURVATURE_HPP

#include "core/surface.hpp"

namespace isosurf {

// Coefficients of the two fundamental forms plus the 2x2 Jacobian minors
// X_ij = det of columns (i,j) of the (du, dt) derivative matrix.  g comes
// from the degenerate inner product of tangents; h from pairing the relative
// normal N_h = (X23/X12, X31/X12, 1) (simply) resp. (X23/X12, X13/X12, 1)
// (pseudo) with the second partials under the ambient product.
struct FundamentalForms {
    double g11 = 0, g12 = 0, g22 = 0;
    double h11 = 0, h12 = 0, h22 = 0;
    double X12 = 0, X13 = 0, X23 = 0, X31 = 0;

    double det_g() const { return g11 * g22 - g12 * g12; }
};

struct CurvaturePair {
    double K = 0.0;
    double H = 0.0;
};

// Throws NotAdmissible when |X12| <= 1e-10 * scale^2 (scale from the
// top-view tangent magnitudes).
FundamentalForms fundamental_forms(const SurfaceMap& s, double u, double t);

// Relative normal at (u,t).
Vec3 relative_normal(const SurfaceMap& s, double u, double t);

// Image point of the Gauss map on the unit sphere of parabolic type:
// same top view as N_h, z-component fixed so the image lies on the quadric.
Vec3 gauss_map(const SurfaceMap& s, double u, double t);

// K = det II / det I, H = (g11 h22 - 2 g12 h12 + g22 h11) / (2 det I).
CurvaturePair curvatures_numeric(const SurfaceMap& s, double u, double t);

// Per-family closed forms (t-independent); helicoidal families I/II and the
// limit families III/IV/VI on both planes and both signatures.  Throws
// NoClosedForm for families V, VII and the general family 8.
CurvaturePair curvatures_closed_form(const InvariantSurface& s, double u);

// Intrinsic (Brioschi) curvature of the induced metric, from five-point
// central differences of g_ij with step h = 1e-4 * max(1,|u|,|t|) unless
// overridden.  Vanishes on admissible surfaces: they are all flat.
double brioschi_curvature(const SurfaceMap& s, double u, double t, double step = 0.0);

} // namespace isosurf

#endif
