#ifndef ISOSURF_PRESCRIBED_HPP
#define ISOSURF_PRESCRIBED_HPP

#include <functional>
#include <optional>

#include "core/curve.hpp"
#include "core/iso_core.hpp"

namespace isosurf {

// Curvature profile s -> K(s) or H(s) on [s_min, s_max].  Constant profiles
// carry their value so the solvers can integrate them analytically (the
// quadrature is still run at a few points as a self-test).
struct CurvatureProfile {
    std::function<double(double)> f;
    double s_min = 0.0;
    double s_max = 1.0;
    std::optional<double> constant_value;

    static CurvatureProfile constant(double value, double s_min, double s_max);
    static CurvatureProfile poly(std::vector<double> coeffs, double s_min, double s_max);
    static CurvatureProfile sine(double amplitude, double omega, double s_min, double s_max,
                                 double phase = 0.0);
};

// Reconstructed generating curve (arc-length parameterized) plus the two
// integration constants and the sub-interval where every radicand and
// denominator stayed legal.
struct SolverOutput {
    GeneratingCurve curve;
    double c0 = 0.0; // k0 resp. h0
    double c1 = 0.0; // k1 resp. h1
    double valid_lo = 0.0;
    double valid_hi = 0.0;
    Signature sig = Signature::SimplyIsotropic;
    std::string cell; // e.g. "K_helicoidal_i"
};

// Prescribed Gaussian curvature, helicoidal surfaces of ni-type.  r^2(s) =
// x^2 +- y^2 is produced by the printed double quadrature; the representative
// curve is the polar (simply) or hyperbolic-polar (pseudo) unit-speed lift
// with theta(s_min) = 0.  eps is the causal sign of the reconstructed curve
// in the pseudo signature (ignored for the simply one).
SolverOutput solve_K_helicoidal_ni(const CurvatureProfile& K, double c, double phi, double k0,
                                   double k1, Signature sig, int eps = -1,
                                   double quad_tol = 1e-10);

// Prescribed Gaussian curvature, helicoidal surfaces of i-type; the curve is
// the graph (s,0,z(s)) (or (0,s,z(s)) on the pseudo timelike plane).
SolverOutput solve_K_helicoidal_i(const CurvatureProfile& K, double c, double phi, double k0,
                                  double k1, Signature sig, CurvePlane plane = CurvePlane::XZ,
                                  double quad_tol = 1e-10);

// Prescribed mean curvature, helicoidal i-type: z = h0 + h1 ln s + (eps) int.
SolverOutput solve_H_helicoidal_i(const CurvatureProfile& H, double h0, double h1, Signature sig,
                                  int eps = 1, double quad_tol = 1e-10);

// Prescribed Gaussian curvature, parabolic revolution i-type.
SolverOutput solve_K_parabolic_i(const CurvatureProfile& K, double a, double b, double c1,
                                 double c2, double k0, double k1, Signature sig,
                                 CurvePlane plane = CurvePlane::XZ, double quad_tol = 1e-10);

// Prescribed mean curvature, parabolic revolution i-type.
SolverOutput solve_H_parabolic_i(const CurvatureProfile& H, double a, double b, double c1,
                                 double c2, double h0, double h1, Signature sig,
                                 CurvePlane plane = CurvePlane::XZ, double quad_tol = 1e-10);

} // namespace isosurf

#endif
