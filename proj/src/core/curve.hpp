#ifndef ISOSURF_CURVE_HPP
#define ISOSURF_CURVE_HPP

#include <functional>
#include <string>
#include <vector>

#include "core/iso_core.hpp"

namespace isosurf {

// Plane carrying the generating curve: XY is the non-isotropic choice
// (ni-type surfaces); XZ and YZ are isotropic planes (i-type).  YZ is only
// meaningful in the pseudo-isotropic signature (timelike branch).
enum class CurvePlane { XY, XZ, YZ };

std::string curve_plane_name(CurvePlane p);
CurvePlane curve_plane_from_name(const std::string& name);

// Scalar coordinate function with optional analytic derivatives; missing
// derivatives fall back to central differences with
// h = cbrt(machine eps) * max(1, |u|).
struct ScalarFn {
    std::function<double(double)> value;
    std::function<double(double)> d1; // may be empty
    std::function<double(double)> d2; // may be empty
};

// Planar C^2 curve given by its two active coordinates f, g:
//   XY: u -> (f(u), g(u), 0)
//   XZ: u -> (f(u), 0, g(u))
//   YZ: u -> (0, f(u), g(u))
class GeneratingCurve {
public:
    GeneratingCurve(CurvePlane plane, ScalarFn f, ScalarFn g, std::string kind = "custom");

    CurvePlane plane() const { return plane_; }
    const std::string& kind() const { return kind_; }

    double f(double u) const { return f_.value(u); }
    double fp(double u) const { return eval_d1(f_, u); }
    double fpp(double u) const { return eval_d2(f_, u); }
    double g(double u) const { return g_.value(u); }
    double gp(double u) const { return eval_d1(g_, u); }
    double gpp(double u) const { return eval_d2(g_, u); }

    Vec3 value(double u) const { return embed(f(u), g(u)); }
    Vec3 d1(double u) const { return embed(fp(u), gp(u)); }
    Vec3 d2(double u) const { return embed(fpp(u), gpp(u)); }

    static GeneratingCurve line(CurvePlane plane, double p0, double p1, double d0, double d1);
    static GeneratingCurve circle(CurvePlane plane, double radius, double cx = 0.0,
                                  double cy = 0.0);
    static GeneratingCurve hyperbola(CurvePlane plane, double radius, double cx = 0.0,
                                     double cy = 0.0);
    // Isotropic circle (p u, p u^2 / 2), the parabola sweeping the spheres.
    static GeneratingCurve parabola(CurvePlane plane, double p);
    // Graph (u, poly(u)) with coefficients low degree first.
    static GeneratingCurve graph(CurvePlane plane, std::vector<double> coeffs);

private:
    Vec3 embed(double fv, double gv) const;
    static double eval_d1(const ScalarFn& fn, double u);
    static double eval_d2(const ScalarFn& fn, double u);

    CurvePlane plane_;
    ScalarFn f_, g_;
    std::string kind_;
};

} // namespace isosurf

#endif
