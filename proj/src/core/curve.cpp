#include "core/curve.hpp"

#include <cmath>
#include <limits>
#include <utility>

#include "core/errors.hpp"

namespace isosurf {

std::string curve_plane_name(CurvePlane p) {
    switch (p) {
    case CurvePlane::XY: return "xy";
    case CurvePlane::XZ: return "xz";
    default: return "yz";
    }
}

CurvePlane curve_plane_from_name(const std::string& name) {
    if (name == "xy") return CurvePlane::XY;
    if (name == "xz") return CurvePlane::XZ;
    if (name == "yz") return CurvePlane::YZ;
    fail(Errc::Config, "unknown curve plane '" + name + "' (expected xy, xz or yz)");
}

GeneratingCurve::GeneratingCurve(CurvePlane plane, ScalarFn f, ScalarFn g, std::string kind)
    : plane_(plane), f_(std::move(f)), g_(std::move(g)), kind_(std::move(kind)) {
    if (!f_.value || !g_.value) fail(Errc::InvalidArgument, "curve coordinate functions unset");
}

Vec3 GeneratingCurve::embed(double fv, double gv) const {
    switch (plane_) {
    case CurvePlane::XY: return {fv, gv, 0.0};
    case CurvePlane::XZ: return {fv, 0.0, gv};
    default: return {0.0, fv, gv};
    }
}

namespace {
double fd_step(double u) {
    static const double h0 = std::cbrt(std::numeric_limits<double>::epsilon());
    return h0 * std::max(1.0, std::abs(u));
}
} // namespace

double GeneratingCurve::eval_d1(const ScalarFn& fn, double u) {
    if (fn.d1) return fn.d1(u);
    const double h = fd_step(u);
    return (fn.value(u + h) - fn.value(u - h)) / (2.0 * h);
}

double GeneratingCurve::eval_d2(const ScalarFn& fn, double u) {
    if (fn.d2) return fn.d2(u);
    const double h = fd_step(u);
    return (fn.value(u + h) - 2.0 * fn.value(u) + fn.value(u - h)) / (h * h);
}

GeneratingCurve GeneratingCurve::line(CurvePlane plane, double p0, double p1, double d0,
                                      double d1) {
    ScalarFn f{[=](double u) { return p0 + d0 * u; }, [=](double) { return d0; },
               [](double) { return 0.0; }};
    ScalarFn g{[=](double u) { return p1 + d1 * u; }, [=](double) { return d1; },
               [](double) { return 0.0; }};
    return {plane, f, g, "line"};
}

GeneratingCurve GeneratingCurve::circle(CurvePlane plane, double radius, double cx, double cy) {
    ScalarFn f{[=](double u) { return cx + radius * std::cos(u); },
               [=](double u) { return -radius * std::sin(u); },
               [=](double u) { return -radius * std::cos(u); }};
    ScalarFn g{[=](double u) { return cy + radius * std::sin(u); },
               [=](double u) { return radius * std::cos(u); },
               [=](double u) { return -radius * std::sin(u); }};
    return {plane, f, g, "circle"};
}

GeneratingCurve GeneratingCurve::hyperbola(CurvePlane plane, double radius, double cx,
                                           double cy) {
    ScalarFn f{[=](double u) { return cx + radius * std::cosh(u); },
               [=](double u) { return radius * std::sinh(u); },
               [=](double u) { return radius * std::cosh(u); }};
    ScalarFn g{[=](double u) { return cy + radius * std::sinh(u); },
               [=](double u) { return radius * std::cosh(u); },
               [=](double u) { return radius * std::sinh(u); }};
    return {plane, f, g, "hyperbola"};
}

GeneratingCurve GeneratingCurve::parabola(CurvePlane plane, double p) {
    ScalarFn f{[=](double u) { return p * u; }, [=](double) { return p; },
               [](double) { return 0.0; }};
    ScalarFn g{[=](double u) { return p * u * u / 2.0; }, [=](double u) { return p * u; },
               [=](double) { return p; }};
    return {plane, f, g, "parabola"};
}

GeneratingCurve GeneratingCurve::graph(CurvePlane plane, std::vector<double> coeffs) {
    if (coeffs.empty()) fail(Errc::Config, "graph curve needs at least one coefficient");
    auto horner = [](const std::vector<double>& c, double u) {
        double r = 0.0;
        for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * u + *it;
        return r;
    };
    auto derive = [](const std::vector<double>& c) {
        std::vector<double> d;
        for (std::size_t i = 1; i < c.size(); ++i) d.push_back(c[i] * static_cast<double>(i));
        if (d.empty()) d.push_back(0.0);
        return d;
    };
    const std::vector<double> c1 = derive(coeffs);
    const std::vector<double> c2 = derive(c1);

    ScalarFn f{[](double u) { return u; }, [](double) { return 1.0; }, [](double) { return 0.0; }};
    ScalarFn g{[=](double u) { return horner(coeffs, u); }, [=](double u) { return horner(c1, u); },
               [=](double u) { return horner(c2, u); }};
    return {plane, f, g, "graph"};
}

} // namespace isosurf
