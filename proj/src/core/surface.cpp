#include "core/surface.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

#include "core/errors.hpp"

namespace isosurf {

GraphSurface::GraphSurface(Signature sig, std::function<double(double, double)> z,
                           std::function<double(double, double)> zu,
                           std::function<double(double, double)> zv,
                           std::function<double(double, double)> zuu,
                           std::function<double(double, double)> zuv,
                           std::function<double(double, double)> zvv)
    : sig_(sig), z_(std::move(z)), zu_(std::move(zu)), zv_(std::move(zv)), zuu_(std::move(zuu)),
      zuv_(std::move(zuv)), zvv_(std::move(zvv)) {}

std::string FamilyTag::label() const {
    std::string base;
    if (plane == CurvePlane::XY)
        base = sig == Signature::SimplyIsotropic ? "Y" : "Yh";
    else if (plane == CurvePlane::XZ)
        base = sig == Signature::SimplyIsotropic ? "Z" : "Zh";
    else
        base = "Wh";
    return base + std::to_string(index);
}

InvariantSurface::InvariantSurface(GeneratingCurve curve, MotionSubgroup group)
    : curve_(std::move(curve)), group_(group) {
    if (curve_.plane() == CurvePlane::YZ && group_.sig != Signature::PseudoIsotropic)
        fail(Errc::IncompatiblePlane,
             "a yz-plane generating curve requires the pseudo-isotropic signature");
    family_ = FamilyTag{family_index(group_), curve_.plane(), group_.sig};
}

namespace {
Vec3 apply_linear(const Mat4& m, const Vec3& p, double w) {
    // m * (p, w); w = 1 for points, 0 for tangent vectors.
    const auto& a = m.m;
    return {a[0][0] * p.x + a[0][1] * p.y + a[0][2] * p.z + a[0][3] * w,
            a[1][0] * p.x + a[1][1] * p.y + a[1][2] * p.z + a[1][3] * w,
            a[2][0] * p.x + a[2][1] * p.y + a[2][2] * p.z + a[2][3] * w};
}
} // namespace

Vec3 InvariantSurface::value(double u, double t) const {
    return apply_linear(evaluate(group_, t).m, curve_.value(u), 1.0);
}

Vec3 InvariantSurface::du(double u, double t) const {
    return apply_linear(evaluate(group_, t).m, curve_.d1(u), 0.0);
}

Vec3 InvariantSurface::dt(double u, double t) const {
    return apply_linear(evaluate_dt(group_, t), curve_.value(u), 1.0);
}

Vec3 InvariantSurface::duu(double u, double t) const {
    return apply_linear(evaluate(group_, t).m, curve_.d2(u), 0.0);
}

Vec3 InvariantSurface::dut(double u, double t) const {
    return apply_linear(evaluate_dt(group_, t), curve_.d1(u), 0.0);
}

Vec3 InvariantSurface::dtt(double u, double t) const {
    return apply_linear(evaluate_dtt(group_, t), curve_.value(u), 1.0);
}

InvariantSurface invariant_surface(GeneratingCurve curve, MotionSubgroup group) {
    return InvariantSurface(std::move(curve), group);
}

namespace {

// Printed degenerate cases, checked symbolically along the curve samples.
std::optional<std::string> named_obstruction(const InvariantSurface& s, const Rect& domain,
                                             int nu) {
    const auto& g = s.group();
    const auto& c = s.curve();
    const FamilyTag& fam = s.family();
    const bool pseudo = (g.sig == Signature::PseudoIsotropic);

    double scale = 1.0;
    auto max_abs = [&](auto&& fn) {
        double m = 0.0;
        for (int i = 0; i < nu; ++i) {
            const double u = domain.u0 + (domain.u1 - domain.u0) * i / std::max(1, nu - 1);
            m = std::max(m, std::abs(fn(u)));
            scale = std::max({scale, std::abs(c.f(u)), std::abs(c.fp(u)), std::abs(c.g(u)),
                              std::abs(c.gp(u))});
        }
        return m;
    };
    const double tol = 1e-10;

    if (fam.helicoidal()) {
        if (fam.plane == CurvePlane::XY) {
            const double sgn = pseudo ? -1.0 : 1.0;
            const double m =
                max_abs([&](double u) { return c.f(u) * c.fp(u) + sgn * c.g(u) * c.gp(u); });
            if (m <= tol * scale * scale)
                return pseudo ? "hyperbola centered at the origin"
                              : "circle centered at the origin";
        } else {
            const double m = max_abs([&](double u) { return c.fp(u); });
            if (m <= tol * scale) return "isotropic line";
        }
        return std::nullopt;
    }
    if (fam.limit() || fam.index == 8) {
        if (g.a == 0.0 && g.b == 0.0 && g.phi == 0.0)
            return "types V and VII are never admissible ((a,b) = (0,0))";
        if (fam.plane == CurvePlane::XY) {
            const double m = max_abs([&](double u) { return g.b * c.fp(u) - g.a * c.gp(u); });
            if (m <= tol * scale * std::max(1.0, std::max(std::abs(g.a), std::abs(g.b))))
                return "line of slope b/a";
        } else if (fam.plane == CurvePlane::XZ) {
            if (g.b == 0.0) return "b=0";
            const double m = max_abs([&](double u) { return c.fp(u); });
            if (m <= tol * scale) return "isotropic line";
        } else {
            if (g.a == 0.0) return "a=0";
            const double m = max_abs([&](double u) { return c.fp(u); });
            if (m <= tol * scale) return "isotropic line";
        }
    }
    return std::nullopt;
}

} // namespace

AdmissibilityReport admissibility(const InvariantSurface& s, const Rect& domain, int nu, int nt) {
    if (!(domain.u1 > domain.u0) || !(domain.t1 > domain.t0))
        fail(Errc::InvalidArgument, "admissibility domain is empty");
    nu = std::max(nu, 2);
    nt = std::max(nt, 2);

    AdmissibilityReport rep;
    rep.det_g_min = std::numeric_limits<double>::infinity();
    double scale = 1.0;
    for (int i = 0; i < nu; ++i) {
        const double u = domain.u0 + (domain.u1 - domain.u0) * i / (nu - 1);
        for (int j = 0; j < nt; ++j) {
            const double t = domain.t0 + (domain.t1 - domain.t0) * j / (nt - 1);
            const Vec3 xu = s.du(u, t), xt = s.dt(u, t);
            const double g11 = dot(xu, xu, s.signature());
            const double g12 = dot(xu, xt, s.signature());
            const double g22 = dot(xt, xt, s.signature());
            const double d = std::abs(g11 * g22 - g12 * g12);
            scale = std::max({scale, std::abs(xu.x), std::abs(xu.y), std::abs(xt.x),
                              std::abs(xt.y)});
            if (d < rep.det_g_min) {
                rep.det_g_min = d;
                rep.witness_u = u;
                rep.witness_t = t;
            }
        }
    }
    rep.admissible = rep.det_g_min > 1e-10 * scale * scale * scale * scale;
    if (!rep.admissible) rep.obstruction = named_obstruction(s, domain, nu);
    return rep;
}

bool is_ruled(const InvariantSurface& s) {
    static const double us[] = {-1.25, -0.5, 0.0, 0.4, 1.3};
    static const double ts[] = {-1.0, -0.35, 0.45, 1.0};
    double worst = 0.0;
    double scale = 1.0;
    for (double u : us) {
        const Vec3 q = s.curve().value(u);
        scale = std::max(scale, q.norm_inf());
        for (double t : ts) {
            worst = std::max(worst, apply_linear(evaluate_dtt(s.group(), t), q, 1.0).norm_inf());
        }
    }
    return worst <= 1e-10 * scale;
}

std::array<double, 3> Chart::pullback(double u, double t) const {
    const auto f = frame(u, t);
    const double a = f[0], b = f[1], c = f[2], d = f[3];
    switch (kind) {
    case NormalFormKind::PlusPlus:
        return {a * a + c * c, a * b + c * d, b * b + d * d};
    case NormalFormKind::PlusMinus:
        return {a * a - c * c, a * b - c * d, b * b - d * d};
    default: // dU dT
        return {a * c, (a * d + b * c) / 2.0, b * d};
    }
}

Chart normal_form_chart(const InvariantSurface& s) {
    const FamilyTag fam = s.family();
    const MotionSubgroup g = s.group();
    const GeneratingCurve curve = s.curve();
    const bool pseudo = (g.sig == Signature::PseudoIsotropic);

    if (fam.index == 5 || fam.index == 7 || fam.index == 8)
        fail(Errc::ChartUnavailable,
             "no flat chart for family " + fam.label() + " (not admissible or no printed chart)");
    if (fam.plane == CurvePlane::YZ)
        fail(Errc::ChartUnavailable, "no printed chart for the timelike (yz) cells");

    Chart chart;
    if (fam.helicoidal()) {
        const double phi = g.phi;
        if (fam.plane == CurvePlane::XY) {
            const double sgn = pseudo ? 1.0 : -1.0; // U = x + sgn t phi y
            chart.kind = pseudo ? NormalFormKind::PlusMinus : NormalFormKind::PlusPlus;
            chart.map = [curve, phi, sgn](double u, double t) -> std::array<double, 2> {
                const double x = curve.f(u), y = curve.g(u);
                return {x + sgn * t * phi * y, y + t * phi * x};
            };
            chart.frame = [curve, phi, sgn](double u, double t) -> std::array<double, 4> {
                (void)t;
                return {curve.fp(u), sgn * phi * curve.g(u), curve.gp(u), phi * curve.f(u)};
            };
        } else if (!pseudo) {
            // U = x, T = t phi x; I = dU^2 + dT^2 with dU = x'du, dT = phi x dt.
            chart.kind = NormalFormKind::PlusPlus;
            chart.map = [curve, phi](double u, double t) -> std::array<double, 2> {
                const double x = curve.f(u);
                return {x, t * phi * x};
            };
            chart.frame = [curve, phi](double u, double t) -> std::array<double, 4> {
                (void)t;
                return {curve.fp(u), 0.0, 0.0, phi * curve.f(u)};
            };
        } else {
            // I = dU dT with dU = x'du + phi x dt, dT = x'du - phi x dt.
            chart.kind = NormalFormKind::CrossTerm;
            chart.map = [curve, phi](double u, double t) -> std::array<double, 2> {
                const double x = curve.f(u);
                return {x + t * phi * x, x - t * phi * x};
            };
            chart.frame = [curve, phi](double u, double t) -> std::array<double, 4> {
                (void)t;
                const double x = curve.f(u), xp = curve.fp(u);
                return {xp, phi * x, xp, -phi * x};
            };
        }
        return chart;
    }

    // Limit-motion families III, IV, VI.
    const double a = g.a, b = g.b;
    chart.kind = pseudo ? NormalFormKind::PlusMinus : NormalFormKind::PlusPlus;
    if (fam.plane == CurvePlane::XY) {
        chart.map = [curve, a, b](double u, double t) -> std::array<double, 2> {
            return {curve.f(u) + a * t, curve.g(u) + b * t};
        };
        chart.frame = [curve, a, b](double u, double t) -> std::array<double, 4> {
            (void)t;
            return {curve.fp(u), a, curve.gp(u), b};
        };
    } else {
        chart.map = [curve, a, b](double u, double t) -> std::array<double, 2> {
            return {curve.f(u) + a * t, b * t};
        };
        chart.frame = [curve, a, b](double u, double t) -> std::array<double, 4> {
            (void)t;
            return {curve.fp(u), a, 0.0, b};
        };
    }
    return chart;
}

} // namespace isosurf
