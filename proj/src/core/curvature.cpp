#include "core/curvature.hpp"

#include <algorithm>
#include <cmath>

#include "core/errors.hpp"

namespace isosurf {

FundamentalForms fundamental_forms(const SurfaceMap& s, double u, double t) {
    const Signature sig = s.signature();
    const Vec3 xu = s.du(u, t), xt = s.dt(u, t);
    const Vec3 xuu = s.duu(u, t), xut = s.dut(u, t), xtt = s.dtt(u, t);

    FundamentalForms F;
    F.X12 = xu.x * xt.y - xt.x * xu.y;
    F.X23 = xu.y * xt.z - xt.y * xu.z;
    F.X31 = xu.z * xt.x - xt.z * xu.x;
    F.X13 = -F.X31;

    const double scale =
        std::max(1.0, std::hypot(xu.x, xu.y) * std::hypot(xt.x, xt.y));
    if (std::abs(F.X12) <= 1e-10 * scale)
        fail(Errc::NotAdmissible, "surface is not admissible at (u,t): |X12| = " +
                                      std::to_string(std::abs(F.X12)));

    F.g11 = dot(xu, xu, sig);
    F.g12 = dot(xu, xt, sig);
    F.g22 = dot(xt, xt, sig);

    const Vec3 nh = sig == Signature::SimplyIsotropic
                        ? Vec3{F.X23 / F.X12, F.X31 / F.X12, 1.0}
                        : Vec3{F.X23 / F.X12, F.X13 / F.X12, 1.0};
    F.h11 = ambient_dot(nh, xuu, sig);
    F.h12 = ambient_dot(nh, xut, sig);
    F.h22 = ambient_dot(nh, xtt, sig);
    return F;
}

Vec3 relative_normal(const SurfaceMap& s, double u, double t) {
    const FundamentalForms F = fundamental_forms(s, u, t);
    if (s.signature() == Signature::SimplyIsotropic)
        return {F.X23 / F.X12, F.X31 / F.X12, 1.0};
    return {F.X23 / F.X12, F.X13 / F.X12, 1.0};
}

Vec3 gauss_map(const SurfaceMap& s, double u, double t) {
    const Vec3 nh = relative_normal(s, u, t);
    const double sgn = metric_sign(s.signature());
    return {nh.x, nh.y, 0.5 * (1.0 - (nh.x * nh.x + sgn * nh.y * nh.y))};
}

CurvaturePair curvatures_numeric(const SurfaceMap& s, double u, double t) {
    const FundamentalForms F = fundamental_forms(s, u, t);
    const double dg = F.det_g();
    CurvaturePair r;
    r.K = (F.h11 * F.h22 - F.h12 * F.h12) / dg;
    r.H = 0.5 * (F.g11 * F.h22 - 2.0 * F.g12 * F.h12 + F.g22 * F.h11) / dg;
    return r;
}

namespace {

// Helicoidal/revolution closed forms; f, g are the curve's active coordinates.
CurvaturePair helicoidal_closed(const InvariantSurface& s, double u) {
    const MotionSubgroup& grp = s.group();
    const GeneratingCurve& c = s.curve();
    const double phi = grp.phi, cc = grp.c;
    const double x = c.f(u), xp = c.fp(u), xpp = c.fpp(u);
    const double y = c.g(u), yp = c.gp(u), ypp = c.gpp(u);
    CurvaturePair r;

    if (s.family().plane == CurvePlane::XY) {
        if (s.signature() == Signature::SimplyIsotropic) {
            const double w = x * xp + y * yp;
            const double cross2 = xpp * yp - xp * ypp;
            const double speed2 = xp * xp + yp * yp;
            r.K = (cc * cc / (phi * phi)) *
                  ((xp * y - x * yp) * cross2 - speed2 * speed2) / (w * w * w * w);
            r.H = (cc / phi) * ((x * x + y * y) * cross2 + speed2 * (x * yp - xp * y)) /
                  (2.0 * w * w * w);
        } else {
            const double w = x * xp - y * yp;
            const double cross2 = xpp * yp - xp * ypp;
            const double speed2 = xp * xp - yp * yp;
            r.K = (cc * cc / (phi * phi)) *
                  (speed2 * speed2 - (x * yp - xp * y) * cross2) / (w * w * w * w);
            r.H = (cc / phi) * ((x * x - y * y) * cross2 + speed2 * (x * yp - xp * y)) /
                  (2.0 * w * w * w);
        }
        return r;
    }

    // i-type: f is the radial coordinate (x for xz, y for yz), g is z.
    const double f = x, fp = xp, fpp = xpp;
    const double z1 = yp, z2 = ypp;
    const double bend = fpp * z1 - fp * z2;
    if (s.signature() == Signature::SimplyIsotropic) {
        r.K = -z1 * bend / (f * fp * fp * fp * fp) - cc * cc / (phi * phi * f * f * f * f);
        r.H = (fp * fp * z1 - f * bend) / (2.0 * f * fp * fp * fp);
    } else {
        const double eps = s.family().plane == CurvePlane::XZ ? 1.0 : -1.0;
        r.K = cc * cc / (phi * phi * f * f * f * f) - z1 * bend / (f * fp * fp * fp * fp);
        r.H = eps * (fp * fp * z1 - f * bend) / (2.0 * f * fp * fp * fp);
    }
    return r;
}

// Limit-motion (parabolic revolution) closed forms; warped translation and
// non-isotropic translation surfaces are the special cases c = D1 = 0 and
// c = c1 = c2 = 0.
CurvaturePair parabolic_closed(const InvariantSurface& s, double u) {
    const MotionSubgroup& g = s.group();
    const GeneratingCurve& c = s.curve();
    const double a = g.a, b = g.b, c1 = g.c1, c2 = g.c2, cc = g.c;
    const double D1 = a * c1 + b * c2;
    CurvaturePair r;

    if (s.family().plane == CurvePlane::XY) {
        const double x = c.f(u), xp = c.fp(u), xpp = c.fpp(u);
        const double y = c.g(u), yp = c.gp(u), ypp = c.gpp(u);
        const double w = b * xp - a * yp;
        const double cross2 = xpp * yp - xp * ypp;
        const double lam = cc + c1 * x + c2 * y;
        const double mu = c1 * xp + c2 * yp;
        if (s.signature() == Signature::SimplyIsotropic) {
            r.K = D1 * lam * cross2 / (w * w * w) - (mu / w) * (mu / w);
            r.H = (a * a + b * b) * lam * cross2 / (2.0 * w * w * w) -
                  (a * xp + b * yp) * mu / (w * w) +
                  (xp * xp + yp * yp) * D1 / (2.0 * w * w);
        } else {
            r.K = (mu / w) * (mu / w) - D1 * lam * cross2 / (w * w * w);
            r.H = -(a * a - b * b) * lam * cross2 / (2.0 * w * w * w) +
                  (a * xp - b * yp) * mu / (w * w) -
                  (xp * xp - yp * yp) * D1 / (2.0 * w * w);
        }
        return r;
    }

    // i-type: C = c1, B = b on the xz-plane; C = c2, B = a on the yz-plane.
    const double f1 = c.fp(u), f2 = c.fpp(u);
    const double z1 = c.gp(u), z2 = c.gpp(u);
    const double bend = f2 * z1 - f1 * z2;
    const bool yz = s.family().plane == CurvePlane::YZ;
    const double C = yz ? c2 : c1;
    const double B = yz ? a : b;
    if (s.signature() == Signature::SimplyIsotropic) {
        r.K = -D1 * bend / (B * B * f1 * f1 * f1) - C * C / (B * B);
        r.H = (b * c2 - a * c1) / (2.0 * B * B) -
              (a * a + b * b) * bend / (2.0 * B * B * f1 * f1 * f1);
    } else {
        r.K = D1 * bend / (B * B * f1 * f1 * f1) + C * C / (B * B);
        r.H = (a * a - b * b) * bend / (2.0 * B * B * f1 * f1 * f1) -
              (b * c2 - a * c1) / (2.0 * B * B);
    }
    return r;
}

} // namespace

CurvaturePair curvatures_closed_form(const InvariantSurface& s, double u) {
    const int idx = s.family().index;
    if (idx == 1 || idx == 2) return helicoidal_closed(s, u);
    if (idx == 3 || idx == 4 || idx == 6) return parabolic_closed(s, u);
    fail(Errc::NoClosedForm,
         "no printed curvature closed form for family " + s.family().label());
}

namespace {

template <typename Fn> double d1_5pt(Fn&& f, double x, double h) {
    return (-f(x + 2 * h) + 8.0 * f(x + h) - 8.0 * f(x - h) + f(x - 2 * h)) / (12.0 * h);
}

template <typename Fn> double d2_5pt(Fn&& f, double x, double h) {
    return (-f(x + 2 * h) + 16.0 * f(x + h) - 30.0 * f(x) + 16.0 * f(x - h) - f(x - 2 * h)) /
           (12.0 * h * h);
}

} // namespace

double brioschi_curvature(const SurfaceMap& s, double u, double t, double step) {
    const Signature sig = s.signature();
    // First derivatives of g_ij come from the analytic second partials; the
    // second derivatives the Brioschi numerator needs are five-point central
    // differences of those, so round-off is divided by h only once.
    auto Ev_at = [&](double uu, double tt) { return 2.0 * dot(s.dut(uu, tt), s.du(uu, tt), sig); };
    auto Gu_at = [&](double uu, double tt) { return 2.0 * dot(s.dut(uu, tt), s.dt(uu, tt), sig); };
    auto Fv_at = [&](double uu, double tt) {
        return dot(s.dut(uu, tt), s.dt(uu, tt), sig) + dot(s.du(uu, tt), s.dtt(uu, tt), sig);
    };
    const double h = step > 0.0 ? step : 1e-4 * std::max({1.0, std::abs(u), std::abs(t)});

    const Vec3 xu = s.du(u, t), xt = s.dt(u, t), xuu = s.duu(u, t), xut = s.dut(u, t),
               xtt = s.dtt(u, t);
    const double E0 = dot(xu, xu, sig), F0 = dot(xu, xt, sig), G0 = dot(xt, xt, sig);
    const double Eu = 2.0 * dot(xuu, xu, sig);
    const double Ev = Ev_at(u, t);
    const double Gu = Gu_at(u, t);
    const double Gv = 2.0 * dot(xtt, xt, sig);
    const double Fu = dot(xuu, xt, sig) + dot(xu, xut, sig);
    const double Fv = Fv_at(u, t);
    const double Evv = d1_5pt([&](double x) { return Ev_at(u, x); }, t, h);
    const double Guu = d1_5pt([&](double x) { return Gu_at(x, t); }, u, h);
    const double Fuv = d1_5pt([&](double x) { return Fv_at(x, t); }, u, h);

    auto det3 = [](double a00, double a01, double a02, double a10, double a11, double a12,
                   double a20, double a21, double a22) {
        return a00 * (a11 * a22 - a12 * a21) - a01 * (a10 * a22 - a12 * a20) +
               a02 * (a10 * a21 - a11 * a20);
    };
    const double m1 = det3(-0.5 * Evv + Fuv - 0.5 * Guu, 0.5 * Eu, Fu - 0.5 * Ev, //
                           Fv - 0.5 * Gu, E0, F0,                                 //
                           0.5 * Gv, F0, G0);
    const double m2 = det3(0.0, 0.5 * Ev, 0.5 * Gu, //
                           0.5 * Ev, E0, F0,        //
                           0.5 * Gu, F0, G0);
    const double dg = E0 * G0 - F0 * F0;
    return (m1 - m2) / (dg * dg);
}

} // namespace isosurf
