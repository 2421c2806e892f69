#include "core/prescribed.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <vector>

#include "core/errors.hpp"
#include "core/quadrature.hpp"

namespace isosurf {

CurvatureProfile CurvatureProfile::constant(double value, double s_min, double s_max) {
    return {[value](double) { return value; }, s_min, s_max, value};
}

CurvatureProfile CurvatureProfile::poly(std::vector<double> coeffs, double s_min, double s_max) {
    return {[c = std::move(coeffs)](double s) {
                double r = 0.0;
                for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * s + *it;
                return r;
            },
            s_min, s_max, std::nullopt};
}

CurvatureProfile CurvatureProfile::sine(double amplitude, double omega, double s_min, double s_max,
                                        double phase) {
    return {[=](double s) { return amplitude * std::sin(omega * s + phase); }, s_min, s_max,
            std::nullopt};
}

namespace {

// Largest [s_min, hi] on which ok() holds, probed on a uniform scan.
double trim_validity(const CurvatureProfile& p, const std::function<bool(double)>& ok,
                     const char* what) {
    const int n = 256;
    if (!ok(p.s_min)) fail(Errc::EmptyValidity, std::string(what) + " fails already at s_min");
    double hi = p.s_min;
    for (int i = 1; i <= n; ++i) {
        const double s = p.s_min + (p.s_max - p.s_min) * i / n;
        if (!ok(s)) return hi;
        hi = s;
    }
    return hi;
}

struct ProfileIntegrals {
    CurvatureProfile p;
    double tol;

    ProfileIntegrals(CurvatureProfile prof, double t) : p(std::move(prof)), tol(t) {
        if (p.constant_value) {
            // quadrature self-test before taking the analytic fast path
            const double v = *p.constant_value;
            for (double frac : {0.3, 1.0}) {
                const double s = p.s_min + frac * (p.s_max - p.s_min);
                const double qi = quad(p.f, p.s_min, s, tol);
                const double qw = quad([&](double w) { return w * p.f(w); }, p.s_min, s, tol);
                const double ai = v * (s - p.s_min);
                const double aw = v * (s * s - p.s_min * p.s_min) / 2.0;
                if (std::abs(qi - ai) > 1e-9 * std::max(1.0, std::abs(ai)) ||
                    std::abs(qw - aw) > 1e-9 * std::max(1.0, std::abs(aw)))
                    fail(Errc::NoConvergence, "constant-profile quadrature self-test failed");
            }
        }
    }

    // int_{s_min}^{s} f
    double I(double s) const {
        if (p.constant_value) return *p.constant_value * (s - p.s_min);
        return quad(p.f, p.s_min, s, tol);
    }
    // int_{s_min}^{s} w f(w) dw
    double Iw(double s) const {
        if (p.constant_value)
            return *p.constant_value * (s * s - p.s_min * p.s_min) / 2.0;
        return quad([&](double w) { return w * p.f(w); }, p.s_min, s, tol);
    }
};

} // namespace

SolverOutput solve_K_helicoidal_ni(const CurvatureProfile& K, double c, double phi, double k0,
                                   double k1, Signature sig, int eps, double quad_tol) {
    if (c == 0.0 || phi == 0.0)
        fail(Errc::Config, "helicoidal ni-type prescribed curvature needs c != 0 and phi != 0");
    const bool pseudo = (sig == Signature::PseudoIsotropic);
    if (!pseudo) eps = 1;
    if (eps != 1 && eps != -1) fail(Errc::Config, "eps must be +1 or -1");

    auto shared = std::make_shared<ProfileIntegrals>(K, quad_tol);
    const double s0 = K.s_min;
    const double rate = 3.0 * phi * phi / (c * c);

    // Cube-root base and Q = (r r') = (x^2 +- y^2)'/2.
    auto base = [shared, rate, k1, pseudo, eps](double s) {
        const double b = k1 + (pseudo ? -eps : 1) * rate * shared->I(s);
        return b;
    };
    {
        // The base must stay one-signed on the whole requested interval.
        const double b0 = base(s0);
        if (b0 == 0.0) fail(Errc::DomainError, "cube-root base vanishes at s_min");
        const int n = 256;
        for (int i = 1; i <= n; ++i) {
            const double s = s0 + (K.s_max - s0) * i / n;
            if (base(s) * b0 <= 0.0)
                fail(Errc::DomainError, "cube-root base crosses zero inside the domain");
        }
    }
    auto Q = [base](double s) { return std::cbrt(1.0 / base(s)); };
    auto r2 = [shared, Q, k0, s0](double s) {
        return k0 + 2.0 * quad(Q, s0, s, shared->tol);
    };

    struct Kin { // r, theta and their first two derivatives at s
        double r, rp, rpp, th, thp, thpp;
    };
    auto kin = [=](double s) -> Kin {
        Kin k;
        const double rr2 = r2(s);
        if (rr2 <= 0.0) fail(Errc::DomainError, "r^2 became non-positive inside the validity");
        k.r = std::sqrt(rr2);
        const double q = Q(s);
        k.rp = q / k.r;
        // q = b^{-1/3}: q' = -(1/3) (q/b) b', with b' = (+-) rate K(s).
        const double bb = base(s);
        const double bprime = (pseudo ? -eps : 1) * rate * K.f(s);
        const double qprime = -(1.0 / 3.0) * q / bb * bprime;
        k.rpp = qprime / k.r - q * q / (k.r * k.r * k.r);
        const double e = pseudo ? static_cast<double>(eps) : 1.0;
        const double rad = pseudo ? (k.rp * k.rp - e) : (1.0 - k.rp * k.rp);
        if (rad < 0.0) fail(Errc::DomainError, "arc-length radicand negative");
        const double root = std::sqrt(rad);
        k.thp = root / k.r;
        // theta'' from d/ds sqrt(rad) = (+-) rp rpp / root.
        const double droot = root > 0.0 ? (pseudo ? k.rp * k.rpp : -k.rp * k.rpp) / root : 0.0;
        k.thpp = droot / k.r - root * k.rp / (k.r * k.r);
        k.th = quad(
            [=](double v) {
                const double rv2 = r2(v);
                if (rv2 <= 0.0) fail(Errc::DomainError, "r^2 non-positive in theta integral");
                const double rv = std::sqrt(rv2);
                const double rpv = Q(v) / rv;
                const double radv = pseudo ? (rpv * rpv - e) : (1.0 - rpv * rpv);
                return std::sqrt(std::max(0.0, radv)) / rv;
            },
            s0, s, shared->tol);
        return k;
    };

    auto ok = [=](double s) {
        const double rr2 = r2(s);
        if (rr2 <= 0.0) return false;
        const double rp = Q(s) / std::sqrt(rr2);
        return pseudo ? (rp * rp - eps >= 0.0) : (std::abs(rp) <= 1.0);
    };
    const double hi = trim_validity(K, ok, "polar arc-length reconstruction");

    ScalarFn fx, fy;
    if (!pseudo) {
        fx.value = [kin](double s) { const Kin k = kin(s); return k.r * std::cos(k.th); };
        fx.d1 = [kin](double s) {
            const Kin k = kin(s);
            return k.rp * std::cos(k.th) - k.r * k.thp * std::sin(k.th);
        };
        fx.d2 = [kin](double s) {
            const Kin k = kin(s);
            return k.rpp * std::cos(k.th) - 2.0 * k.rp * k.thp * std::sin(k.th) -
                   k.r * k.thpp * std::sin(k.th) - k.r * k.thp * k.thp * std::cos(k.th);
        };
        fy.value = [kin](double s) { const Kin k = kin(s); return k.r * std::sin(k.th); };
        fy.d1 = [kin](double s) {
            const Kin k = kin(s);
            return k.rp * std::sin(k.th) + k.r * k.thp * std::cos(k.th);
        };
        fy.d2 = [kin](double s) {
            const Kin k = kin(s);
            return k.rpp * std::sin(k.th) + 2.0 * k.rp * k.thp * std::cos(k.th) +
                   k.r * k.thpp * std::cos(k.th) - k.r * k.thp * k.thp * std::sin(k.th);
        };
    } else {
        fx.value = [kin](double s) { const Kin k = kin(s); return k.r * std::cosh(k.th); };
        fx.d1 = [kin](double s) {
            const Kin k = kin(s);
            return k.rp * std::cosh(k.th) + k.r * k.thp * std::sinh(k.th);
        };
        fx.d2 = [kin](double s) {
            const Kin k = kin(s);
            return k.rpp * std::cosh(k.th) + 2.0 * k.rp * k.thp * std::sinh(k.th) +
                   k.r * k.thpp * std::sinh(k.th) + k.r * k.thp * k.thp * std::cosh(k.th);
        };
        fy.value = [kin](double s) { const Kin k = kin(s); return k.r * std::sinh(k.th); };
        fy.d1 = [kin](double s) {
            const Kin k = kin(s);
            return k.rp * std::sinh(k.th) + k.r * k.thp * std::cosh(k.th);
        };
        fy.d2 = [kin](double s) {
            const Kin k = kin(s);
            return k.rpp * std::sinh(k.th) + 2.0 * k.rp * k.thp * std::cosh(k.th) +
                   k.r * k.thpp * std::cosh(k.th) + k.r * k.thp * k.thp * std::sinh(k.th);
        };
    }

    SolverOutput out{GeneratingCurve(CurvePlane::XY, fx, fy, "prescribed"), k0, k1, s0, hi, sig,
                     "K_helicoidal_ni"};
    return out;
}

SolverOutput solve_K_helicoidal_i(const CurvatureProfile& K, double c, double phi, double k0,
                                  double k1, Signature sig, CurvePlane plane, double quad_tol) {
    if (phi == 0.0) fail(Errc::Config, "helicoidal i-type prescribed curvature needs phi != 0");
    if (K.s_min <= 0.0) fail(Errc::Config, "i-type helicoidal solvers need s_min > 0");
    const bool pseudo = (sig == Signature::PseudoIsotropic);
    if (plane == CurvePlane::YZ && !pseudo)
        fail(Errc::IncompatiblePlane, "yz-plane branch needs the pseudo-isotropic signature");
    if (plane == CurvePlane::XY) fail(Errc::Config, "i-type solver needs an isotropic plane");

    auto shared = std::make_shared<ProfileIntegrals>(K, quad_tol);
    const double s0 = K.s_min;
    const double cs = pseudo ? 1.0 : -1.0; // sign of the c^2/(phi^2 v^2) term
    const double cfac = c * c / (phi * phi);

    auto rad = [shared, k1, cs, cfac](double v) {
        return k1 + cs * cfac / (v * v) + 2.0 * shared->Iw(v);
    };
    {
        bool any = false;
        double first_ok = s0;
        const int n = 256;
        for (int i = 0; i <= n; ++i) {
            const double s = s0 + (K.s_max - s0) * i / n;
            if (rad(s) >= 0.0) {
                any = true;
                first_ok = s;
                break;
            }
        }
        if (!any)
            fail(Errc::DomainError, "radicand negative on the whole interval");
        if (rad(s0) < 0.0)
            fail(Errc::DomainError,
                 "radicand negative at s_min; first legal s ~ " + std::to_string(first_ok));
    }
    const double hi = trim_validity(K, [rad](double s) { return rad(s) >= 0.0; }, "radicand");

    auto zf = [shared, rad, k0, s0](double s) {
        return k0 + quad([rad](double v) { return std::sqrt(std::max(0.0, rad(v))); }, s0, s,
                         shared->tol);
    };
    auto z1 = [rad](double s) { return std::sqrt(std::max(0.0, rad(s))); };
    auto z2 = [rad, shared, cs, cfac](double s) {
        const double rp = -2.0 * cs * cfac / (s * s * s) + 2.0 * s * shared->p.f(s);
        const double r = rad(s);
        return r > 0.0 ? rp / (2.0 * std::sqrt(r)) : 0.0;
    };

    ScalarFn f{[](double s) { return s; }, [](double) { return 1.0; }, [](double) { return 0.0; }};
    ScalarFn g{zf, z1, z2};
    return {GeneratingCurve(plane, f, g, "prescribed"), k0, k1, s0, hi, sig, "K_helicoidal_i"};
}

SolverOutput solve_H_helicoidal_i(const CurvatureProfile& H, double h0, double h1, Signature sig,
                                  int eps, double quad_tol) {
    if (H.s_min <= 0.0) fail(Errc::Config, "i-type helicoidal solvers need s_min > 0");
    const bool pseudo = (sig == Signature::PseudoIsotropic);
    if (!pseudo) eps = 1;
    if (eps != 1 && eps != -1) fail(Errc::Config, "eps must be +1 or -1");
    const double e = eps;

    auto shared = std::make_shared<ProfileIntegrals>(H, quad_tol);
    const double s0 = H.s_min;

    auto zf = [shared, h0, h1, e, s0](double s) {
        return h0 + h1 * std::log(s) +
               e * quad([shared](double v) { return (2.0 / v) * shared->Iw(v); }, s0, s,
                        shared->tol);
    };
    auto z1 = [shared, h1, e](double s) { return h1 / s + e * (2.0 / s) * shared->Iw(s); };
    auto z2 = [shared, h1, e](double s) {
        return -h1 / (s * s) + e * (2.0 * shared->p.f(s) - (2.0 / (s * s)) * shared->Iw(s));
    };

    const CurvePlane plane = (pseudo && eps == -1) ? CurvePlane::YZ : CurvePlane::XZ;
    ScalarFn f{[](double s) { return s; }, [](double) { return 1.0; }, [](double) { return 0.0; }};
    ScalarFn g{zf, z1, z2};
    return {GeneratingCurve(plane, f, g, "prescribed"), h0, h1, s0, H.s_max, sig,
            "H_helicoidal_i"};
}

SolverOutput solve_K_parabolic_i(const CurvatureProfile& K, double a, double b, double c1,
                                 double c2, double k0, double k1, Signature sig, CurvePlane plane,
                                 double quad_tol) {
    const bool pseudo = (sig == Signature::PseudoIsotropic);
    const double D1 = a * c1 + b * c2;
    if (D1 == 0.0)
        fail(Errc::DegenerateParameters,
             "a c1 + b c2 = 0: warped translation surfaces have constant Gaussian curvature "
             "K = -(C/B)^2 (simply) resp. (C/B)^2 (pseudo); nothing to solve");
    if (plane == CurvePlane::YZ && !pseudo)
        fail(Errc::IncompatiblePlane, "yz-plane branch needs the pseudo-isotropic signature");
    if (plane == CurvePlane::XY) fail(Errc::Config, "i-type solver needs an isotropic plane");
    const bool yz = plane == CurvePlane::YZ;
    const double C = yz ? c2 : c1;
    const double B = yz ? a : b;
    if (B == 0.0) fail(Errc::DegenerateParameters, yz ? "a = 0" : "b = 0");

    auto shared = std::make_shared<ProfileIntegrals>(K, quad_tol);
    const double s0 = K.s_min;
    const double quad_coef = C * C / (2.0 * D1);
    const double int_coef = (pseudo ? -1.0 : 1.0) * B * B / D1;

    auto zf = [=](double s) {
        return k0 + k1 * s + quad_coef * s * s +
               int_coef * quad([shared](double v) { return shared->I(v); }, s0, s, shared->tol);
    };
    auto z1 = [=](double s) { return k1 + 2.0 * quad_coef * s + int_coef * shared->I(s); };
    auto z2 = [=](double s) { return 2.0 * quad_coef + int_coef * shared->p.f(s); };

    ScalarFn f{[](double s) { return s; }, [](double) { return 1.0; }, [](double) { return 0.0; }};
    ScalarFn g{zf, z1, z2};
    return {GeneratingCurve(plane, f, g, "prescribed"), k0, k1, s0, K.s_max, sig,
            "K_parabolic_i"};
}

SolverOutput solve_H_parabolic_i(const CurvatureProfile& H, double a, double b, double c1,
                                 double c2, double h0, double h1, Signature sig, CurvePlane plane,
                                 double quad_tol) {
    const bool pseudo = (sig == Signature::PseudoIsotropic);
    if (plane == CurvePlane::YZ && !pseudo)
        fail(Errc::IncompatiblePlane, "yz-plane branch needs the pseudo-isotropic signature");
    if (plane == CurvePlane::XY) fail(Errc::Config, "i-type solver needs an isotropic plane");
    const double denom = pseudo ? (a * a - b * b) : (a * a + b * b);
    if (denom == 0.0)
        fail(Errc::DegenerateParameters,
             pseudo ? "a^2 - b^2 = 0 (lightlike translation direction)" : "a = b = 0");
    const bool yz = plane == CurvePlane::YZ;
    const double B = pseudo ? (yz ? a : b) : b;

    auto shared = std::make_shared<ProfileIntegrals>(H, quad_tol);
    const double s0 = H.s_min;
    const double quad_coef = (a * c1 - b * c2) / (2.0 * denom);
    const double int_coef = (pseudo ? -2.0 : 2.0) * B * B / denom;

    auto zf = [=](double s) {
        return h0 + h1 * s + quad_coef * s * s +
               int_coef * quad([shared](double v) { return shared->I(v); }, s0, s, shared->tol);
    };
    auto z1 = [=](double s) { return h1 + 2.0 * quad_coef * s + int_coef * shared->I(s); };
    auto z2 = [=](double s) { return 2.0 * quad_coef + int_coef * shared->p.f(s); };

    ScalarFn f{[](double s) { return s; }, [](double) { return 1.0; }, [](double) { return 0.0; }};
    ScalarFn g{zf, z1, z2};
    return {GeneratingCurve(plane, f, g, "prescribed"), h0, h1, s0, H.s_max, sig,
            "H_parabolic_i"};
}

} // namespace isosurf
