#include "core/motion.hpp"

#include <cmath>

#include "core/errors.hpp"

namespace isosurf {

Mat3 Mat3::identity() {
    Mat3 r;
    r.m[0][0] = r.m[1][1] = r.m[2][2] = 1.0;
    return r;
}

Mat4 Mat4::identity() {
    Mat4 r;
    r.m[0][0] = r.m[1][1] = r.m[2][2] = r.m[3][3] = 1.0;
    return r;
}

Mat4 Mat4::operator*(const Mat4& o) const {
    Mat4 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            double s = 0.0;
            for (int k = 0; k < 4; ++k) s += m[i][k] * o.m[k][j];
            r.m[i][j] = s;
        }
    return r;
}

Mat4 Mat4::operator-(const Mat4& o) const {
    Mat4 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r.m[i][j] = m[i][j] - o.m[i][j];
    return r;
}

double Mat4::norm_inf() const {
    double r = 0.0;
    for (const auto& row : m)
        for (double v : row) r = std::max(r, std::abs(v));
    return r;
}

namespace {

double det3(double a00, double a01, double a02, double a10, double a11, double a12, double a20,
            double a21, double a22) {
    return a00 * (a11 * a22 - a12 * a21) - a01 * (a10 * a22 - a12 * a20) +
           a02 * (a10 * a21 - a11 * a20);
}

} // namespace

double Mat4::det() const {
    double r = 0.0;
    double sign = 1.0;
    for (int j = 0; j < 4; ++j) {
        const int c[3] = {j == 0 ? 1 : 0, j <= 1 ? 2 : 1, j <= 2 ? 3 : 2};
        r += sign * m[0][j] *
             det3(m[1][c[0]], m[1][c[1]], m[1][c[2]], m[2][c[0]], m[2][c[1]], m[2][c[2]],
                  m[3][c[0]], m[3][c[1]], m[3][c[2]]);
        sign = -sign;
    }
    return r;
}

bool is_orthogonal_iso(const Mat3& A, Signature sig) {
    const double tol = 1e-12;
    if (std::abs(A(0, 2)) > tol || std::abs(A(1, 2)) > tol) return false;
    if (std::abs(std::abs(A(2, 2)) - 1.0) > tol) return false;

    const double p = A(0, 0), q = A(0, 1), r = A(1, 0), s = A(1, 1);
    if (sig == Signature::SimplyIsotropic) {
        // [[cos phi, -sigma sin phi], [sin phi, sigma cos phi]]: columns are
        // Euclidean-orthonormal with det = sigma = +-1.
        if (std::abs(p * p + r * r - 1.0) > tol) return false;
        if (std::abs(q * q + s * s - 1.0) > tol) return false;
        if (std::abs(p * q + r * s) > tol) return false;
        const double d = p * s - q * r;
        return std::abs(std::abs(d) - 1.0) <= tol;
    }
    // [[sigma cosh phi, +-sinh phi], [sinh phi, +-sigma cosh phi]]: columns are
    // Lorentz-orthonormal for <u,v> = u1 v1 - u2 v2, with |p| >= |r|.
    if (std::abs((p * p - r * r) - 1.0) > tol) return false;
    if (std::abs((q * q - s * s) + 1.0) > tol) return false;
    if (std::abs(p * q - r * s) > tol) return false;
    return true;
}

Motion4 make_motion(const Mat3& A, const Vec3& a, Signature sig) {
    if (!is_orthogonal_iso(A, sig))
        fail(Errc::NotOrthogonal, "matrix is not in the isotropic orthogonal group (" +
                                      signature_name(sig) + ")");
    Motion4 r;
    r.sig = sig;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r.m(i, j) = A(i, j);
    r.m(0, 3) = a.x;
    r.m(1, 3) = a.y;
    r.m(2, 3) = a.z;
    r.m(3, 3) = 1.0;
    return r;
}

Motion4 compose(const Motion4& m1, const Motion4& m2) {
    if (m1.sig != m2.sig)
        fail(Errc::InvalidArgument, "cannot compose motions from different signatures");
    return {m1.m * m2.m, m1.sig};
}

Vec3 apply(const Motion4& m, const Vec3& p) {
    const auto& a = m.m.m;
    return {a[0][0] * p.x + a[0][1] * p.y + a[0][2] * p.z + a[0][3],
            a[1][0] * p.x + a[1][1] * p.y + a[1][2] * p.z + a[1][3],
            a[2][0] * p.x + a[2][1] * p.y + a[2][2] * p.z + a[2][3]};
}

std::string motion_type_name(MotionType t) {
    switch (t) {
    case MotionType::I_Rotation: return "I rotation";
    case MotionType::II_Helicoidal: return "II helicoidal";
    case MotionType::III_ParabolicRotation: return "III parabolic rotation";
    case MotionType::IV_WarpedTranslation: return "IV warped translation";
    case MotionType::V_Shear: return "V isotropic shear";
    case MotionType::VI_TranslationNonIsotropic: return "VI translation (non-isotropic)";
    default: return "VII translation (isotropic)";
    }
}

std::string orbit_shape_name(MotionType t) {
    switch (t) {
    case MotionType::I_Rotation: return "circle";
    case MotionType::II_Helicoidal: return "helix";
    case MotionType::III_ParabolicRotation: return "parabola";
    default: return "line";
    }
}

namespace {

constexpr double kSeriesThreshold = 1e-4;

// Phase functions in reduced form.  With h = phi/2 and m = 2t-1:
//   C  = 1/2 + sin(m h) / (2 sin h)
//   S  = sin(t h') sin((t-1) h') / sin(h'),            h' = h (arguments t*phi/2 etc.)
//   C~ = t/2 + sin(t h) sin((t-2) h) / (2 sin^2 h)
//   S~ = [(t-1) sin(phi) - sin((t-1) phi)] / (4 sin^2 h)
// and hyperbolic analogs with sin -> sinh (all signs carried by the functions
// themselves; as power series in Q = -phi^2 resp. Q = +phi^2 the two
// signatures coincide).  Only S~ and its t-derivative suffer cancellation,
// but for a uniform contract every function switches to its series below the
// threshold.

struct SeriesCtx {
    double phi;
    double Q; // -phi^2 (trig) or +phi^2 (hyperbolic)
};

PhaseSums series_values(const SeriesCtx& sx, double t) {
    const double Q = sx.Q;
    const double m = 2.0 * t - 1.0;
    const double n = t - 1.0;
    const double w = t * t - 2.0 * t; // t(t-2)
    const double m2 = m * m, m3 = m2 * m, m5 = m3 * m2;
    const double n2 = n * n, n3 = n2 * n, n5 = n3 * n2;

    PhaseSums r;
    r.C = t + Q * (m3 - m) / 48.0 + Q * Q * (m5 / 3840.0 - m3 / 1152.0 + 7.0 * m / 11520.0);
    r.S = sx.phi * (t * (t - 1.0) / 2.0 + Q * t * t * (t - 1.0) * (t - 1.0) / 24.0);
    {
        const double t2 = t * t, s2 = (t - 2.0) * (t - 2.0);
        r.Ct = t * (t - 1.0) / 2.0 + Q * w * (t - 1.0) * (t - 1.0) / 24.0 +
               Q * Q * (w / 2.0) *
                   ((t2 * t2 + s2 * s2) / 1920.0 + t2 * s2 / 576.0 -
                    (t2 - 2.0 * t + 2.0) / 144.0 + 1.0 / 240.0);
    }
    r.St = sx.phi * ((n3 - n) / 6.0 + Q * ((n5 - n) / 120.0 - (n3 - n) / 72.0));
    return r;
}

PhaseSums series_dt(const SeriesCtx& sx, double t) {
    const double Q = sx.Q;
    const double m = 2.0 * t - 1.0;
    const double n = t - 1.0;
    const double w = t * t - 2.0 * t;

    PhaseSums r;
    r.C = 1.0 + Q * (3.0 * m * m - 1.0) / 24.0;
    r.S = sx.phi * (m / 2.0 + Q * (2.0 * t * t * t - 3.0 * t * t + t) / 12.0);
    r.Ct = m / 2.0 + Q * (2.0 * w + 1.0) * (t - 1.0) / 12.0;
    r.St = sx.phi * ((3.0 * n * n - 1.0) / 6.0 +
                     Q * ((5.0 * n * n * n * n - 1.0) / 120.0 - (3.0 * n * n - 1.0) / 72.0));
    return r;
}

PhaseSums series_dtt(const SeriesCtx& sx, double t) {
    const double Q = sx.Q;
    const double m = 2.0 * t - 1.0;
    const double n = t - 1.0;

    PhaseSums r;
    r.C = Q * m / 2.0;
    r.S = sx.phi * (1.0 + Q * (6.0 * t * t - 6.0 * t + 1.0) / 12.0);
    r.Ct = 1.0 + Q * (6.0 * t * t - 12.0 * t + 5.0) / 12.0;
    r.St = sx.phi * (n + Q * (n * n * n / 6.0 - n / 12.0));
    return r;
}

} // namespace

PhaseSums phase_sums(double phi, double t, Signature sig) {
    const bool hyp = (sig == Signature::PseudoIsotropic);
    if (std::abs(phi) < kSeriesThreshold)
        return series_values({phi, (hyp ? 1.0 : -1.0) * phi * phi}, t);

    const double h = phi / 2.0;
    PhaseSums r;
    if (!hyp) {
        const double sh = std::sin(h), s2 = sh * sh;
        r.C = 0.5 + std::sin((2.0 * t - 1.0) * h) / (2.0 * sh);
        r.S = std::sin(t * h) * std::sin((t - 1.0) * h) / sh;
        r.Ct = 0.5 * t + std::sin(t * h) * std::sin((t - 2.0) * h) / (2.0 * s2);
        r.St = ((t - 1.0) * std::sin(phi) - std::sin((t - 1.0) * phi)) / (4.0 * s2);
    } else {
        const double sh = std::sinh(h), s2 = sh * sh;
        r.C = 0.5 + std::sinh((2.0 * t - 1.0) * h) / (2.0 * sh);
        r.S = std::sinh(t * h) * std::sinh((t - 1.0) * h) / sh;
        r.Ct = 0.5 * t + std::sinh(t * h) * std::sinh((t - 2.0) * h) / (2.0 * s2);
        r.St = (std::sinh((t - 1.0) * phi) - (t - 1.0) * std::sinh(phi)) / (4.0 * s2);
    }
    return r;
}

PhaseSums phase_sums_dt(double phi, double t, Signature sig) {
    const bool hyp = (sig == Signature::PseudoIsotropic);
    if (std::abs(phi) < kSeriesThreshold)
        return series_dt({phi, (hyp ? 1.0 : -1.0) * phi * phi}, t);

    const double h = phi / 2.0;
    PhaseSums r;
    if (!hyp) {
        const double sh = std::sin(h), s2 = sh * sh;
        r.C = phi * std::cos((2.0 * t - 1.0) * h) / (2.0 * sh);
        r.S = (phi / 2.0) * std::sin((2.0 * t - 1.0) * h) / sh;
        r.Ct = 0.5 + (phi / 4.0) * std::sin((t - 1.0) * phi) / s2;
        r.St = (std::sin(phi) - phi * std::cos((t - 1.0) * phi)) / (4.0 * s2);
    } else {
        const double sh = std::sinh(h), s2 = sh * sh;
        r.C = phi * std::cosh((2.0 * t - 1.0) * h) / (2.0 * sh);
        r.S = (phi / 2.0) * std::sinh((2.0 * t - 1.0) * h) / sh;
        r.Ct = 0.5 + (phi / 4.0) * std::sinh((t - 1.0) * phi) / s2;
        r.St = (phi * std::cosh((t - 1.0) * phi) - std::sinh(phi)) / (4.0 * s2);
    }
    return r;
}

PhaseSums phase_sums_dtt(double phi, double t, Signature sig) {
    const bool hyp = (sig == Signature::PseudoIsotropic);
    if (std::abs(phi) < kSeriesThreshold)
        return series_dtt({phi, (hyp ? 1.0 : -1.0) * phi * phi}, t);

    const double h = phi / 2.0;
    const double phi2 = phi * phi;
    PhaseSums r;
    if (!hyp) {
        const double sh = std::sin(h), s2 = sh * sh;
        r.C = -phi2 * std::sin((2.0 * t - 1.0) * h) / (2.0 * sh);
        r.S = (phi2 / 2.0) * std::cos((2.0 * t - 1.0) * h) / sh;
        r.Ct = (phi2 / 4.0) * std::cos((t - 1.0) * phi) / s2;
        r.St = phi2 * std::sin((t - 1.0) * phi) / (4.0 * s2);
    } else {
        const double sh = std::sinh(h), s2 = sh * sh;
        r.C = phi2 * std::sinh((2.0 * t - 1.0) * h) / (2.0 * sh);
        r.S = (phi2 / 2.0) * std::cosh((2.0 * t - 1.0) * h) / sh;
        r.Ct = (phi2 / 4.0) * std::cosh((t - 1.0) * phi) / s2;
        r.St = phi2 * std::sinh((t - 1.0) * phi) / (4.0 * s2);
    }
    return r;
}

namespace {

struct TopBlock {
    double c00, c01, c10, c11;
};

TopBlock rotation_block(Signature sig, double phi, double t, int order) {
    const double a = t * phi;
    if (sig == Signature::SimplyIsotropic) {
        const double co = std::cos(a), si = std::sin(a);
        switch (order) {
        case 0: return {co, -si, si, co};
        case 1: return {-phi * si, -phi * co, phi * co, -phi * si};
        default: {
            const double p2 = phi * phi;
            return {-p2 * co, p2 * si, -p2 * si, -p2 * co};
        }
        }
    }
    const double ch = std::cosh(a), sh = std::sinh(a);
    switch (order) {
    case 0: return {ch, sh, sh, ch};
    case 1: return {phi * sh, phi * ch, phi * ch, phi * sh};
    default: {
        const double p2 = phi * phi;
        return {p2 * ch, p2 * sh, p2 * sh, p2 * ch};
    }
    }
}

// Assembles psi_t (order 0) or its t-derivatives (order 1, 2).  The (3,4)
// entry uses c t + D1 (C~_t + t/2) + D2 S~_t; the t/2 shift reparameterizes c
// so that phi -> 0 reproduces the limit-motion matrix exactly.
Mat4 assemble(const MotionSubgroup& g, double t, int order) {
    const bool pseudo = (g.sig == Signature::PseudoIsotropic);
    Mat4 r;
    if (order == 0) r.m[3][3] = 1.0;

    const TopBlock B = rotation_block(g.sig, g.phi, t, order);
    r.m[0][0] = B.c00;
    r.m[0][1] = B.c01;
    r.m[1][0] = B.c10;
    r.m[1][1] = B.c11;
    if (order == 0) r.m[2][2] = 1.0;

    if (g.pure_helicoidal()) {
        r.m[2][3] = (order == 0) ? g.c * t : (order == 1 ? g.c : 0.0);
        return r;
    }

    const double D1 = g.a * g.c1 + g.b * g.c2;
    const double D2 = pseudo ? (g.a * g.c2 + g.b * g.c1) : (g.a * g.c2 - g.b * g.c1);
    const double ssign = pseudo ? 1.0 : -1.0; // sign of the S term in column 4 / row 3

    PhaseSums P;
    double poly34 = 0.0, poly34_shift = 0.0;
    switch (order) {
    case 0:
        P = phase_sums(g.phi, t, g.sig);
        poly34 = g.c * t;
        poly34_shift = t / 2.0;
        break;
    case 1:
        P = phase_sums_dt(g.phi, t, g.sig);
        poly34 = g.c;
        poly34_shift = 0.5;
        break;
    default:
        P = phase_sums_dtt(g.phi, t, g.sig);
        break;
    }

    r.m[0][3] = g.a * P.C + ssign * g.b * P.S;
    r.m[1][3] = g.b * P.C + g.a * P.S;
    r.m[2][0] = g.c1 * P.C + g.c2 * P.S;
    r.m[2][1] = g.c2 * P.C + ssign * g.c1 * P.S;
    r.m[2][3] = poly34 + D1 * (P.Ct + poly34_shift) + D2 * P.St;
    return r;
}

} // namespace

Motion4 evaluate(const MotionSubgroup& g, double t) {
    return {assemble(g, t, 0), g.sig};
}

Mat4 evaluate_dt(const MotionSubgroup& g, double t) {
    return assemble(g, t, 1);
}

Mat4 evaluate_dtt(const MotionSubgroup& g, double t) {
    return assemble(g, t, 2);
}

MotionType classify(const MotionSubgroup& g) {
    const bool ab_zero = (g.a == 0.0 && g.b == 0.0);
    const bool shear_zero = (g.c1 == 0.0 && g.c2 == 0.0);
    if (g.phi != 0.0) {
        if (!g.pure_helicoidal())
            fail(Errc::Unclassifiable,
                 "phi != 0 combined with translation/shear rates is outside the seven types "
                 "(nearest cell: " +
                     motion_type_name(g.c == 0.0 ? MotionType::I_Rotation
                                                 : MotionType::II_Helicoidal) +
                     ")");
        return g.c == 0.0 ? MotionType::I_Rotation : MotionType::II_Helicoidal;
    }
    const double D1 = g.a * g.c1 + g.b * g.c2;
    if (D1 != 0.0) return MotionType::III_ParabolicRotation;
    if (g.c == 0.0 && !ab_zero && !shear_zero) return MotionType::IV_WarpedTranslation;
    if (ab_zero && g.c == 0.0 && !shear_zero) return MotionType::V_Shear;
    if (g.c == 0.0 && shear_zero && !ab_zero) return MotionType::VI_TranslationNonIsotropic;
    if (ab_zero && shear_zero && g.c != 0.0) return MotionType::VII_TranslationIsotropic;
    if (ab_zero && shear_zero && g.c == 0.0)
        fail(Errc::Unclassifiable,
             "identity subgroup (all parameters zero) is outside the seven types (nearest cell: " +
                 motion_type_name(MotionType::VII_TranslationIsotropic) + ")");
    // Remaining case: c != 0 with a translation or shear part but D1 = 0.
    fail(Errc::Unclassifiable,
         "c != 0 combined with translation/shear rates (and a c1 + b c2 = 0) is outside the "
         "seven types (nearest cell: " +
             motion_type_name(ab_zero ? MotionType::V_Shear
                                      : MotionType::VI_TranslationNonIsotropic) +
             ")");
}

int family_index(const MotionSubgroup& g) {
    try {
        return static_cast<int>(classify(g));
    } catch (const Error&) {
        return 8;
    }
}

} // namespace isosurf
