#include "core/quadrature.hpp"

#include <cmath>

#include "core/errors.hpp"

namespace isosurf {

namespace {

constexpr int kMaxDepth = 40;

double simpson(double fa, double fm, double fb, double a, double b) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adapt(const std::function<double(double)>& f, double a, double b, double fa, double fm,
             double fb, double whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = simpson(fa, flm, fm, a, m);
    const double right = simpson(fm, frm, fb, m, b);
    const double delta = left + right - whole;
    if (std::abs(delta) <= 15.0 * tol || !(std::isfinite(delta)))
        return left + right + delta / 15.0;
    if (depth >= kMaxDepth)
        fail(Errc::NoConvergence, "adaptive quadrature hit the subdivision limit");
    return adapt(f, a, m, fa, flm, fm, left, 0.5 * tol, depth + 1) +
           adapt(f, m, b, fm, frm, fb, right, 0.5 * tol, depth + 1);
}

} // namespace

double quad(const std::function<double(double)>& f, double lo, double hi, double tol) {
    if (!(tol > 0.0)) fail(Errc::InvalidArgument, "quadrature tolerance must be positive");
    if (lo == hi) return 0.0;
    if (hi < lo) return -quad(f, hi, lo, tol);
    const double fa = f(lo), fb = f(hi), fm = f(0.5 * (lo + hi));
    const double whole = simpson(fa, fm, fb, lo, hi);
    return adapt(f, lo, hi, fa, fm, fb, whole, tol, 0);
}

} // namespace isosurf
