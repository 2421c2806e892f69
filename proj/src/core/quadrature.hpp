#ifndef ISOSURF_QUADRATURE_HPP
#define ISOSURF_QUADRATURE_HPP

#include <functional>

namespace isosurf {

// Adaptive Simpson rule with absolute error target tol; maximum recursion
// depth 40, beyond which NoConvergence is thrown.  Nested calls are fine, so
// iterated double integrals just call quad inside the integrand.
double quad(const std::function<double(double)>& f, double lo, double hi, double tol = 1e-10);

} // namespace isosurf

#endif
