#ifndef ISOSURF_SURFACE_HPP
#define ISOSURF_SURFACE_HPP

#include <array>
#include <functional>
#include <optional>
#include <string>

#include "core/curve.hpp"
#include "core/iso_core.hpp"
#include "core/motion.hpp"

namespace isosurf {

// Parameterized surface patch with analytic first and second partials.
struct SurfaceMap {
    virtual ~SurfaceMap() = default;
    virtual Signature signature() const = 0;
    virtual Vec3 value(double u, double t) const = 0;
    virtual Vec3 du(double u, double t) const = 0;
    virtual Vec3 dt(double u, double t) const = 0;
    virtual Vec3 duu(double u, double t) const = 0;
    virtual Vec3 dut(double u, double t) const = 0;
    virtual Vec3 dtt(double u, double t) const = 0;
};

// Normal-form graph (u, v, Z(u,v)); handy for spheres and oracle checks.
class GraphSurface : public SurfaceMap {
public:
    GraphSurface(Signature sig, std::function<double(double, double)> z,
                 std::function<double(double, double)> zu, std::function<double(double, double)> zv,
                 std::function<double(double, double)> zuu,
                 std::function<double(double, double)> zuv,
                 std::function<double(double, double)> zvv);

    Signature signature() const override { return sig_; }
    Vec3 value(double u, double t) const override { return {u, t, z_(u, t)}; }
    Vec3 du(double u, double t) const override { return {1.0, 0.0, zu_(u, t)}; }
    Vec3 dt(double u, double t) const override { return {0.0, 1.0, zv_(u, t)}; }
    Vec3 duu(double u, double t) const override { return {0.0, 0.0, zuu_(u, t)}; }
    Vec3 dut(double u, double t) const override { return {0.0, 0.0, zuv_(u, t)}; }
    Vec3 dtt(double u, double t) const override { return {0.0, 0.0, zvv_(u, t)}; }

private:
    Signature sig_;
    std::function<double(double, double)> z_, zu_, zv_, zuu_, zuv_, zvv_;
};

// Family cell: index 1..7 for the classified types, 8 for general subgroups;
// together with the generating plane this selects the printed family, e.g.
// "Y3" (ni-type), "Z2" (i-type, xz), "Wh6" (i-type, yz, pseudo only).
struct FamilyTag {
    int index = 0;
    CurvePlane plane = CurvePlane::XY;
    Signature sig = Signature::SimplyIsotropic;

    bool helicoidal() const { return index == 1 || index == 2; }
    bool limit() const { return index >= 3 && index <= 7; }
    std::string label() const;
};

// Surface swept by a generating curve under a 1-parameter subgroup:
// x(u,t) = psi_t(alpha(u)).  Partials in t come from the closed-form matrix
// derivatives, partials in u from the curve's derivative contract.
class InvariantSurface : public SurfaceMap {
public:
    InvariantSurface(GeneratingCurve curve, MotionSubgroup group);

    Signature signature() const override { return group_.sig; }
    const GeneratingCurve& curve() const { return curve_; }
    const MotionSubgroup& group() const { return group_; }
    const FamilyTag& family() const { return family_; }

    Vec3 value(double u, double t) const override;
    Vec3 du(double u, double t) const override;
    Vec3 dt(double u, double t) const override;
    Vec3 duu(double u, double t) const override;
    Vec3 dut(double u, double t) const override;
    Vec3 dtt(double u, double t) const override;

private:
    GeneratingCurve curve_;
    MotionSubgroup group_;
    FamilyTag family_;
};

// Throws IncompatiblePlane for a YZ curve in the simply isotropic signature.
InvariantSurface invariant_surface(GeneratingCurve curve, MotionSubgroup group);

struct Rect {
    double u0 = 0.0, u1 = 1.0;
    double t0 = 0.0, t1 = 1.0;
};

struct AdmissibilityReport {
    bool admissible = false;
    double det_g_min = 0.0; // minimum |det g| over the sample grid
    double witness_u = 0.0, witness_t = 0.0;
    std::optional<std::string> obstruction;
};

// Samples det g on a grid (default 64x64); the zero test is scale-aware:
// admissible iff min |det g| > 1e-10 * scale^4 with scale the largest
// top-view tangent magnitude seen.  When the family has a printed degenerate
// case, the symbolic condition is checked along the curve samples and named.
AdmissibilityReport admissibility(const InvariantSurface& s, const Rect& domain, int nu = 64,
                                  int nt = 64);

// True iff the orbits t -> psi_t(q) through sampled curve points have
// identically vanishing second t-derivative (max over samples <= 1e-10).
bool is_ruled(const InvariantSurface& s);

enum class NormalFormKind { PlusPlus, PlusMinus, CrossTerm };

// Flat chart for the helicoidal and parabolic families.  map() is the printed
// coordinate change (with U0 = T0 = 0); frame() holds the coefficients of the
// 1-forms dU, dT obtained by completing squares, whose pullback
// dU^2 + dT^2 / dU^2 - dT^2 / dU dT reproduces the first fundamental form.
struct Chart {
    NormalFormKind kind = NormalFormKind::PlusPlus;
    std::function<std::array<double, 2>(double, double)> map;
    // row-major [dU/du, dU/dt, dT/du, dT/dt]
    std::function<std::array<double, 4>(double, double)> frame;

    double jacobian(double u, double t) const {
        const auto f = frame(u, t);
        return f[0] * f[3] - f[1] * f[2];
    }
    // coefficients (g11, g12, g22) of the pulled-back flat form
    std::array<double, 3> pullback(double u, double t) const;
};

// Throws ChartUnavailable for families V, VII, general (8) and the pseudo
// timelike (YZ) cells, which have no printed chart.
Chart normal_form_chart(const InvariantSurface& s);

} // namespace isosurf

#endif
