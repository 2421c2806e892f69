#ifndef ISOSURF_MOTION_HPP
#define ISOSURF_MOTION_HPP

#include <string>

#include "core/iso_core.hpp"

namespace isosurf {

struct Mat3 {
    double m[3][3] = {{0, 0, 0}, {0, 0, 0}, {0, 0, 0}};

    static Mat3 identity();
    double& operator()(int i, int j) { return m[i][j]; }
    double operator()(int i, int j) const { return m[i][j]; }
};

struct Mat4 {
    double m[4][4] = {{0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}};

    static Mat4 identity();
    double& operator()(int i, int j) { return m[i][j]; }
    double operator()(int i, int j) const { return m[i][j]; }
    Mat4 operator*(const Mat4& o) const;
    Mat4 operator-(const Mat4& o) const;
    double det() const;
    double norm_inf() const; // max |entry|
};

// Rigid motion of I^3 / I^3_p under the affine embedding (x,y,z) -> (x,y,z,1):
// block matrix [[A, a], [0, 1]] with A an isotropic orthogonal matrix.
struct Motion4 {
    Mat4 m;
    Signature sig = Signature::SimplyIsotropic;
};

// Membership test for the isotropic orthogonal group: the upper-left 2x2 block
// is a (Euclidean/Lorentzian) rotation matrix up to the sigma sign, the third
// column is (0,0,tau) with tau = +-1, and the third row is otherwise free.
// Tolerance 1e-12 per entry.
bool is_orthogonal_iso(const Mat3& A, Signature sig);

// Assembles [[A,a],[0,1]]; throws NotOrthogonal if A fails the membership test.
Motion4 make_motion(const Mat3& A, const Vec3& a, Signature sig);

// Matrix product; translation part of the result is A1 a2 + a1.
Motion4 compose(const Motion4& m1, const Motion4& m2);

// First three components of M (p,1)^T.
Vec3 apply(const Motion4& m, const Vec3& p);

// One-parameter subgroup of isotropic rigid motions.  phi is the rotation
// (boost) rate in the top view, (a,b) the top-view translation rates, c the
// isotropic translation rate and (c1,c2) the shear rates.  The convention for
// c is fixed so that evaluate() at phi = 0 is exactly the limit-motion matrix
// with (3,4)-entry c t + (a c1 + b c2) t^2/2; evaluation is continuous in phi.
struct MotionSubgroup {
    Signature sig = Signature::SimplyIsotropic;
    double phi = 0.0;
    double a = 0.0, b = 0.0;
    double c = 0.0;
    double c1 = 0.0, c2 = 0.0;

    bool pure_helicoidal() const { return a == 0.0 && b == 0.0 && c1 == 0.0 && c2 == 0.0; }
};

enum class MotionType {
    I_Rotation = 1,
    II_Helicoidal = 2,
    III_ParabolicRotation = 3,
    IV_WarpedTranslation = 4,
    V_Shear = 5,
    VI_TranslationNonIsotropic = 6,
    VII_TranslationIsotropic = 7,
};

std::string motion_type_name(MotionType t);

// Orbit of a point under the subgroup type: circle, helix, parabola or line.
std::string orbit_shape_name(MotionType t);

// The four auxiliary phase functions C_t, S_t, C~_t, S~_t (trigonometric for
// the simply isotropic signature, hyperbolic for the pseudo one).  For
// |phi| < 1e-4 the values come from Taylor expansions around the phi -> 0
// limits (t, 0, t(t-1)/2, 0); above the threshold, from algebraically reduced
// closed forms that avoid the 1-cos(phi) cancellation.
struct PhaseSums {
    double C = 0.0;  // C_t
    double S = 0.0;  // S_t
    double Ct = 0.0; // C~_t
    double St = 0.0; // S~_t
};

PhaseSums phase_sums(double phi, double t, Signature sig);
PhaseSums phase_sums_dt(double phi, double t, Signature sig);  // d/dt of each
PhaseSums phase_sums_dtt(double phi, double t, Signature sig); // d^2/dt^2 of each

// psi_t as a 4x4 motion, plus its first and second t-derivatives (entrywise).
Motion4 evaluate(const MotionSubgroup& g, double t);
Mat4 evaluate_dt(const MotionSubgroup& g, double t);
Mat4 evaluate_dtt(const MotionSubgroup& g, double t);

// Classification into the seven types.  Zero tests are exact comparisons with
// 0.0; parameter sets outside the seven cells (e.g. phi != 0 combined with a
// translation or shear part) throw Unclassifiable naming the nearest cell.
MotionType classify(const MotionSubgroup& g);

// classify() that reports the general/limit fallback instead of throwing:
// returns 8 for subgroups outside the seven printed cells.
int family_index(const MotionSubgroup& g);

} // namespace isosurf

#endif
