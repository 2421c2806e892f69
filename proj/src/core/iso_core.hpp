#ifndef ISOSURF_ISO_CORE_HPP
#define ISOSURF_ISO_CORE_HPP

#include <cmath>
#include <string>

namespace isosurf {

// The two ambient geometries: R^3 with the rank-2 metric dx^2 + sigma dy^2,
// sigma = +1 (simply isotropic) or -1 (pseudo-isotropic).  The z-direction is
// the null direction of both metrics; distances along it are measured by the
// codistance, a second metric that takes over where the first one vanishes.
// (The pair is a hierarchy, not a single bilinear form defined by cases.)
enum class Signature { SimplyIsotropic, PseudoIsotropic };

inline double metric_sign(Signature sig) {
    return sig == Signature::SimplyIsotropic ? 1.0 : -1.0;
}

std::string signature_name(Signature sig);
Signature signature_from_name(const std::string& name);

struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;

    Vec3() = default;
    Vec3(double x_, double y_, double z_) : x(x_), y(y_), z(z_) {}

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    Vec3 operator-() const { return {-x, -y, -z}; }

    double norm_inf() const {
        return std::max(std::abs(x), std::max(std::abs(y), std::abs(z)));
    }
};

inline Vec3 operator*(double s, const Vec3& v) { return v * s; }

using IsoVector = Vec3;

enum class CausalCharacter { Spacelike, Timelike, Lightlike };

std::string causal_character_name(CausalCharacter c);

// Degenerate inner product: u1 v1 + sigma u2 v2; z never contributes.
double dot(const Vec3& u, const Vec3& v, Signature sig);

// Non-degenerate ambient product (Euclidean resp. Lorentzian); used for
// pairing relative normals with second derivatives.
double ambient_dot(const Vec3& u, const Vec3& v, Signature sig);

// |v3 - u3|; the secondary metric, meaningful for vectors with equal top view.
double codistance(const Vec3& u, const Vec3& v);

// Projection onto the xy-plane.
Vec3 top_view(const Vec3& u);

// Euclidean cross product for the simply isotropic signature; the Lorentzian
// variant (u2 v3 - u3 v2, u1 v3 - u3 v1, u1 v2 - u2 v1) for the pseudo one.
Vec3 cross(const Vec3& u, const Vec3& v, Signature sig);

// Sign of dot(u,u,sig): > 0 spacelike, < 0 timelike, exact 0 lightlike.
// Callers needing a tolerance compare dot(u,u,sig) themselves.
CausalCharacter causal_character(const Vec3& u, Signature sig);

} // namespace isosurf

#endif
