#include "core/iso_core.hpp"

#include "core/errors.hpp"

namespace isosurf {

std::string signature_name(Signature sig) {
    return sig == Signature::SimplyIsotropic ? "simply" : "pseudo";
}

Signature signature_from_name(const std::string& name) {
    if (name == "simply" || name == "simply_isotropic")
        return Signature::SimplyIsotropic;
    if (name == "pseudo" || name == "pseudo_isotropic")
        return Signature::PseudoIsotropic;
    fail(Errc::Config, "unknown signature '" + name + "' (expected \"simply\" or \"pseudo\")");
}

std::string causal_character_name(CausalCharacter c) {
    switch (c) {
    case CausalCharacter::Spacelike: return "spacelike";
    case CausalCharacter::Timelike: return "timelike";
    default: return "lightlike";
    }
}

double dot(const Vec3& u, const Vec3& v, Signature sig) {
    return u.x * v.x + metric_sign(sig) * u.y * v.y;
}

double ambient_dot(const Vec3& u, const Vec3& v, Signature sig) {
    return u.x * v.x + metric_sign(sig) * u.y * v.y + u.z * v.z;
}

double codistance(const Vec3& u, const Vec3& v) {
    return std::abs(v.z - u.z);
}

Vec3 top_view(const Vec3& u) {
    return {u.x, u.y, 0.0};
}

Vec3 cross(const Vec3& u, const Vec3& v, Signature sig) {
    if (sig == Signature::SimplyIsotropic)
        return {u.y * v.z - u.z * v.y, u.z * v.x - u.x * v.z, u.x * v.y - u.y * v.x};
    return {u.y * v.z - u.z * v.y, u.x * v.z - u.z * v.x, u.x * v.y - u.y * v.x};
}

CausalCharacter causal_character(const Vec3& u, Signature sig) {
    const double q = dot(u, u, sig);
    if (q > 0.0) return CausalCharacter::Spacelike;
    if (q < 0.0) return CausalCharacter::Timelike;
    return CausalCharacter::Lightlike;
}

} // namespace isosurf
