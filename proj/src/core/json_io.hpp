#ifndef ISOSURF_JSON_IO_HPP
#define ISOSURF_JSON_IO_HPP

#include <optional>
#include <string>

#include <json.hpp>

#include "core/curve.hpp"
#include "core/motion.hpp"
#include "core/prescribed.hpp"
#include "core/surface.hpp"

namespace isosurf {

using Json = nlohmann::json;

inline constexpr const char* kSchemaTag = "isosurf/1";

// MotionSubgroup <-> {"signature","phi","a","b","c","c1","c2"}
Json subgroup_to_json(const MotionSubgroup& g);
MotionSubgroup subgroup_from_json(const Json& j);

// GeneratingCurve <- {"plane","kind","params"} (builtins only)
GeneratingCurve curve_from_json(const Json& j);

// CurvatureProfile <- {"kind":"constant"|"poly"|"sin","params":[...]}
// The domain comes from the surrounding config.
CurvatureProfile profile_from_json(const Json& j, double s_min, double s_max);

// Job configs for the CLI commands and the C API entry points.

struct GenerateConfig {
    MotionSubgroup subgroup;
    Json curve_spec;
    Rect domain;
    int nu = 64, nt = 64;
    double tol = 0.0; // 0 = library default admissibility threshold
    std::string name = "surface";
    std::optional<std::string> obj_path, csv_path, report_path;
};

struct SolveConfig {
    std::string solver; // K_helicoidal_ni | K_helicoidal_i | H_helicoidal_i |
                        // K_parabolic_i | H_parabolic_i
    Signature sig = Signature::SimplyIsotropic;
    CurvePlane plane = CurvePlane::XZ;
    int eps = 1;
    Json profile_spec;
    double s_min = 1.0, s_max = 2.0;
    double c0 = 0.0, c1 = 0.0; // k0/k1 resp. h0/h1
    double c = 0.0, phi = 0.0, a = 0.0, b = 0.0, cc1 = 0.0, cc2 = 0.0;
    int samples = 50;
    bool roundtrip = false;
    double quad_tol = 1e-10;
    std::optional<std::string> curve_csv_path, roundtrip_csv_path, report_path;
};

GenerateConfig generate_config_from_json(const Json& j);
SolveConfig solve_config_from_json(const Json& j);

// Parses a JSON document, failing with Errc::Config on malformed input.
Json parse_json(const std::string& text);
Json load_json_file(const std::string& path);

// Applies "key.path=value" overrides (values parsed as JSON when possible,
// else kept as strings).  Flags win over the config file.
void apply_override(Json& j, const std::string& dotted_key, const std::string& value);

} // namespace isosurf

#endif
