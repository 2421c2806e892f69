#ifndef ISOSURF_MESH_IO_HPP
#define ISOSURF_MESH_IO_HPP

#include <array>
#include <string>
#include <vector>

#include "core/curvature.hpp"
#include "core/json_io.hpp"
#include "core/surface.hpp"

namespace isosurf {

// Grid sample of a surface with per-vertex curvature attributes.  Vertices
// are stored row-major in u (u-index outer, t-index inner); faces are quads
// with 0-based corner indices.
struct MeshOutput {
    int nu = 0, nt = 0;
    std::vector<Vec3> vertices;
    std::vector<std::array<int, 4>> faces;
    std::vector<double> us, ts; // per-vertex parameters
    std::vector<double> K, H, det_g;
    std::string family;
};

// Samples the configured surface.  Runs the admissibility check on the same
// grid first and throws NotAdmissible (naming the printed obstruction when
// recognized) if it fails, so every emitted attribute is finite.
MeshOutput generate_mesh(const GenerateConfig& cfg);

// OBJ with "v x y z" lines at 17 significant digits and 1-based quad faces.
void write_obj(const MeshOutput& mesh, const std::string& path);
void write_csv(const MeshOutput& mesh, const std::string& path);

struct ObjData {
    std::vector<Vec3> vertices;
    std::vector<std::array<int, 4>> faces; // 0-based
};

ObjData read_obj(const std::string& path);

} // namespace isosurf

#endif
