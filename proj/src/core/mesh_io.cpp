#include "core/mesh_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "core/errors.hpp"

namespace isosurf {

MeshOutput generate_mesh(const GenerateConfig& cfg) {
    const InvariantSurface s = invariant_surface(curve_from_json(cfg.curve_spec), cfg.subgroup);

    AdmissibilityReport rep = admissibility(s, cfg.domain, cfg.nu, cfg.nt);
    if (cfg.tol > 0.0) rep.admissible = rep.det_g_min > cfg.tol;
    if (!rep.admissible) {
        std::string why = "surface is not admissible on the requested domain (min |det g| = " +
                          std::to_string(rep.det_g_min) + ")";
        if (rep.obstruction) why += "; obstruction: " + *rep.obstruction;
        fail(Errc::NotAdmissible, why);
    }

    MeshOutput mesh;
    mesh.nu = cfg.nu;
    mesh.nt = cfg.nt;
    mesh.family = s.family().label();
    mesh.vertices.reserve(static_cast<std::size_t>(cfg.nu) * cfg.nt);
    for (int i = 0; i < cfg.nu; ++i) {
        const double u = cfg.domain.u0 + (cfg.domain.u1 - cfg.domain.u0) * i / (cfg.nu - 1);
        for (int j = 0; j < cfg.nt; ++j) {
            const double t = cfg.domain.t0 + (cfg.domain.t1 - cfg.domain.t0) * j / (cfg.nt - 1);
            mesh.us.push_back(u);
            mesh.ts.push_back(t);
            mesh.vertices.push_back(s.value(u, t));
            const FundamentalForms F = fundamental_forms(s, u, t);
            const CurvaturePair kp = curvatures_numeric(s, u, t);
            mesh.K.push_back(kp.K);
            mesh.H.push_back(kp.H);
            mesh.det_g.push_back(F.det_g());
        }
    }
    for (int i = 0; i + 1 < cfg.nu; ++i)
        for (int j = 0; j + 1 < cfg.nt; ++j) {
            const int v00 = i * cfg.nt + j;
            mesh.faces.push_back({v00, v00 + cfg.nt, v00 + cfg.nt + 1, v00 + 1});
        }
    return mesh;
}

namespace {
std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}
} // namespace

void write_obj(const MeshOutput& mesh, const std::string& path) {
    std::ofstream out(path);
    if (!out) fail(Errc::Io, "cannot open for writing: " + path);
    out << "# isosurf mesh, family " << mesh.family << "\n";
    for (const Vec3& v : mesh.vertices)
        out << "v " << fmt17(v.x) << ' ' << fmt17(v.y) << ' ' << fmt17(v.z) << '\n';
    for (const auto& f : mesh.faces)
        out << "f " << f[0] + 1 << ' ' << f[1] + 1 << ' ' << f[2] + 1 << ' ' << f[3] + 1 << '\n';
    if (!out) fail(Errc::Io, "write failed: " + path);
}

void write_csv(const MeshOutput& mesh, const std::string& path) {
    std::ofstream out(path);
    if (!out) fail(Errc::Io, "cannot open for writing: " + path);
    out << "u,t,x,y,z,K,H,det_g\n";
    for (std::size_t i = 0; i < mesh.vertices.size(); ++i) {
        const Vec3& v = mesh.vertices[i];
        out << fmt17(mesh.us[i]) << ',' << fmt17(mesh.ts[i]) << ',' << fmt17(v.x) << ','
            << fmt17(v.y) << ',' << fmt17(v.z) << ',' << fmt17(mesh.K[i]) << ','
            << fmt17(mesh.H[i]) << ',' << fmt17(mesh.det_g[i]) << '\n';
    }
    if (!out) fail(Errc::Io, "write failed: " + path);
}

ObjData read_obj(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(Errc::Io, "cannot open: " + path);
    ObjData data;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ss(line);
        std::string tag;
        ss >> tag;
        if (tag == "v") {
            Vec3 v;
            ss >> v.x >> v.y >> v.z;
            if (!ss) fail(Errc::Io, "malformed vertex line in " + path);
            data.vertices.push_back(v);
        } else if (tag == "f") {
            std::array<int, 4> f{};
            ss >> f[0] >> f[1] >> f[2] >> f[3];
            if (!ss) fail(Errc::Io, "malformed face line in " + path);
            for (int& idx : f) idx -= 1;
            data.faces.push_back(f);
        }
    }
    return data;
}

} // namespace isosurf
