#include "core/verify.hpp"

#include <chrono>
#include <cmath>
#include <random>

#include "core/curvature.hpp"
#include "core/prescribed.hpp"
#include "core/quadrature.hpp"

namespace isosurf {

namespace {

double rel_err(double a, double b) {
    return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)});
}

MotionSubgroup sg(Signature sig, double phi, double a, double b, double c, double c1, double c2) {
    return MotionSubgroup{sig, phi, a, b, c, c1, c2};
}

GeneratingCurve ni_curve() {
    return GeneratingCurve::graph(CurvePlane::XY, {2.0, 0.3, 0.12});
}
GeneratingCurve i_curve(CurvePlane plane) {
    return GeneratingCurve::graph(plane, {0.5, 0.4, 0.15});
}

std::vector<FamilyCell> cells_for(Signature sig) {
    const double phi = sig == Signature::SimplyIsotropic ? 1.1 : 0.7;
    std::vector<FamilyCell> cells;
    std::vector<CurvePlane> planes{CurvePlane::XY, CurvePlane::XZ};
    if (sig == Signature::PseudoIsotropic) planes.push_back(CurvePlane::YZ);
    for (CurvePlane plane : planes) {
        const bool ni = plane == CurvePlane::XY;
        GeneratingCurve curve = ni ? ni_curve() : i_curve(plane);
        const double u0 = ni ? 0.3 : 0.8;
        const double u1 = ni ? 1.5 : 2.0;
        auto add = [&](const char* suffix, const MotionSubgroup& g) {
            FamilyCell cell{"", g, curve, u0, u1};
            cell.label = InvariantSurface(curve, g).family().label() + std::string("/") + suffix;
            cells.push_back(std::move(cell));
        };
        add("revolution", sg(sig, phi, 0, 0, 0, 0, 0));
        add("helicoidal", sg(sig, phi, 0, 0, 0.8, 0, 0));
        add("parabolic", sg(sig, 0, 0.7, 1.3, 0.4, 0.5, 0.3));
        add("warped", sg(sig, 0, 0.6, 1.2, 0, 1.0, -0.5)); // a c1 + b c2 = 0
        add("translation", sg(sig, 0, 0.9, 0.4, 0, 0, 0));
    }
    return cells;
}

} // namespace

std::vector<FamilyCell> closed_form_cells() {
    std::vector<FamilyCell> cells = cells_for(Signature::SimplyIsotropic);
    for (auto& c : cells_for(Signature::PseudoIsotropic)) cells.push_back(std::move(c));
    return cells;
}

std::vector<FamilyCell> admissible_cells() {
    std::vector<FamilyCell> cells = closed_form_cells();
    cells.push_back({"Y8/general",
                     sg(Signature::SimplyIsotropic, 0.9, 0.4, 0.2, 0.3, 0.25, -0.35), ni_curve(),
                     0.3, 1.5});
    cells.push_back({"Z8/general",
                     sg(Signature::SimplyIsotropic, 0.9, 0.4, 0.2, 0.3, 0.25, -0.35),
                     i_curve(CurvePlane::XZ), 0.8, 2.0});
    cells.push_back({"Yh8/general",
                     sg(Signature::PseudoIsotropic, 0.5, 0.3, 0.15, 0.2, 0.2, -0.25), ni_curve(),
                     0.3, 1.5});
    cells.push_back({"Zh8/general",
                     sg(Signature::PseudoIsotropic, 0.5, 0.3, 0.15, 0.2, 0.2, -0.25),
                     i_curve(CurvePlane::XZ), 0.8, 2.0});
    return cells;
}

namespace {

std::vector<MotionSubgroup> random_subgroups(Signature sig, int n, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    const double phi_max = sig == Signature::SimplyIsotropic ? 2.5 : 1.2;
    std::vector<MotionSubgroup> out;
    out.reserve(n);
    for (int i = 0; i < n; ++i) {
        MotionSubgroup g;
        g.sig = sig;
        // every fifth subgroup exercises the small-phi series branch
        g.phi = (i % 5 == 4) ? 1e-6 * (1.0 + unit(rng)) : phi_max * unit(rng);
        g.a = 2.0 * unit(rng);
        g.b = 2.0 * unit(rng);
        g.c = 2.0 * unit(rng);
        g.c1 = 2.0 * unit(rng);
        g.c2 = 2.0 * unit(rng);
        out.push_back(g);
    }
    return out;
}

} // namespace

SuiteResult suite_group_law(std::uint64_t seed) {
    SuiteResult res{"group_law", false, 0.0, 1e-9, ""};
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> range(-3.0, 3.0);
    const auto start = std::chrono::steady_clock::now();
    for (Signature sig : {Signature::SimplyIsotropic, Signature::PseudoIsotropic}) {
        for (const MotionSubgroup& g : random_subgroups(sig, 100, rng)) {
            const double s = range(rng), t = range(rng);
            const Mat4 lhs = evaluate(g, s + t).m;
            const Mat4 rhs = (evaluate(g, s).m * evaluate(g, t).m);
            res.max_error = std::max(res.max_error, (lhs - rhs).norm_inf());
        }
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    res.pass = res.max_error <= res.tolerance && secs < 1.0;
    res.detail = "100 subgroups per signature, s,t in [-3,3]; runtime " + std::to_string(secs) + " s";
    return res;
}

SuiteResult suite_determinant(std::uint64_t seed) {
    SuiteResult res{"determinant", false, 0.0, 1e-10, ""};
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> range(-3.0, 3.0);
    for (Signature sig : {Signature::SimplyIsotropic, Signature::PseudoIsotropic}) {
        for (const MotionSubgroup& g : random_subgroups(sig, 100, rng)) {
            const double t = range(rng);
            res.max_error = std::max(res.max_error, std::abs(evaluate(g, t).m.det() - 1.0));
        }
    }
    res.pass = res.max_error <= res.tolerance;
    res.detail = "det psi_t = 1 across the group-law sample";
    return res;
}

SuiteResult suite_differential() {
    SuiteResult res{"differential", false, 0.0, 1e-6, ""};
    double max_tdep = 0.0;
    std::string worst;
    for (const FamilyCell& cell : closed_form_cells()) {
        const InvariantSurface s(cell.curve, cell.group);
        for (int i = 0; i < 50; ++i) {
            const double u = cell.u0 + (cell.u1 - cell.u0) * i / 49.0;
            const CurvaturePair closed = curvatures_closed_form(s, u);
            CurvaturePair at_t0{};
            for (int j = 0; j < 5; ++j) {
                const double t = -0.8 + 0.4 * j;
                const CurvaturePair num = curvatures_numeric(s, u, t);
                if (j == 0) at_t0 = num;
                max_tdep = std::max({max_tdep,
                                     std::abs(num.K - at_t0.K) / std::max(1.0, std::abs(at_t0.K)),
                                     std::abs(num.H - at_t0.H) / std::max(1.0, std::abs(at_t0.H))});
                const double e = std::max(rel_err(closed.K, num.K), rel_err(closed.H, num.H));
                if (e > res.max_error) {
                    res.max_error = e;
                    worst = cell.label;
                }
            }
        }
    }
    res.pass = res.max_error <= res.tolerance && max_tdep <= 1e-8;
    res.detail = std::to_string(closed_form_cells().size()) +
                 " cells, 50x5 samples; worst cell " + worst +
                 "; t-dependence " + std::to_string(max_tdep) + " (<= 1e-8)";
    return res;
}

SuiteResult suite_sphere_invariance() {
    SuiteResult res{"sphere_invariance", false, 0.0, 1e-10, ""};
    const double p = 1.6;
    struct Cfg {
        MotionSubgroup g;
        CurvePlane plane;
        double qsign; // z = (x^2 + qsign y^2) / (2p)
    };
    const double c1 = 0.6, c2 = -0.45;
    std::vector<Cfg> cfgs{
        {sg(Signature::SimplyIsotropic, 1.3, 0, 0, 0, 0, 0), CurvePlane::XZ, 1.0},
        {sg(Signature::SimplyIsotropic, 0, p * c1, p * c2, 0, c1, c2), CurvePlane::XZ, 1.0},
        {sg(Signature::PseudoIsotropic, 0.8, 0, 0, 0, 0, 0), CurvePlane::XZ, -1.0},
        {sg(Signature::PseudoIsotropic, 0, p * c1, -p * c2, 0, c1, c2), CurvePlane::XZ, -1.0},
    };
    for (const Cfg& cfg : cfgs) {
        const InvariantSurface s(GeneratingCurve::parabola(cfg.plane, p), cfg.g);
        for (int i = 0; i <= 12; ++i)
            for (int j = 0; j <= 12; ++j) {
                const double u = -1.2 + 2.4 * i / 12.0, t = -1.0 + 2.0 * j / 12.0;
                const Vec3 v = s.value(u, t);
                const double resid = v.z - (v.x * v.x + cfg.qsign * v.y * v.y) / (2.0 * p);
                res.max_error = std::max(res.max_error, std::abs(resid));
            }
    }
    // timelike pseudo cells sweep the mirrored quadric z = (y^2 - x^2)/(2p)
    std::vector<Cfg> mirrored{
        {sg(Signature::PseudoIsotropic, 0.8, 0, 0, 0, 0, 0), CurvePlane::YZ, 0.0},
        {sg(Signature::PseudoIsotropic, 0, -p * c1, p * c2, 0, c1, c2), CurvePlane::YZ, 0.0},
    };
    for (const Cfg& cfg : mirrored) {
        const InvariantSurface s(GeneratingCurve::parabola(cfg.plane, p), cfg.g);
        for (int i = 0; i <= 12; ++i)
            for (int j = 0; j <= 12; ++j) {
                const double u = -1.2 + 2.4 * i / 12.0, t = -1.0 + 2.0 * j / 12.0;
                const Vec3 v = s.value(u, t);
                const double resid = v.z - (v.y * v.y - v.x * v.x) / (2.0 * p);
                res.max_error = std::max(res.max_error, std::abs(resid));
            }
    }

    // normal-form graph of the p = 2 sphere: K must be 1/p^2 = 0.25
    const double ps = 2.0;
    GraphSurface sphere(
        Signature::SimplyIsotropic,
        [ps](double u, double v) { return (u * u + v * v) / (2.0 * ps); },
        [ps](double u, double) { return u / ps; }, [ps](double, double v) { return v / ps; },
        [ps](double, double) { return 1.0 / ps; }, [](double, double) { return 0.0; },
        [ps](double, double) { return 1.0 / ps; });
    const double k_err = std::abs(curvatures_numeric(sphere, 0.4, -0.3).K - 0.25);
    res.pass = res.max_error <= res.tolerance && k_err <= 1e-8;
    res.detail = "6 sweep configs on the quadric; graph K error " + std::to_string(k_err) +
                 " (<= 1e-8)";
    return res;
}

namespace {

struct RoundTripCell {
    std::string name;
    std::function<SolverOutput(const CurvatureProfile&)> solve;
    std::function<InvariantSurface(const SolverOutput&)> rebuild;
    bool is_K = true;
};

std::vector<RoundTripCell> round_trip_cells() {
    std::vector<RoundTripCell> cells;
    const Signature S = Signature::SimplyIsotropic;
    const Signature P = Signature::PseudoIsotropic;

    cells.push_back({"K_hel_ni/simply",
                     [=](const CurvatureProfile& K) {
                         return solve_K_helicoidal_ni(K, 1.0, 1.0, 25.0, 1.0, S);
                     },
                     [=](const SolverOutput& out) {
                         return InvariantSurface(out.curve, sg(S, 1.0, 0, 0, 1.0, 0, 0));
                     }});
    cells.push_back({"K_hel_ni/pseudo",
                     [=](const CurvatureProfile& K) {
                         return solve_K_helicoidal_ni(K, 1.0, 1.0, 25.0, 1.0, P, -1);
                     },
                     [=](const SolverOutput& out) {
                         return InvariantSurface(out.curve, sg(P, 1.0, 0, 0, 1.0, 0, 0));
                     }});
    cells.push_back({"K_hel_i/simply",
                     [=](const CurvatureProfile& K) {
                         return solve_K_helicoidal_i(K, 1.0, 2.0, 0.5, 3.0, S);
                     },
                     [=](const SolverOutput& out) {
                         return InvariantSurface(out.curve, sg(S, 2.0, 0, 0, 1.0, 0, 0));
                     }});
    cells.push_back({"K_hel_i/pseudo_xz",
                     [=](const CurvatureProfile& K) {
                         return solve_K_helicoidal_i(K, 1.0, 2.0, 0.5, 2.0, P);
                     },
                     [=](const SolverOutput& out) {
                         return InvariantSurface(out.curve, sg(P, 2.0, 0, 0, 1.0, 0, 0));
                     }});
    cells.push_back({"K_hel_i/pseudo_yz",
                     [=](const CurvatureProfile& K) {
                         return solve_K_helicoidal_i(K, 1.0, 2.0, 0.5, 2.0, P, CurvePlane::YZ);
                     },
                     [=](const SolverOutput& out) {
                         return InvariantSurface(out.curve, sg(P, 2.0, 0, 0, 1.0, 0, 0));
                     }});
    cells.push_back({"H_hel_i/simply",
                     [=](const CurvatureProfile& H) {
                         return solve_H_helicoidal_i(H, 0.2, 0.7, S);
                     },
                     [=](const SolverOutput& out) {
                         return InvariantSurface(out.curve, sg(S, 1.4, 0, 0, 0.5, 0, 0));
                     },
                     false});
    cells.push_back({"H_hel_i/pseudo_space",
                     [=](const CurvatureProfile& H) {
                         return solve_H_helicoidal_i(H, 0.2, 0.7, P, +1);
                     },
                     [=](const SolverOutput& out) {
                         return InvariantSurface(out.curve, sg(P, 1.4, 0, 0, 0.5, 0, 0));
                     },
                     false});
    cells.push_back({"H_hel_i/pseudo_time",
                     [=](const CurvatureProfile& H) {
                         return solve_H_helicoidal_i(H, 0.2, 0.7, P, -1);
                     },
                     [=](const SolverOutput& out) {
                         return InvariantSurface(out.curve, sg(P, 1.4, 0, 0, 0.5, 0, 0));
                     },
                     false});

    const double a = 0.8, b = 1.1, cc1 = 0.6, cc2 = 0.4;
    cells.push_back({"K_para_i/simply",
                     [=](const CurvatureProfile& K) {
                         return solve_K_parabolic_i(K, a, b, cc1, cc2, 0.1, 0.3, S);
                     },
                     [=](const SolverOutput& out) {
                         return InvariantSurface(out.curve, sg(S, 0, a, b, 0, cc1, cc2));
                     }});
    cells.push_back({"K_para_i/pseudo_xz",
                     [=](const CurvatureProfile& K) {
                         return solve_K_parabolic_i(K, a, b, cc1, cc2, 0.1, 0.3, P);
                     },
                     [=](const SolverOutput& out) {
                         return InvariantSurface(out.curve, sg(P, 0, a, b, 0, cc1, cc2));
                     }});
    cells.push_back({"K_para_i/pseudo_yz",
                     [=](const CurvatureProfile& K) {
                         return solve_K_parabolic_i(K, 1.1, 0.8, 0.4, 0.6, 0.1, 0.3, P,
                                                    CurvePlane::YZ);
                     },
                     [=](const SolverOutput& out) {
                         return InvariantSurface(out.curve, sg(P, 0, 1.1, 0.8, 0, 0.4, 0.6));
                     }});
    cells.push_back({"H_para_i/simply",
                     [=](const CurvatureProfile& H) {
                         return solve_H_parabolic_i(H, a, b, cc1, cc2, 0.1, 0.3, S);
                     },
                     [=](const SolverOutput& out) {
                         return InvariantSurface(out.curve, sg(S, 0, a, b, 0, cc1, cc2));
                     },
                     false});
    cells.push_back({"H_para_i/pseudo_xz",
                     [=](const CurvatureProfile& H) {
                         return solve_H_parabolic_i(H, a, b, cc1, cc2, 0.1, 0.3, P);
                     },
                     [=](const SolverOutput& out) {
                         return InvariantSurface(out.curve, sg(P, 0, a, b, 0, cc1, cc2));
                     },
                     false});
    cells.push_back({"H_para_i/pseudo_yz",
                     [=](const CurvatureProfile& H) {
                         return solve_H_parabolic_i(H, 1.1, 0.8, 0.4, 0.6, 0.1, 0.3, P,
                                                    CurvePlane::YZ);
                     },
                     [=](const SolverOutput& out) {
                         return InvariantSurface(out.curve, sg(P, 0, 1.1, 0.8, 0, 0.4, 0.6));
                     },
                     false});
    return cells;
}

} // namespace

SuiteResult suite_round_trip() {
    SuiteResult res{"round_trip", false, 0.0, 1e-5, ""};
    std::string worst;
    for (const RoundTripCell& cell : round_trip_cells()) {
        const bool ni = cell.name.rfind("K_hel_ni", 0) == 0;
        const double s_lo = ni ? 0.0 : 1.0;
        const double s_hi = ni ? 0.5 : 2.0;
        for (double value : {-0.5, 0.0, 0.5}) {
            const CurvatureProfile prof = CurvatureProfile::constant(value, s_lo, s_hi);
            const SolverOutput out = cell.solve(prof);
            const InvariantSurface surf = cell.rebuild(out);
            const double lo = out.valid_lo + 0.02 * (out.valid_hi - out.valid_lo);
            const double hi = out.valid_hi - 0.02 * (out.valid_hi - out.valid_lo);
            for (int i = 0; i <= 10; ++i) {
                const double s = lo + (hi - lo) * i / 10.0;
                for (double t : {-0.4, 0.3}) {
                    const CurvaturePair num = curvatures_numeric(surf, s, t);
                    const double got = cell.is_K ? num.K : num.H;
                    const double err = std::abs(got - prof.f(s));
                    if (err > res.max_error) {
                        res.max_error = err;
                        worst = cell.name + "@" + std::to_string(value);
                    }
                }
            }
        }
    }
    res.pass = res.max_error <= res.tolerance;
    res.detail = "14 solver cells x {-0.5, 0, 0.5}; worst " + worst;
    return res;
}

SuiteResult suite_closed_forms() {
    SuiteResult res{"closed_forms", false, 0.0, 1e-8, ""};
    auto track = [&](double err) { res.max_error = std::max(res.max_error, err); };

    // Flat helicoidal, simply: arctan closed form.
    {
        const double c = 1.0, phi = 2.0, k0 = 0.5, k1 = 3.0, s0 = 1.0;
        const CurvatureProfile K0 = CurvatureProfile::constant(0.0, s0, 2.0);
        const SolverOutput out = solve_K_helicoidal_i(K0, c, phi, k0, k1, Signature::SimplyIsotropic);
        auto F = [&](double s) {
            const double W = std::sqrt(k1 - c * c / (phi * phi * s * s));
            return s * W + (c / phi) * std::atan(c / (phi * s * W));
        };
        for (int i = 0; i <= 20; ++i) {
            const double s = s0 + i * 0.05;
            track(std::abs(out.curve.g(s) - (k0 + F(s) - F(s0))));
        }
    }
    // Flat helicoidal, pseudo: log closed form.
    {
        const double c = 1.0, phi = 2.0, k0 = 0.5, k1 = 2.0, s0 = 1.0;
        const CurvatureProfile K0 = CurvatureProfile::constant(0.0, s0, 2.0);
        const SolverOutput out = solve_K_helicoidal_i(K0, c, phi, k0, k1, Signature::PseudoIsotropic);
        auto F = [&](double s) {
            const double W = std::sqrt(k1 + c * c / (phi * phi * s * s));
            return s * W - (c / phi) * std::log(c / (phi * s) + W);
        };
        for (int i = 0; i <= 20; ++i) {
            const double s = s0 + i * 0.05;
            track(std::abs(out.curve.g(s) - (k0 + F(s) - F(s0))));
        }
    }
    // Constant-K revolution (c = 0), positive and negative K0.
    for (double K0v : {0.5, -0.5}) {
        const double k0 = 0.2, k1 = 3.0, s0 = 1.0;
        const CurvatureProfile Kc = CurvatureProfile::constant(K0v, s0, 2.0);
        const SolverOutput out =
            solve_K_helicoidal_i(Kc, 0.0, 1.0, k0, k1, Signature::SimplyIsotropic);
        const double kk = k1 - K0v * s0 * s0; // z'^2 = kk + K0 s^2
        auto F = [&](double s) {
            const double W = std::sqrt(kk + K0v * s * s);
            if (K0v > 0.0)
                return s * W / 2.0 + (kk / (2.0 * std::sqrt(K0v))) *
                                         std::log(std::sqrt(K0v) * s + W);
            return s * W / 2.0 +
                   (kk / (2.0 * std::sqrt(-K0v))) * std::asin(std::sqrt(-K0v / kk) * s);
        };
        for (int i = 0; i <= 20; ++i) {
            const double s = s0 + i * 0.05;
            track(std::abs(out.curve.g(s) - (k0 + F(s) - F(s0))));
        }
    }
    // CMC helicoidal (both signatures) and the minimal logarithmoid.
    for (Signature sig : {Signature::SimplyIsotropic, Signature::PseudoIsotropic}) {
        for (int eps : {1, -1}) {
            if (sig == Signature::SimplyIsotropic && eps == -1) continue;
            for (double H0 : {0.5, 0.0}) {
                const double h0 = 0.2, h1 = 0.7, s0 = 1.0;
                const CurvatureProfile Hc = CurvatureProfile::constant(H0, s0, 2.2);
                const SolverOutput out = solve_H_helicoidal_i(Hc, h0, h1, sig, eps);
                const double e = sig == Signature::PseudoIsotropic ? eps : 1;
                for (int i = 0; i <= 20; ++i) {
                    const double s = s0 + i * 0.06;
                    const double want =
                        h0 + h1 * std::log(s) +
                        e * H0 * ((s * s - s0 * s0) / 2.0 - s0 * s0 * std::log(s / s0));
                    track(std::abs(out.curve.g(s) - want));
                }
            }
        }
    }
    // Constant-curvature parabolic revolution quadratics.
    {
        const double a = 0.8, b = 1.1, c1 = 0.6, c2 = 0.4, s0 = 0.5;
        const double D1 = a * c1 + b * c2;
        for (Signature sig : {Signature::SimplyIsotropic, Signature::PseudoIsotropic}) {
            const double bs = sig == Signature::SimplyIsotropic ? 1.0 : -1.0;
            for (double K0 : {0.5, -0.5}) {
                const CurvatureProfile Kc = CurvatureProfile::constant(K0, s0, 1.5);
                const SolverOutput out = solve_K_parabolic_i(Kc, a, b, c1, c2, 0.1, 0.3, sig);
                for (int i = 0; i <= 20; ++i) {
                    const double s = s0 + i * 0.05;
                    const double want = 0.1 + 0.3 * s + c1 * c1 * s * s / (2.0 * D1) +
                                        bs * (b * b / D1) * K0 * (s - s0) * (s - s0) / 2.0;
                    track(std::abs(out.curve.g(s) - want));
                }
            }
            const double denom = sig == Signature::SimplyIsotropic ? a * a + b * b : a * a - b * b;
            for (double H0 : {0.5, -0.5}) {
                const CurvatureProfile Hc = CurvatureProfile::constant(H0, s0, 1.5);
                const SolverOutput out = solve_H_parabolic_i(Hc, a, b, c1, c2, 0.1, 0.3, sig);
                for (int i = 0; i <= 20; ++i) {
                    const double s = s0 + i * 0.05;
                    const double want = 0.1 + 0.3 * s + (a * c1 - b * c2) * s * s / (2.0 * denom) +
                                        bs * (2.0 * b * b / denom) * H0 * (s - s0) * (s - s0) / 2.0;
                    track(std::abs(out.curve.g(s) - want));
                }
            }
        }
    }
    res.pass = res.max_error <= res.tolerance;
    res.detail = "quadrature vs closed forms: flat (arctan/log), constant-K revolution, "
                 "CMC/logarithmoid, parabolic quadratics";
    return res;
}

SuiteResult suite_flatness() {
    SuiteResult res{"flatness", false, 0.0, 1e-5, ""};
    double chart_err = 0.0;
    for (const FamilyCell& cell : admissible_cells()) {
        const InvariantSurface s(cell.curve, cell.group);
        for (int i = 0; i <= 4; ++i) {
            const double u = cell.u0 + (cell.u1 - cell.u0) * (0.1 + 0.2 * i);
            for (int j = 0; j <= 4; ++j) {
                const double t = -0.8 + 0.4 * j;
                res.max_error = std::max(res.max_error, std::abs(brioschi_curvature(s, u, t)));
            }
        }
        // chart pullback, where a printed chart exists
        if (s.family().index != 8 && s.family().plane != CurvePlane::YZ) {
            const Chart chart = normal_form_chart(s);
            for (int i = 0; i <= 4; ++i) {
                const double u = cell.u0 + (cell.u1 - cell.u0) * (0.1 + 0.2 * i);
                for (int j = 0; j <= 4; ++j) {
                    const double t = -0.8 + 0.4 * j;
                    const auto pb = chart.pullback(u, t);
                    const Vec3 xu = s.du(u, t), xt = s.dt(u, t);
                    const double g11 = dot(xu, xu, s.signature());
                    const double g12 = dot(xu, xt, s.signature());
                    const double g22 = dot(xt, xt, s.signature());
                    chart_err = std::max({chart_err, std::abs(pb[0] - g11),
                                          std::abs(pb[1] - g12), std::abs(pb[2] - g22)});
                }
            }
        }
    }
    res.pass = res.max_error <= res.tolerance && chart_err <= 1e-8;
    res.detail = "Brioschi on every admissible family cell; chart pullback error " +
                 std::to_string(chart_err) + " (<= 1e-8)";
    return res;
}

SuiteResult suite_ruledness(std::uint64_t seed) {
    SuiteResult res{"ruledness", false, 0.0, 0.0, ""};
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> mag(0.5, 2.0);
    std::bernoulli_distribution coin;
    auto draw = [&]() { return (coin(rng) ? 1.0 : -1.0) * mag(rng); };

    int failures = 0;
    for (Signature sig : {Signature::SimplyIsotropic, Signature::PseudoIsotropic}) {
        for (int type = 1; type <= 7; ++type) {
            for (int rep = 0; rep < 50; ++rep) {
                MotionSubgroup g;
                g.sig = sig;
                switch (type) {
                case 1: g.phi = draw(); break;
                case 2: g.phi = draw(); g.c = draw(); break;
                case 3:
                    g.a = draw(); g.b = draw(); g.c1 = draw(); g.c2 = draw(); g.c = draw();
                    if (std::abs(g.a * g.c1 + g.b * g.c2) < 0.1) { --rep; continue; }
                    break;
                case 4: // c1 = b k, c2 = -a k with k a power of two keeps D1 = 0 exactly
                    g.a = draw(); g.b = draw();
                    {
                        const double k = coin(rng) ? 0.5 : 2.0;
                        g.c1 = g.b * k;
                        g.c2 = -(g.a * k);
                    }
                    break;
                case 5: g.c1 = draw(); g.c2 = draw(); break;
                case 6: g.a = draw(); g.b = draw(); break;
                default: g.c = draw(); break;
                }
                // Orbits are curve-independent; one generic curve suffices.
                const InvariantSurface s(ni_curve(), g);
                const bool want = type >= 4;
                if (is_ruled(s) != want) ++failures;
            }
        }
    }
    res.max_error = failures;
    res.pass = failures == 0;
    res.detail = "50 random draws per type per signature; " + std::to_string(failures) +
                 " misclassifications";
    return res;
}

SuiteResult suite_phi_continuity() {
    SuiteResult res{"phi_continuity", false, 0.0, 1e-4, ""};
    double switch_err = 0.0;
    const double params[][5] = {
        {0.7, -1.1, 0.4, 0.9, -0.6}, {1.5, 0.3, -0.8, 0.2, 1.0}, {-0.5, 0.8, 1.2, -1.4, 0.3}};
    for (Signature sig : {Signature::SimplyIsotropic, Signature::PseudoIsotropic}) {
        for (const auto& p : params) {
            MotionSubgroup g{sig, 0.0, p[0], p[1], p[2], p[3], p[4]};
            MotionSubgroup g_small = g;
            g_small.phi = 1e-6;
            for (int i = 0; i <= 16; ++i) {
                const double t = -2.0 + 4.0 * i / 16.0;
                res.max_error = std::max(
                    res.max_error, (evaluate(g_small, t).m - evaluate(g, t).m).norm_inf());
            }
            MotionSubgroup lo = g, hi = g;
            lo.phi = 1e-4 * (1.0 - 1e-9);
            hi.phi = 1e-4 * (1.0 + 1e-9);
            for (int i = 0; i <= 16; ++i) {
                const double t = -2.0 + 4.0 * i / 16.0;
                switch_err = std::max(switch_err,
                                      (evaluate(lo, t).m - evaluate(hi, t).m).norm_inf());
            }
        }
    }
    res.pass = res.max_error <= res.tolerance && switch_err <= 1e-9;
    res.detail = "phi = 1e-6 vs limit motion; series/closed switchover error " +
                 std::to_string(switch_err) + " (<= 1e-9)";
    return res;
}

SuiteResult suite_h_independence() {
    SuiteResult res{"h_independence", false, 0.0, 1e-9, ""};
    for (Signature sig : {Signature::SimplyIsotropic, Signature::PseudoIsotropic}) {
        std::vector<CurvePlane> planes{CurvePlane::XZ};
        if (sig == Signature::PseudoIsotropic) planes.push_back(CurvePlane::YZ);
        for (CurvePlane plane : planes) {
            const GeneratingCurve curve = i_curve(plane);
            const double phi = sig == Signature::SimplyIsotropic ? 1.1 : 0.7;
            const InvariantSurface s0(curve, sg(sig, phi, 0, 0, 0.0, 0, 0));
            const InvariantSurface s2(curve, sg(sig, phi, 0, 0, 2.0, 0, 0));
            for (int i = 0; i <= 30; ++i) {
                const double u = 0.8 + 1.2 * i / 30.0;
                for (double t : {-0.7, 0.0, 0.9}) {
                    const double h0 = curvatures_numeric(s0, u, t).H;
                    const double h2 = curvatures_numeric(s2, u, t).H;
                    res.max_error = std::max(res.max_error, std::abs(h0 - h2));
                }
            }
        }
    }
    res.pass = res.max_error <= res.tolerance;
    res.detail = "helicoidal i-type H with c = 0 vs c = 2, pointwise";
    return res;
}

std::vector<SuiteResult> run_all_suites(std::uint64_t seed) {
    return {suite_group_law(seed),   suite_determinant(seed), suite_differential(),
            suite_sphere_invariance(), suite_round_trip(),      suite_closed_forms(),
            suite_flatness(),          suite_ruledness(seed),   suite_phi_continuity(),
            suite_h_independence()};
}

Json suites_to_json(const std::vector<SuiteResult>& suites, std::uint64_t seed) {
    Json arr = Json::array();
    bool all = true;
    for (const SuiteResult& s : suites) {
        arr.push_back(Json{{"name", s.name},
                           {"pass", s.pass},
                           {"max_error", s.max_error},
                           {"tolerance", s.tolerance},
                           {"detail", s.detail}});
        all = all && s.pass;
    }
    return Json{{"schema", kSchemaTag}, {"command", "verify"}, {"seed", seed},
                {"pass", all},          {"suites", arr}};
}

} // namespace isosurf
