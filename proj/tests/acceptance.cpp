// Acceptance suite: runs every acceptance criterion at its pinned tolerance
// and prints one pass/fail line per criterion.  Exit code 0 iff all pass.

#include <cstdio>
#include <string>
#include <vector>

#include "core/verify.hpp"

using namespace isosurf;

int main() {
    const std::uint64_t seed = 20250809;
    struct Criterion {
        const char* title;
        std::vector<SuiteResult> parts;
    };

    const std::vector<Criterion> criteria = {
        {"1 group law (max entry <= 1e-9, < 1 s)", {suite_group_law(seed)}},
        {"2 det psi_t = 1 (<= 1e-10)", {suite_determinant(seed)}},
        {"3 differential curvature test (<= 1e-6 rel, t-indep 1e-8)", {suite_differential()}},
        {"4 sphere invariance (<= 1e-10; graph K = 0.25 +- 1e-8)", {suite_sphere_invariance()}},
        {"5 prescribed round trip (<= 1e-5) + example closed forms (<= 1e-8)",
         {suite_round_trip(), suite_closed_forms()}},
        {"6 flatness: Brioschi (<= 1e-5) + chart pullback (<= 1e-8)", {suite_flatness()}},
        {"7 ruledness exactly on types IV-VII (50 draws per type)", {suite_ruledness(seed)}},
        {"8 phi -> 0 continuity (<= 1e-4; switchover <= 1e-9)", {suite_phi_continuity()}},
        {"9 H independent of c for helicoidal i-type (<= 1e-9)", {suite_h_independence()}},
    };

    bool all = true;
    for (const Criterion& c : criteria) {
        bool pass = true;
        double worst = 0.0;
        for (const SuiteResult& part : c.parts) {
            pass = pass && part.pass;
            worst = std::max(worst, part.max_error);
        }
        all = all && pass;
        std::printf("%s  criterion %-66s max_error %.3e\n", pass ? "PASS" : "FAIL", c.title,
                    worst);
        if (!pass)
            for (const SuiteResult& part : c.parts)
                if (!part.pass)
                    std::printf("      suite %s: max_error %.3e tolerance %.1e (%s)\n",
                                part.name.c_str(), part.max_error, part.tolerance,
                                part.detail.c_str());
    }
    std::printf("%s\n", all ? "ACCEPTANCE: all criteria passed"
                            : "ACCEPTANCE: some criteria FAILED");
    return all ? 0 : 1;
}
