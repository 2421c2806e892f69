#ifndef ISOSURF_VERIFY_HPP
#define ISOSURF_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "core/json_io.hpp"
#include "core/surface.hpp"

namespace isosurf {

struct SuiteResult {
    std::string name;
    bool pass = false;
    double max_error = 0.0;
    double tolerance = 0.0;
    std::string detail;
};

// Family/plane/signature cells carrying a printed curvature closed form,
// with admissible sample curves and u-windows.
struct FamilyCell {
    std::string label;
    MotionSubgroup group;
    GeneratingCurve curve;
    double u0, u1;
};

std::vector<FamilyCell> closed_form_cells();
// closed_form_cells plus the general (family 8) cells; everything admissible
// on its window.
std::vector<FamilyCell> admissible_cells();

SuiteResult suite_group_law(std::uint64_t seed);
SuiteResult suite_determinant(std::uint64_t seed);
SuiteResult suite_differential();
SuiteResult suite_sphere_invariance();
SuiteResult suite_round_trip();
SuiteResult suite_closed_forms();
SuiteResult suite_flatness();
SuiteResult suite_ruledness(std::uint64_t seed);
SuiteResult suite_phi_continuity();
SuiteResult suite_h_independence();

std::vector<SuiteResult> run_all_suites(std::uint64_t seed);
Json suites_to_json(const std::vector<SuiteResult>& suites, std::uint64_t seed);

} // namespace isosurf

#endif
