#ifndef ORBITS_SELFTEST_HPP
#define ORBITS_SELFTEST_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace orbits {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
};

/* The eleven acceptance checks, exact arithmetic plus wall-clock
 * budgets. The seed drives the randomized partition-law sweep only. */
std::vector<CriterionResult> run_acceptance(std::uint64_t seed = 20240817);

// Prints one line per criterion; returns true iff all passed.
bool print_acceptance(const std::vector<CriterionResult>& results);

}  // namespace orbits

#endif
