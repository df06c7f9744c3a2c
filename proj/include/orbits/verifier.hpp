#ifndef ORBITS_VERIFIER_HPP
#define ORBITS_VERIFIER_HPP

#include "orbits/langlands.hpp"
#include "orbits/wavefront.hpp"

#include <functional>
#include <string>
#include <vector>

namespace orbits {

struct ConjectureReport {
    SupercuspidalDatum datum;  // normalized
    Partition langlands;
    Partition dual_of_langlands;
    Partition wavefront;
    bool dominance_holds = false;
    bool equality = false;
    bool hyperspecial = false;
    std::vector<std::string> notes;  // mu-sum mismatch, oracle mismatch

    std::string to_json_text() const;
};

struct CheckOptions {
    bool run_oracle = false;
};

ConjectureReport check_datum(const SupercuspidalDatum& d, CheckOptions opt = {});

/* Every validate-passing datum with group rank <= max_rank, each once
 * (Sp data up to the factor-swap symmetry), in deterministic order. */
void enumerate_data(GroupKind group, Part max_rank,
                    const std::function<void(const SupercuspidalDatum&)>& sink);

struct VerifySummary {
    Part count = 0;
    Part equality_count = 0;
    Part hyperspecial_count = 0;
    Part hyperspecial_equality_count = 0;
    std::vector<ConjectureReport> dominance_failures;
    Part mu_sum_divergences = 0;
    Part oracle_divergences = 0;
};

struct VerifyOptions {
    bool hyperspecial_only = false;
    bool run_oracle = false;
};

VerifySummary run_verification(GroupKind group, Part max_rank, VerifyOptions opt = {});

}  // namespace orbits

#endif
