#ifndef ORBITS_WAVEFRONT_HPP
#define ORBITS_WAVEFRONT_HPP

#include "orbits/langlands.hpp"
#include "orbits/partition.hpp"
#include "orbits/springer.hpp"

namespace orbits {

enum class OracleVerdict { NotRun, Agrees, Disagrees };

struct WavefrontResult {
    std::vector<Partition> per_factor;  // one entry per parahoric factor
    Partition combined;                 // concat of per_factor (primary method)
    Partition mu_sum;                   // global mu_pm + mu_uni expression
    bool methods_agree = true;
    OracleVerdict oracle = OracleVerdict::NotRun;
};

/* Closed-form Kawanaka wavefront set of one finite factor: componentwise
 * sum of the degree-one strings and the unitary staircases, followed by
 * the ambient parity collapse (a no-op in every pure case). `which`
 * selects m1 or m2 from the unitary pieces (0 or 1). */
Partition wf_factor(const CuspidalFactorDatum* f,
                    const std::vector<UnitaryPiece>& pieces, int which);

// The same factor through the j-induction + Springer oracle.
Partition wf_factor_oracle(const CuspidalFactorDatum* f,
                           const std::vector<UnitaryPiece>& pieces, int which);

WavefrontResult wf_total(const ValidatedDatum& v, bool run_oracle = false);

}  // namespace orbits

#endif
