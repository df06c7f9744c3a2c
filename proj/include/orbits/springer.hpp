#ifndef ORBITS_SPRINGER_HPP
#define ORBITS_SPRINGER_HPP

#include "orbits/orbit.hpp"
#include "orbits/partition.hpp"

#include <vector>

namespace orbits {

// Ambient Weyl group flavor. B and C share the abstract group; the tag
// selects which Springer algorithm applies.
enum class WeylFamily { B, C, D };

struct Bipartition {
    Partition left;   // odd symbol entries
    Partition right;  // even symbol entries
    WeylFamily family;

    Part rank() const { return left.size() + right.size(); }
    bool operator==(const Bipartition&) const = default;
};

/* Cuspidal-unipotent Springer datum of one endoscopic factor.
 *   Unitary{k,m}: k copies of the staircase of an endoscopic unitary
 *                 group, Weyl rank k*m(m+1)/2.
 *   BPair{m}:     staircase pair (m..1)x(m..1), rank m^2+m.
 *   DPair{m}:     staircase pair (m..1)x(m-1..1), rank m^2. */
struct StaircasePiece {
    enum class Flavor { Unitary, BPair, DPair } flavor;
    Part k = 1;  // Unitary only
    Part m = 0;

    Part rank() const;
};

inline StaircasePiece unitary_piece(Part k, Part m) {
    return {StaircasePiece::Flavor::Unitary, k, m};
}
inline StaircasePiece b_pair(Part m) { return {StaircasePiece::Flavor::BPair, 1, m}; }
inline StaircasePiece d_pair(Part m) { return {StaircasePiece::Flavor::DPair, 1, m}; }

// Truncated induction on the staircase inputs: contributions combine by
// componentwise sum on each side of the bipartition. Ranks must add up.
Bipartition j_induce(const std::vector<StaircasePiece>& pieces, WeylFamily family,
                     Part rank);

// Orbit -> Springer representation with trivial local system.
Bipartition springer_bipartition(const NilpotentOrbit& o);

// Springer representation -> orbit; rejects bipartitions outside the
// trivial-local-system image (round-trip enforced).
NilpotentOrbit springer_orbit(const Bipartition& b);

// Kawanaka wavefront set of the finite cuspidal datum: the full
// j-induction + Springer pipeline.
Partition oracle_wavefront_factor(const std::vector<StaircasePiece>& pieces,
                                  WeylFamily family);

}  // namespace orbits

#endif
