#ifndef ORBITS_ORBIT_HPP
#define ORBITS_ORBIT_HPP

#include "orbits/partition.hpp"

namespace orbits {

/* Classical families. Box counts of the ambient matrix algebra:
 *   A: n    (gl(n))
 *   B: 2n+1 (so(2n+1))    C: 2n (sp(2n))    D: 2n (so(2n))
 * B/D partitions are orthogonal (even parts with even multiplicity),
 * C partitions symplectic (odd parts with even multiplicity). */
enum class Family { A, B, C, D };

struct OrbitKind {
    Family family;
    Part rank;

    Part boxes() const;
    bool operator==(const OrbitKind&) const = default;
};

inline OrbitKind type_a(Part n) { return {Family::A, n}; }
inline OrbitKind type_b(Part n) { return {Family::B, n}; }
inline OrbitKind type_c(Part n) { return {Family::C, n}; }
inline OrbitKind type_d(Part n) { return {Family::D, n}; }

struct NilpotentOrbit {
    OrbitKind kind;
    Partition partition;
    bool operator==(const NilpotentOrbit&) const = default;
};

const char* to_string(Family f);
Family family_from_string(std::string_view s);

// Size + parity-multiplicity test; does not throw.
bool is_valid(OrbitKind kind, const Partition& p);

/* Greedy X-collapse: the dominance-maximal kind-valid partition <= p.
 * Certified against the brute-force maximum in the test suite. */
Partition collapse(OrbitKind kind, const Partition& p);

// All kind-valid partitions of boxes(kind). Guarded by a box bound.
PartitionSet enumerate_orbits(OrbitKind kind, Part max_boxes = 40);

/* Spaltenstein duality at partition level.
 *   B{n} -> C{n}: C-collapse of transpose with smallest entry decremented
 *   C{n} -> B{n}: B-collapse of transpose with largest entry incremented
 *   D{n} -> D{n}: D-collapse of transpose
 *   A{n} -> A{n}: transpose */
NilpotentOrbit dual(OrbitKind source, const Partition& p);

// The equivalent B->C formula transpose(C-collapse(p with smallest
// entry decremented)); exposed for the coherence check.
Partition dual_b_to_c_alt(const Partition& p);

// Lusztig-Spaltenstein induction from a GL(n-m) x Sp(2m) Levi:
// C-collapse of s + s + q. q must be symplectic; n is a checksum.
Partition induce_gl_sp(const Partition& s, const Partition& q, Part n);

}  // namespace orbits

#endif
