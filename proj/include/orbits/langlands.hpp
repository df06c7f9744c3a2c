#ifndef ORBITS_LANGLANDS_HPP
#define ORBITS_LANGLANDS_HPP

#include "orbits/orbit.hpp"
#include "orbits/partition.hpp"

#include <string>
#include <vector>

namespace orbits {

/* One family of `count` distinct degree-2k self-dual polynomials sharing
 * the triangular parameters (m1, m2) on the two parahoric factors. */
struct UnitaryPiece {
    Part k = 1;
    Part m1 = 0;
    Part m2 = 0;
    Part count = 1;
    bool operator==(const UnitaryPiece&) const = default;
};

// an is the anisotropic dimension: 1 for SOoddFinite, 0 or 2 for
// SOevenFinite, ignored for SpFinite.
enum class FactorKind { SpFinite, SOoddFinite, SOevenFinite };

struct CuspidalFactorDatum {
    FactorKind kind = FactorKind::SpFinite;
    Part m_plus = 0;
    Part m_minus = 0;
    int an = 0;
    bool operator==(const CuspidalFactorDatum&) const = default;
};

enum class GroupKind { Sp, SOodd, SOeven, UUnramified, URamified };

const char* to_string(GroupKind g);
const char* to_string(FactorKind f);

struct SupercuspidalDatum {
    GroupKind group = GroupKind::Sp;
    Part n = 0;  // rank; the matrix size N for unitary groups
    std::vector<CuspidalFactorDatum> factors;  // two, or none (UUnramified)
    std::vector<UnitaryPiece> unitary;
    bool operator==(const SupercuspidalDatum&) const = default;

    static SupercuspidalDatum from_json_text(const std::string& text);
    std::string to_json_text() const;
};

struct ValidatedDatum {
    SupercuspidalDatum datum;  // normalized (ramified: Sp factor first)
    Part n1 = 0;
    Part n2 = 0;
};

/* Derives the factor ranks from the dimension identities
 * (Sp: sum k_P(m_P^2+m_P)/2 + (m+^2+m+) + m-^2 = n_i, and the SO/an
 * variants) and checks them against the declared group rank. Throws
 * with the violated equation named. */
ValidatedDatum validate_datum(const SupercuspidalDatum& d);

// Per-factor degree-one rank contribution (no unitary part).
Part degree_one_rank(const CuspidalFactorDatum& f);

/* Lust-Stevens string construction of the nilpotent Langlands
 * parameter. Target kind: TypeB{n} for Sp{n}, TypeC{n} for SOodd{n},
 * TypeD{n} for SOeven{n}, TypeA for unitary groups. For ramified
 * unitary groups the raw string partition is returned with a TypeA tag
 * of its own size; see dual_of_param. */
NilpotentOrbit build_param(const SupercuspidalDatum& d);

/* Duality applied to the parameter, in the algebra the wavefront set
 * lives in. Classical kinds defer to dual(); for ramified unitary
 * groups the transpose is resized to gl(N), N = 2n1+2n2+an2, by
 * removing excess boxes from the smallest rows (or adding to the
 * largest). */
Partition dual_of_param(const ValidatedDatum& v, const NilpotentOrbit& param);

}  // namespace orbits

#endif
