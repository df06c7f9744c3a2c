#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "orbits/orbit.hpp"

using namespace orbits;

TEST_CASE("box counts and validity") {
    CHECK(type_a(5).boxes() == 5);
    CHECK(type_b(3).boxes() == 7);
    CHECK(type_c(3).boxes() == 6);
    CHECK(type_d(3).boxes() == 6);

    CHECK(is_valid(type_c(2), Partition{2, 2}));
    CHECK(is_valid(type_c(2), Partition{3, 1}) == false);  // odd part, odd multiplicity
    CHECK(is_valid(type_c(2), Partition{1, 1, 1, 1}));
    CHECK(is_valid(type_b(2), Partition{2, 2, 1}));
    CHECK(is_valid(type_b(2), Partition{4, 1}) == false);  // even part, odd multiplicity
    CHECK(is_valid(type_b(2), Partition{3, 1}) == false);  // wrong size
    CHECK(is_valid(type_d(2), Partition{3, 1}));
    CHECK(is_valid(type_a(4), Partition{3, 1}));
}

TEST_CASE("collapse anchors") {
    CHECK(collapse(type_c(3), Partition{5, 1}) == Partition{4, 2});
    CHECK(collapse(type_b(2), Partition{4, 1}) == Partition{3, 1, 1});
    CHECK(collapse(type_d(3), Partition{5, 1}) == Partition{5, 1});  // already valid
    CHECK(collapse(type_c(4), Partition{3, 3, 1, 1}) == Partition{3, 3, 1, 1});
    CHECK_THROWS(collapse(type_a(4), Partition{3, 1}));
    CHECK_THROWS(collapse(type_c(3), Partition{5}));  // size mismatch
}

// Brute-force reference: the dominance-maximum of the valid partitions below p.
static Partition collapse_reference(OrbitKind kind, const Partition& p) {
    Partition best;
    bool found = false;
    PartitionSet all = enumerate_orbits(kind);
    for (const Partition& q : all.elements()) {
        if (!dom_leq(q, p)) continue;
        if (!found || dom_geq(q, best)) {
            best = q;
            found = true;
        }
    }
    REQUIRE(found);
    return best;
}

TEST_CASE("collapse equals the dominance maximum, all partitions <= 12 boxes") {
    for (Part n = 1; n <= 6; ++n) {
        for (OrbitKind kind : {type_b(n), type_c(n), type_d(n)}) {
            if (kind.boxes() > 12) continue;
            PartitionSet all = enumerate_orbits({Family::A, kind.boxes()});
            for (const Partition& p : all.elements())
                CHECK(collapse(kind, p) == collapse_reference(kind, p));
        }
    }
}

TEST_CASE("orbit enumeration, frozen small lists") {
    PartitionSet c3 = enumerate_orbits(type_c(3));
    CHECK(c3.elements() ==
          std::vector<Partition>{{6}, {4, 2}, {4, 1, 1}, {3, 3}, {2, 2, 2},
                                 {2, 2, 1, 1}, {2, 1, 1, 1, 1}, {1, 1, 1, 1, 1, 1}});
    PartitionSet b2 = enumerate_orbits(type_b(2));
    CHECK(b2.elements() ==
          std::vector<Partition>{{5}, {3, 1, 1}, {2, 2, 1}, {1, 1, 1, 1, 1}});
    PartitionSet d3 = enumerate_orbits(type_d(3));
    CHECK(d3.elements() ==
          std::vector<Partition>{{5, 1}, {3, 3}, {3, 1, 1, 1}, {2, 2, 1, 1},
                                 {1, 1, 1, 1, 1, 1}});
    CHECK(enumerate_orbits(type_a(0)).count() == 1);  // the empty partition
    CHECK_THROWS(enumerate_orbits(type_c(30)));       // box bound
}

TEST_CASE("duality anchors") {
    CHECK(dual(type_b(3), Partition{3, 1, 1, 1, 1}) ==
          NilpotentOrbit{type_c(3), Partition{4, 2}});
    CHECK(dual(type_c(3), Partition{2, 2, 2}) ==
          NilpotentOrbit{type_b(3), Partition{3, 3, 1}});
    CHECK(dual(type_c(3), Partition{6}) ==
          NilpotentOrbit{type_b(3), Partition{1, 1, 1, 1, 1, 1, 1}});
    CHECK(dual(type_d(4), Partition{5, 3}) ==
          NilpotentOrbit{type_d(4), Partition{2, 2, 1, 1, 1, 1}});
    CHECK(dual(type_a(5), Partition{3, 2}) ==
          NilpotentOrbit{type_a(5), Partition{2, 2, 1}});
    CHECK_THROWS(dual(type_c(3), Partition{3, 2, 1}));  // invalid source orbit
}

TEST_CASE("duality properties on small ranks") {
    for (Part n = 1; n <= 4; ++n) {
        for (OrbitKind kind : {type_b(n), type_c(n), type_d(n)}) {
            PartitionSet all = enumerate_orbits(kind);
            for (const Partition& p : all.elements()) {
                NilpotentOrbit d1 = dual(kind, p);
                CHECK(is_valid(d1.kind, d1.partition));
                // d is idempotent after one application: d(d(d(p))) = d(p)
                NilpotentOrbit d2 = dual(d1.kind, d1.partition);
                CHECK(dual(d2.kind, d2.partition) == d1);
                // order reversal
                for (const Partition& q : all.elements()) {
                    if (!dom_leq(p, q)) continue;
                    CHECK(dom_geq(dual(kind, p).partition, dual(kind, q).partition));
                }
            }
        }
    }
}

TEST_CASE("the two B->C formulas agree") {
    for (Part n = 1; n <= 5; ++n) {
        PartitionSet all = enumerate_orbits(type_b(n));
        for (const Partition& p : all.elements())
            CHECK(dual(type_b(n), p).partition == dual_b_to_c_alt(p));
    }
}

TEST_CASE("induction from GL x Sp") {
    CHECK(induce_gl_sp(Partition{1}, Partition{2}, 2) == Partition{4});
    CHECK(induce_gl_sp(Partition{2, 1}, Partition{}, 3) == Partition{4, 2});
    CHECK(induce_gl_sp(Partition{}, Partition{2, 2}, 2) == Partition{2, 2});
    CHECK_THROWS(induce_gl_sp(Partition{1}, Partition{3, 1}, 3));  // q not symplectic
    CHECK_THROWS(induce_gl_sp(Partition{1}, Partition{2}, 5));     // rank checksum
    // result is always a valid symplectic partition
    for (Part n = 2; n <= 4; ++n) {
        PartitionSet ss = enumerate_orbits({Family::A, n - 1});
        for (const Partition& s : ss.elements()) {
            PartitionSet qs = enumerate_orbits(type_c(1));
            for (const Partition& q : qs.elements())
                CHECK(is_valid(type_c(n), induce_gl_sp(s, q, n)));
        }
    }
}
