#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "orbits/springer.hpp"

using namespace orbits;

TEST_CASE("piece ranks") {
    CHECK(unitary_piece(1, 2).rank() == 3);
    CHECK(unitary_piece(2, 3).rank() == 12);
    CHECK(b_pair(2).rank() == 6);
    CHECK(d_pair(2).rank() == 4);
    CHECK(d_pair(0).rank() == 0);
}

TEST_CASE("orbit-to-representation anchors") {
    using BP = Bipartition;
    CHECK(springer_orbit(BP{{2}, {1}, WeylFamily::C}) ==
          NilpotentOrbit{type_c(3), Partition{4, 2}});
    CHECK(springer_orbit(BP{{4}, {}, WeylFamily::C}) ==
          NilpotentOrbit{type_c(4), Partition{8}});
    CHECK(springer_orbit(BP{{}, {1, 1, 1, 1}, WeylFamily::C}) ==
          NilpotentOrbit{type_c(4), Partition{1, 1, 1, 1, 1, 1, 1, 1}});
    CHECK(springer_orbit(BP{{3, 1}, {2, 1}, WeylFamily::C}) ==
          NilpotentOrbit{type_c(7), Partition{6, 4, 2, 2}});
    CHECK(springer_orbit(BP{{4, 2}, {3, 1}, WeylFamily::C}) ==
          NilpotentOrbit{type_c(10), Partition{8, 6, 4, 2}});
    CHECK(springer_orbit(BP{{1}, {1}, WeylFamily::B}) ==
          NilpotentOrbit{type_b(2), Partition{3, 1, 1}});
    CHECK(springer_orbit(BP{{2}, {1}, WeylFamily::B}) ==
          NilpotentOrbit{type_b(3), Partition{5, 1, 1}});
    CHECK(springer_orbit(BP{{2, 1}, {1}, WeylFamily::D}) ==
          NilpotentOrbit{type_d(4), Partition{3, 3, 1, 1}});
    CHECK(springer_orbit(BP{{}, {2}, WeylFamily::D}) ==
          NilpotentOrbit{type_d(2), Partition{3, 1}});
}

TEST_CASE("round-trip over all orbits of small rank") {
    for (Part n = 1; n <= 5; ++n) {
        for (auto [kind, fam] :
             {std::pair{type_b(n), WeylFamily::B}, {type_c(n), WeylFamily::C},
              {type_d(n), WeylFamily::D}}) {
            PartitionSet all = enumerate_orbits(kind);
            for (const Partition& p : all.elements()) {
                NilpotentOrbit o{kind, p};
                Bipartition b = springer_bipartition(o);
                CHECK(b.family == fam);
                CHECK(b.rank() == n);
                CHECK(springer_orbit(b) == o);
            }
        }
    }
}

TEST_CASE("truncated induction anchors") {
    Bipartition j1 = j_induce({b_pair(2)}, WeylFamily::B, 6);
    CHECK(j1.left == Partition{2, 1});
    CHECK(j1.right == Partition{2, 1});
    Bipartition j2 = j_induce({unitary_piece(1, 2)}, WeylFamily::C, 3);
    CHECK(j2.left == Partition{2});
    CHECK(j2.right == Partition{1});
    Bipartition j3 = j_induce({d_pair(2)}, WeylFamily::D, 4);
    CHECK(j3.left == Partition{2, 1});
    CHECK(j3.right == Partition{1});
    Bipartition j4 = j_induce({unitary_piece(2, 1), b_pair(1)}, WeylFamily::C, 4);
    CHECK(j4.left == Partition{3});
    CHECK(j4.right == Partition{1});
    // declared rank must match the sum of the piece ranks
    CHECK_THROWS(j_induce({b_pair(2)}, WeylFamily::B, 5));
}

TEST_CASE("full pipeline produces valid ambient partitions") {
    CHECK(oracle_wavefront_factor({b_pair(2), d_pair(1)}, WeylFamily::C) ==
          Partition{6, 4, 2, 2});
    for (Part m = 0; m <= 3; ++m)
        for (Part k = 1; k <= 2; ++k) {
            Partition wf = oracle_wavefront_factor({unitary_piece(k, m)}, WeylFamily::C);
            Part r = unitary_piece(k, m).rank();
            CHECK(is_valid(type_c(r), wf));
        }
}
