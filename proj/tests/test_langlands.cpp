#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "orbits/langlands.hpp"
#include "orbits/verifier.hpp"

using namespace orbits;

namespace {

const char* kWitness =
    R"({"group":{"kind":"Sp","n":2},)"
    R"("factors":[{"kind":"SpFinite","m_plus":0,"m_minus":0},)"
    R"({"kind":"SpFinite","m_plus":0,"m_minus":0}],)"
    R"("unitary":[{"k":1,"m1":1,"m2":0,"count":1},{"k":1,"m1":0,"m2":1,"count":1}]})";

const char* kRamified =
    R"({"group":{"kind":"URamified","n":11},)"
    R"("factors":[{"kind":"SpFinite","m_plus":1,"m_minus":1},)"
    R"({"kind":"SOoddFinite","m_plus":0,"m_minus":1,"an":1}],)"
    R"("unitary":[]})";

}  // namespace

TEST_CASE("JSON round-trip") {
    SupercuspidalDatum d = SupercuspidalDatum::from_json_text(kWitness);
    CHECK(d.group == GroupKind::Sp);
    CHECK(d.n == 2);
    CHECK(d.factors.size() == 2);
    CHECK(d.unitary.size() == 2);
    CHECK(d.unitary[0] == UnitaryPiece{1, 1, 0, 1});
    CHECK(SupercuspidalDatum::from_json_text(d.to_json_text()) == d);
    CHECK_THROWS(SupercuspidalDatum::from_json_text("{"));
    CHECK_THROWS(SupercuspidalDatum::from_json_text(R"({"group":{"kind":"Xx","n":1}})"));
}

TEST_CASE("validation derives factor ranks and rejects bad ranks") {
    SupercuspidalDatum d = SupercuspidalDatum::from_json_text(kWitness);
    ValidatedDatum v = validate_datum(d);
    CHECK(v.n1 == 1);
    CHECK(v.n2 == 1);
    d.n = 3;  // dimension identity now violated
    CHECK_THROWS(validate_datum(d));

    SupercuspidalDatum r = SupercuspidalDatum::from_json_text(kRamified);
    ValidatedDatum vr = validate_datum(r);
    CHECK(vr.n1 == 3);
    CHECK(vr.n2 == 2);
    r.n = 12;
    CHECK_THROWS(validate_datum(r));
}

TEST_CASE("ramified groups normalize the symplectic factor to the first slot") {
    SupercuspidalDatum r = SupercuspidalDatum::from_json_text(kRamified);
    SupercuspidalDatum flipped = r;
    std::swap(flipped.factors[0], flipped.factors[1]);
    ValidatedDatum a = validate_datum(r), b = validate_datum(flipped);
    CHECK(a.datum == b.datum);
    CHECK(a.datum.factors[0].kind == FactorKind::SpFinite);
    CHECK(a.n1 == b.n1);
    CHECK(a.n2 == b.n2);
}

TEST_CASE("degree-one ranks") {
    CHECK(degree_one_rank({FactorKind::SpFinite, 2, 1, 0}) == 7);
    CHECK(degree_one_rank({FactorKind::SOoddFinite, 2, 1, 1}) == 8);
    CHECK(degree_one_rank({FactorKind::SOevenFinite, 2, 1, 0}) == 5);
    CHECK(degree_one_rank({FactorKind::SOevenFinite, 2, 1, 2}) == 4);
}

TEST_CASE("parameter anchors") {
    CHECK(build_param(SupercuspidalDatum::from_json_text(kWitness)).partition ==
          Partition{1, 1, 1, 1, 1});
    NilpotentOrbit ram = build_param(SupercuspidalDatum::from_json_text(kRamified));
    CHECK(ram.kind.family == Family::A);
    CHECK(ram.partition == Partition{4, 3, 2, 1, 1, 1});
}

TEST_CASE("parameter box counts and validity over enumerated data") {
    auto expect = [](GroupKind g, Part n) -> OrbitKind {
        switch (g) {
            case GroupKind::Sp: return type_b(n);
            case GroupKind::SOodd: return type_c(n);
            case GroupKind::SOeven: return type_d(n);
            default: return type_a(n);
        }
    };
    for (GroupKind g : {GroupKind::Sp, GroupKind::SOodd, GroupKind::SOeven}) {
        enumerate_data(g, 5, [&](const SupercuspidalDatum& d) {
            NilpotentOrbit o = build_param(d);
            OrbitKind kind = expect(g, d.n);
            CHECK(o.kind == kind);
            CHECK(is_valid(kind, o.partition));
        });
    }
}

TEST_CASE("duality of the parameter") {
    SupercuspidalDatum w = SupercuspidalDatum::from_json_text(kWitness);
    ValidatedDatum vw = validate_datum(w);
    CHECK(dual_of_param(vw, build_param(w)) == Partition{4});

    // ramified case: transpose resized to gl(N)
    SupercuspidalDatum r = SupercuspidalDatum::from_json_text(kRamified);
    ValidatedDatum vr = validate_datum(r);
    Partition dr = dual_of_param(vr, build_param(r));
    CHECK(dr == Partition{6, 3, 2});
    CHECK(dr.size() == 11);

    enumerate_data(GroupKind::URamified, 4, [&](const SupercuspidalDatum& d) {
        ValidatedDatum v = validate_datum(d);
        CHECK(dual_of_param(v, build_param(d)).size() == d.n);
    });
    enumerate_data(GroupKind::UUnramified, 4, [&](const SupercuspidalDatum& d) {
        ValidatedDatum v = validate_datum(d);
        CHECK(dual_of_param(v, build_param(d)).size() == d.n);
    });
}
