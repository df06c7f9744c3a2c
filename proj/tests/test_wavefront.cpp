#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "orbits/verifier.hpp"
#include "orbits/wavefront.hpp"

using namespace orbits;

TEST_CASE("degree-one closed forms") {
    CuspidalFactorDatum sp{FactorKind::SpFinite, 8, 5, 0};
    CHECK(wf_factor(&sp, {}, 0) == concat(string_interval(26), string_interval(6)));
    CuspidalFactorDatum sp2{FactorKind::SpFinite, 6, 2, 0};
    CHECK(wf_factor(&sp2, {}, 0) == concat(string_interval(16), string_interval(8)));
    CuspidalFactorDatum sp3{FactorKind::SpFinite, 1, 2, 0};  // m_minus > m_plus
    CHECK(wf_factor(&sp3, {}, 0) == concat(string_interval(6), string_interval(0)));
    CuspidalFactorDatum bo{FactorKind::SOoddFinite, 2, 1, 1};
    CHECK(wf_factor(&bo, {}, 0) == concat(string_interval(7), string_interval(1)));
    CuspidalFactorDatum de{FactorKind::SOevenFinite, 2, 1, 0};
    CHECK(wf_factor(&de, {}, 0) == concat(string_interval(5), string_interval(1)));
}

TEST_CASE("unitary closed form") {
    // one family contributes the scaled string [2m] * k; repeated families
    // add componentwise, so a count multiplies the values
    std::vector<UnitaryPiece> ps{{2, 3, 0, 1}};
    CHECK(wf_factor(nullptr, ps, 0) == scale(string_interval(6), 2));
    CHECK(wf_factor(nullptr, ps, 1) == Partition{});
    std::vector<UnitaryPiece> two{{1, 1, 0, 2}};
    CHECK(wf_factor(nullptr, two, 0) == Partition{4});
    std::vector<UnitaryPiece> mix{{1, 2, 0, 1}, {2, 1, 0, 1}};
    CHECK(wf_factor(nullptr, mix, 0) ==
          sum(string_interval(4), scale(string_interval(2), 2)));
}

TEST_CASE("combined wavefront is the concatenation of the factors") {
    SupercuspidalDatum d = SupercuspidalDatum::from_json_text(
        R"({"group":{"kind":"Sp","n":2},)"
        R"("factors":[{"kind":"SpFinite","m_plus":0,"m_minus":0},)"
        R"({"kind":"SpFinite","m_plus":0,"m_minus":0}],)"
        R"("unitary":[{"k":1,"m1":1,"m2":0,"count":1},{"k":1,"m1":0,"m2":1,"count":1}]})");
    ValidatedDatum v = validate_datum(d);
    WavefrontResult r = wf_total(v);
    CHECK(r.per_factor.size() == 2);
    CHECK(r.combined == Partition{2, 2});
    CHECK(r.combined == concat(r.per_factor[0], r.per_factor[1]));
    CHECK(r.oracle == OracleVerdict::NotRun);
    WavefrontResult ro = wf_total(v, true);
    CHECK(ro.oracle == OracleVerdict::Agrees);
}

TEST_CASE("closed form agrees with the induction pipeline on every datum") {
    VerifySummary sp = run_verification(GroupKind::Sp, 6, {false, true});
    CHECK(sp.oracle_divergences == 0);
    CHECK(sp.dominance_failures.empty());
    VerifySummary so = run_verification(GroupKind::SOodd, 5, {false, true});
    CHECK(so.oracle_divergences == 0);
    CHECK(so.dominance_failures.empty());
    VerifySummary de = run_verification(GroupKind::SOeven, 5, {false, true});
    CHECK(de.oracle_divergences == 0);
    CHECK(de.dominance_failures.empty());
}

TEST_CASE("per-factor closed form matches the oracle directly") {
    for (Part a = 0; a <= 3; ++a)
        for (Part c = 0; c <= 3; ++c) {
            CuspidalFactorDatum f{FactorKind::SpFinite, a, c, 0};
            CHECK(wf_factor(&f, {}, 0) == wf_factor_oracle(&f, {}, 0));
        }
    std::vector<UnitaryPiece> ps{{1, 2, 0, 1}, {2, 1, 0, 1}};
    CHECK(wf_factor(nullptr, ps, 0) == wf_factor_oracle(nullptr, ps, 0));
}
