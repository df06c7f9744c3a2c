#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <algorithm>

#include "orbits/g2.hpp"

using namespace orbits;

TEST_CASE("orbit chain and duality") {
    CHECK(G2Orbit::One < G2Orbit::A1);
    CHECK(G2Orbit::A1 < G2Orbit::A1tilde);
    CHECK(G2Orbit::A1tilde < G2Orbit::G2a1);
    CHECK(G2Orbit::G2a1 < G2Orbit::G2reg);
    CHECK(g2_dual(G2Orbit::One) == G2Orbit::G2reg);
    CHECK(g2_dual(G2Orbit::G2reg) == G2Orbit::One);
    CHECK(g2_dual(G2Orbit::A1) == G2Orbit::G2a1);
    CHECK(g2_dual(G2Orbit::A1tilde) == G2Orbit::G2a1);
    CHECK(g2_dual(G2Orbit::G2a1) == G2Orbit::G2a1);
    for (G2Orbit o : {G2Orbit::One, G2Orbit::A1, G2Orbit::A1tilde, G2Orbit::G2a1,
                      G2Orbit::G2reg}) {
        CHECK(g2_dual(g2_dual(g2_dual(o))) == g2_dual(o));  // d^3 = d
        CHECK(g2_orbit_from_string(to_string(o)) == o);
    }
    // order reversal
    for (G2Orbit a : {G2Orbit::One, G2Orbit::A1, G2Orbit::A1tilde, G2Orbit::G2a1,
                      G2Orbit::G2reg})
        for (G2Orbit b : {G2Orbit::One, G2Orbit::A1, G2Orbit::A1tilde, G2Orbit::G2a1,
                          G2Orbit::G2reg})
            if (a <= b) CHECK(g2_dual(a) >= g2_dual(b));
    CHECK_THROWS(g2_orbit_from_string("B2"));
}

TEST_CASE("bundled tables parse with the expected shape") {
    const G2Tables& t = bundled_g2_tables();
    CHECK(t.rows.size() == 34);
    CHECK(t.packets.size() == 15);
    CHECK(t.supercuspidals.size() == 7);
    // every packet member is a row (the row's packet field records the
    // series it comes from, not the packet grouping)
    for (const G2Packet& p : t.packets) {
        CHECK(!p.members.empty());
        for (const std::string& m : p.members) {
            bool found = false;
            for (const G2Row& r : t.rows)
                if (r.pi_label == m) found = true;
            CHECK_MESSAGE(found, p.id, " member ", m);
        }
    }
}

TEST_CASE("all structural checks pass on the bundled tables") {
    std::vector<G2CheckResult> rs = verify_g2(bundled_g2_tables());
    REQUIRE(rs.size() == 5);
    CHECK(rs[0].name == "az-involution");
    CHECK(rs[1].name == "wavefront-bound");
    CHECK(rs[2].name == "packet-equality");
    CHECK(rs[3].name == "wavefront-orbits");
    CHECK(rs[4].name == "supercuspidal-table");
    for (const G2CheckResult& r : rs) CHECK_MESSAGE(r.passed, r.name, ": ", r.detail);
}

TEST_CASE("malformed tables are rejected with the row named") {
    nlohmann::json j = nlohmann::json::parse(bundled_g2_json());
    nlohmann::json bad = j;
    bad["tempered_rows"][0]["dual_param"] = "B2";
    CHECK_THROWS(parse_g2_tables(bad.dump()));
    bad = j;
    bad["tempered_rows"][3]["wf_of_az"] = nlohmann::json::array();
    CHECK_THROWS(parse_g2_tables(bad.dump()));
    bad = j;
    bad["supercuspidal_rows"][0]["verdict"] = "maybe";
    CHECK_THROWS(parse_g2_tables(bad.dump()));
    bad = j;
    bad["packets"][0]["attained_by"] = "none";
    CHECK_THROWS(parse_g2_tables(bad.dump()));
}

TEST_CASE("mutations trip the matching check") {
    auto failing = [](const G2Tables& t) {
        std::vector<std::string> out;
        for (const G2CheckResult& r : verify_g2(t))
            if (!r.passed) out.push_back(r.name);
        return out;
    };

    G2Tables t = bundled_g2_tables();
    t.rows[0].az_label = t.rows[0].az_label + "-nonsense";
    auto inv_fails = failing(t);
    CHECK(std::find(inv_fails.begin(), inv_fails.end(), "az-involution") !=
          inv_fails.end());

    t = bundled_g2_tables();
    for (G2Row& r : t.rows)
        if (r.dual_param == G2Orbit::G2reg) r.wf_of_az = {G2Orbit::G2reg};
    auto fails = failing(t);
    CHECK(std::find(fails.begin(), fails.end(), "wavefront-bound") != fails.end());

    t = bundled_g2_tables();
    for (G2SupercuspidalRow& r : t.supercuspidals)
        if (r.verdict == "equal") r.verdict = "less";
    CHECK(failing(t) == std::vector<std::string>{"supercuspidal-table"});
}
