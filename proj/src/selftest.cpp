#include "orbits/selftest.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <random>

#include "orbits/g2.hpp"
#include "orbits/orbit.hpp"
#include "orbits/partition.hpp"
#include "orbits/verifier.hpp"

namespace orbits {

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void fail(std::string why) {
        if (ok) detail = std::move(why);
        ok = false;
    }
};

using Rng = std::mt19937_64;

Part rnd(Rng& rng, Part lo, Part hi) {
    return std::uniform_int_distribution<Part>(lo, hi)(rng);
}

Partition random_partition(Rng& rng, Part max_len = 10, Part max_part = 30) {
    Part len = rnd(rng, 0, max_len);
    std::vector<Part> v;
    for (Part i = 0; i < len; ++i) v.push_back(rnd(rng, 1, max_part));
    return Partition(std::move(v));
}

// A random partition dominated by p, same size: repeated box moves from
// a larger row to a row at least two smaller.
Partition dominated_by(Rng& rng, const Partition& p) {
    std::vector<Part> v = p.parts();
    Part moves = rnd(rng, 0, 5);
    for (Part t = 0; t < moves; ++t) {
        if (v.empty()) break;
        std::size_t i = static_cast<std::size_t>(rnd(rng, 0, Part(v.size()) - 1));
        std::size_t j = static_cast<std::size_t>(rnd(rng, 0, Part(v.size())));
        Part vi = v[i], vj = j < v.size() ? v[j] : 0;
        if (vi < vj + 2) continue;
        --v[i];
        if (j < v.size())
            ++v[j];
        else
            v.push_back(1);
        std::sort(v.begin(), v.end(), std::greater<>());
        while (!v.empty() && v.back() == 0) v.pop_back();
    }
    return Partition(std::move(v));
}

// All partitions of n, descending parts.
void partitions_of(Part n, Part max_part, std::vector<Part>& cur,
                   std::vector<Partition>& out) {
    if (n == 0) {
        out.emplace_back(cur);
        return;
    }
    for (Part p = std::min(n, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions_of(n - p, p, cur, out);
        cur.pop_back();
    }
}

std::vector<Partition> partitions_of(Part n) {
    std::vector<Part> cur;
    std::vector<Partition> out;
    partitions_of(n, n, cur, out);
    return out;
}

Outcome criterion_partition_laws(std::uint64_t seed) {
    Outcome o;
    Rng rng(seed);
    for (int t = 0; t < 10000 && o.ok; ++t) {
        Partition a1 = random_partition(rng), a2 = random_partition(rng);
        Partition b1 = dominated_by(rng, a1), b2 = dominated_by(rng, a2);
        Partition c = random_partition(rng);
        if (!dom_leq(transpose(a1), transpose(b1)))
            o.fail("transpose not antitone at " + a1.str() + " >= " + b1.str());
        if (!dom_geq(concat(a1, a2), concat(b1, b2)))
            o.fail("concat not monotone at tuple " + a1.str());
        if (transpose(concat(a1, a2)) != sum(transpose(a1), transpose(a2)))
            o.fail("transpose/concat exchange at " + a1.str() + ", " + a2.str());
        if (!dom_geq(sum(concat(a1, b1), concat(a2, b2)),
                     concat(sum(a1, a2), sum(b1, b2))))
            o.fail("four-partition inequality at " + a1.str());
        if (!dom_geq(sum(a1, c), sum(b1, c)))
            o.fail("sum not monotone at " + a1.str() + " + " + c.str());
    }
    if (o.ok) o.detail = "10000 tuples";
    return o;
}

Outcome criterion_collapse_oracle() {
    Outcome o;
    for (Part s = 0; s <= 16 && o.ok; ++s) {
        std::vector<OrbitKind> kinds;
        if (s % 2 == 1) kinds.push_back(type_b((s - 1) / 2));
        if (s % 2 == 0) {
            kinds.push_back(type_c(s / 2));
            kinds.push_back(type_d(s / 2));
        }
        std::vector<Partition> all = partitions_of(s);
        for (OrbitKind kind : kinds) {
            PartitionSet orbits = enumerate_orbits(kind);
            for (const Partition& p : all) {
                Partition got = collapse(kind, p);
                bool got_seen = false;
                for (const Partition& q : orbits.elements()) {
                    if (!dom_leq(q, p)) continue;
                    if (q == got) {
                        got_seen = true;
                        continue;
                    }
                    if (!dom_leq(q, got)) {
                        o.fail("collapse of " + p.str() + " misses " + q.str());
                        break;
                    }
                }
                if (o.ok && !got_seen) o.fail("collapse of " + p.str() + " not maximal");
                if (!o.ok) break;
            }
            if (!o.ok) break;
        }
    }
    if (o.ok) o.detail = "all partitions of size <= 16, kinds B/C/D";
    return o;
}

const Partition& dom_extreme(const PartitionSet& s, bool top, Outcome& o) {
    for (const Partition& p : s.elements()) {
        bool all = true;
        for (const Partition& q : s.elements())
            all = all && (top ? dom_geq(p, q) : dom_leq(p, q));
        if (all) return p;
    }
    o.fail("no dominance extreme");
    return s.elements().front();
}

Outcome criterion_duality() {
    Outcome o;
    for (Part s = 1; s <= 15 && o.ok; s += 2) {
        PartitionSet orbits_b = enumerate_orbits(type_b((s - 1) / 2));
        for (const Partition& p : orbits_b.elements())
            if (dual(type_b((s - 1) / 2), p).partition != dual_b_to_c_alt(p)) {
                o.fail("duality formulas disagree at " + p.str());
                break;
            }
    }
    for (Family fam : {Family::A, Family::B, Family::C, Family::D}) {
        for (Part n = 0; n <= 6 && o.ok; ++n) {
            OrbitKind kind{fam, n};
            PartitionSet orbits = enumerate_orbits(kind);
            for (const Partition& p : orbits.elements()) {
                NilpotentOrbit d1 = dual(kind, p);
                NilpotentOrbit d2 = dual(d1.kind, d1.partition);
                NilpotentOrbit d3 = dual(d2.kind, d2.partition);
                if (d3 != d1) {
                    o.fail("dual not quasi-idempotent at " + p.str());
                    break;
                }
                for (const Partition& q : orbits.elements())
                    if (dom_leq(p, q) &&
                        !dom_geq(dual(kind, p).partition, dual(kind, q).partition)) {
                        o.fail("dual not order-reversing at " + p.str());
                        break;
                    }
            }
            if (!o.ok) break;
            if (orbits.count() > 0) {
                const Partition& reg = dom_extreme(orbits, true, o);
                const Partition& zero = dom_extreme(orbits, false, o);
                if (o.ok && (dual(kind, reg).partition !=
                                 dom_extreme(enumerate_orbits(dual(kind, reg).kind),
                                             false, o) ||
                             dual(kind, zero).partition !=
                                 dom_extreme(enumerate_orbits(dual(kind, zero).kind),
                                             true, o)))
                    o.fail("regular/zero not exchanged at rank " +
                           std::to_string(n));
            }
        }
        if (!o.ok) break;
    }
    if (o.ok) o.detail = "both formulas size <= 15; rank <= 6 properties";
    return o;
}

Outcome criterion_springer_sweep() {
    Outcome o;
    for (Part m = 1; m <= 6 && o.ok; ++m)
        for (Part k = 1; k <= 4; ++k) {
            Partition want = scale(string_interval(2 * m), k);
            UnitaryPiece piece{k, m, 0, 1};
            if (wf_factor_oracle(nullptr, {piece}, 0) != want) {
                o.fail("staircase induction at k=" + std::to_string(k) +
                       ", m=" + std::to_string(m));
                break;
            }
        }
    for (FactorKind kind :
         {FactorKind::SpFinite, FactorKind::SOoddFinite, FactorKind::SOevenFinite})
        for (Part a = 0; a <= 6 && o.ok; ++a)
            for (Part c = 0; c <= 6; ++c) {
                CuspidalFactorDatum f{kind, a, c,
                                      kind == FactorKind::SOoddFinite ? 1 : 0};
                if (wf_factor(&f, {}, 0) != wf_factor_oracle(&f, {}, 0)) {
                    o.fail(std::string("degree-one closed form, kind ") +
                           to_string(kind) + " (" + std::to_string(a) + "," +
                           std::to_string(c) + ")");
                    break;
                }
            }
    if (o.ok) o.detail = "staircases k<=4, m<=6; degree-one m<=6 all kinds";
    return o;
}

Outcome criterion_sp_pipeline() {
    Outcome o;
    VerifySummary s = run_verification(GroupKind::Sp, 10);
    if (!s.dominance_failures.empty())
        o.fail("dominance failure: " + s.dominance_failures.front().to_json_text());
    if (s.hyperspecial_count != s.hyperspecial_equality_count)
        o.fail("hyperspecial datum without equality");
    enumerate_data(GroupKind::Sp, 10, [&](const SupercuspidalDatum& d) {
        if (!o.ok) return;
        bool single = d.unitary.size() == 1 && d.unitary[0].count == 1 &&
                      d.unitary[0].m1 > 0 && d.unitary[0].m2 > 0;
        for (const CuspidalFactorDatum& f : d.factors)
            single = single && f.m_plus == 0 && f.m_minus == 0;
        if (single && !check_datum(d).equality)
            o.fail("single-piece datum without equality: " + d.to_json_text());
    });
    if (o.ok)
        o.detail = std::to_string(s.count) + " data, " +
                   std::to_string(s.equality_count) + " equalities";
    return o;
}

SupercuspidalDatum sp_two_factor(Part a1, Part c1, Part a2, Part c2) {
    SupercuspidalDatum d;
    d.group = GroupKind::Sp;
    d.factors = {{FactorKind::SpFinite, a1, c1, 0}, {FactorKind::SpFinite, a2, c2, 0}};
    d.n = a1 * a1 + a1 + c1 * c1 + a2 * a2 + a2 + c2 * c2;
    return d;
}

// Doubles every part: (a, b, ...) -> (a, a, b, b, ...).
Partition doubled(const Partition& p) { return concat(p, p); }

Outcome criterion_second_example() {
    Outcome o;
    SupercuspidalDatum d = sp_two_factor(8, 3, 6, 5);
    ConjectureReport r = check_datum(d);
    Partition want_param = concat(concat(string_interval(29), string_interval(3)),
                                  concat(string_interval(15), string_interval(3)));
    Partition want_wf = concat(concat(string_interval(22), string_interval(22)),
                               concat(string_interval(10), string_interval(2)));
    if (r.langlands != want_param) o.fail("parameter is " + r.langlands.str());
    if (r.wavefront != want_wf) o.fail("wavefront is " + r.wavefront.str());
    // The split of the transposed degree-one parameter into gamma blocks
    // (M = larger, m = smaller of each sign), crossed because the maxima
    // sit on different factors here.
    Part Mp = 8, Mm = 5, mp = 6, mm = 3;
    Partition gpM = concat(Partition{2 * Mp + 1}, doubled(string_interval(2 * Mp - 1)));
    Partition gpm = doubled(string_interval(2 * mp));
    Partition gmM = concat(Partition{2 * Mm}, doubled(string_interval(2 * Mm - 2)));
    Partition gmm = doubled(string_interval(2 * mm - 1));
    std::vector<Part> minus =
        concat(sum(gpM, gmm), sum(gpm, gmM)).parts();
    --minus.back();  // the bound has 4n + 2 boxes; drop the extra 1
    Partition inter = collapse(type_c(d.n), Partition(std::move(minus)));
    Partition want_inter{22, 22, 20, 20, 18, 18, 16, 16, 14, 14, 12, 12, 10, 10,
                         10, 8,  8,  8,  6,  6,  6,  4,  4,  4,  2,  2,  2,  2};
    if (inter != want_inter) o.fail("intermediate collapse is " + inter.str());
    if (!r.dominance_holds) o.fail("dominance fails");
    if (o.ok) o.detail = "(8,3) x (6,5): parameter, wavefront, collapse, bound";
    return o;
}

Outcome criterion_first_example() {
    Outcome o;
    ConjectureReport r = check_datum(sp_two_factor(8, 5, 6, 2));
    Partition want = concat(concat(string_interval(26), string_interval(16)),
                            concat(string_interval(8), string_interval(6)));
    Partition tabulated = concat(concat(string_interval(26), string_interval(18)),
                                 concat(string_interval(6), string_interval(6)));
    if (r.wavefront != want) o.fail("wavefront is " + r.wavefront.str());
    if (r.wavefront == tabulated) o.fail("wavefront matches the superseded value");
    if (!r.dominance_holds) o.fail("dominance fails");
    if (o.ok)
        o.detail =
            "(8,5) x (6,2): wavefront " + want.str() +
            "; note: diverges from the previously tabulated " + tabulated.str() +
            " (strings [26],[18],[6],[6]), which is inconsistent with the "
            "degree-one closed form";
    return o;
}

Outcome criterion_strict_witness() {
    Outcome o;
    SupercuspidalDatum d;
    d.group = GroupKind::Sp;
    d.n = 2;
    d.factors = {{FactorKind::SpFinite, 0, 0, 0}, {FactorKind::SpFinite, 0, 0, 0}};
    d.unitary = {{1, 1, 0, 1}, {1, 0, 1, 1}};
    ConjectureReport r = check_datum(d);
    if (r.wavefront != Partition{2, 2}) o.fail("wavefront is " + r.wavefront.str());
    if (r.dual_of_langlands != Partition{4})
        o.fail("dual is " + r.dual_of_langlands.str());
    if (!r.dominance_holds || r.equality) o.fail("bound is not strict");
    if (o.ok) o.detail = "(2,2) < (4)";
    return o;
}

Outcome criterion_so_pipelines() {
    Outcome o;
    for (GroupKind g : {GroupKind::SOodd, GroupKind::SOeven, GroupKind::URamified}) {
        VerifySummary s = run_verification(g, 8);
        if (!s.dominance_failures.empty()) {
            o.fail(std::string(to_string(g)) + " dominance failure: " +
                   s.dominance_failures.front().to_json_text());
            break;
        }
        o.detail += (o.detail.empty() ? "" : "; ") + std::string(to_string(g)) + " " +
                    std::to_string(s.count);
    }
    return o;
}

Outcome criterion_g2() {
    Outcome o;
    for (const G2CheckResult& c : verify_g2(bundled_g2_tables())) {
        if (!c.passed) o.fail(c.name + ": " + c.detail);
        o.detail += (o.detail.empty() ? "" : ", ") + c.name;
    }
    return o;
}

Outcome criterion_transpose() {
    Outcome o;
    for (Part n = 0; n <= 12 && o.ok; ++n) {
        std::vector<Partition> all = partitions_of(n);
        for (const Partition& p : all) {
            if (transpose(transpose(p)) != p) {
                o.fail("transpose not involutive at " + p.str());
                break;
            }
            for (const Partition& q : all)
                if (dom_leq(p, q) && !dom_geq(transpose(p), transpose(q))) {
                    o.fail("transpose not order-reversing at " + p.str());
                    break;
                }
        }
    }
    if (o.ok) o.detail = "all partitions of size <= 12";
    return o;
}

}  // namespace

std::vector<CriterionResult> run_acceptance(std::uint64_t seed) {
    struct Spec {
        int id;
        const char* name;
        double budget;  // seconds; 0 = no limit
        Outcome (*run)(std::uint64_t);
    };
    const std::vector<Spec> specs = {
        {1, "partition-laws", 5.0,
         [](std::uint64_t s) { return criterion_partition_laws(s); }},
        {2, "collapse-oracle", 30.0,
         [](std::uint64_t) { return criterion_collapse_oracle(); }},
        {3, "duality-coherence", 10.0,
         [](std::uint64_t) { return criterion_duality(); }},
        {4, "springer-sweep", 10.0,
         [](std::uint64_t) { return criterion_springer_sweep(); }},
        {5, "sp-pipeline", 60.0, [](std::uint64_t) { return criterion_sp_pipeline(); }},
        {6, "second-example", 0.0,
         [](std::uint64_t) { return criterion_second_example(); }},
        {7, "first-example", 0.0,
         [](std::uint64_t) { return criterion_first_example(); }},
        {8, "strict-witness", 0.0,
         [](std::uint64_t) { return criterion_strict_witness(); }},
        {9, "so-pipelines", 60.0,
         [](std::uint64_t) { return criterion_so_pipelines(); }},
        {10, "g2-suite", 0.0, [](std::uint64_t) { return criterion_g2(); }},
        {11, "gl-sanity", 0.0, [](std::uint64_t) { return criterion_transpose(); }},
    };
    std::vector<CriterionResult> out;
    for (const Spec& s : specs) {
        CriterionResult r;
        r.id = s.id;
        r.name = s.name;
        auto t0 = std::chrono::steady_clock::now();
        try {
            Outcome oc = s.run(seed);
            r.passed = oc.ok;
            r.detail = oc.detail;
        } catch (const std::exception& e) {
            r.passed = false;
            r.detail = std::string("exception: ") + e.what();
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                        .count();
        if (s.budget > 0 && r.seconds >= s.budget) {
            r.passed = false;
            r.detail += " [over time budget]";
        }
        out.push_back(std::move(r));
    }
    return out;
}

bool print_acceptance(const std::vector<CriterionResult>& results) {
    bool all = true;
    for (const CriterionResult& r : results) {
        std::printf("criterion %2d %-18s %s  (%.2fs)%s%s\n", r.id, r.name.c_str(),
                    r.passed ? "PASS" : "FAIL", r.seconds,
                    r.detail.empty() ? "" : "  ", r.detail.c_str());
        all = all && r.passed;
    }
    std::printf("%s\n", all ? "ALL CRITERIA PASS" : "CRITERIA FAILED");
    return all;
}

}  // namespace orbits
