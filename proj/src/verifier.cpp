#include "orbits/verifier.hpp"

#include <json.hpp>

#include <algorithm>
#include <stdexcept>

namespace orbits {

using nlohmann::json;

std::string ConjectureReport::to_json_text() const {
    json j;
    j["datum"] = json::parse(datum.to_json_text());
    j["langlands"] = langlands.str();
    j["dual_of_langlands"] = dual_of_langlands.str();
    j["wavefront"] = wavefront.str();
    j["dominance_holds"] = dominance_holds;
    j["equality"] = equality;
    j["hyperspecial"] = hyperspecial;
    j["notes"] = notes;
    return j.dump();
}

ConjectureReport check_datum(const SupercuspidalDatum& d, CheckOptions opt) {
    ValidatedDatum v = validate_datum(d);
    ConjectureReport r;
    r.datum = v.datum;
    NilpotentOrbit param = build_param(v.datum);
    r.langlands = param.partition;
    r.dual_of_langlands = dual_of_param(v, param);
    WavefrontResult wf = wf_total(v, opt.run_oracle);
    r.wavefront = wf.combined;
    Dominance dom = dominates(r.wavefront, r.dual_of_langlands);
    r.dominance_holds = dom == Dominance::Below || dom == Dominance::Equal;
    r.equality = dom == Dominance::Equal;
    bool f2_empty = v.datum.factors.empty() ||
                    (v.datum.factors[1].m_plus == 0 && v.datum.factors[1].m_minus == 0);
    for (const UnitaryPiece& p : v.datum.unitary) f2_empty = f2_empty && p.m2 == 0;
    r.hyperspecial = v.n2 == 0 && f2_empty;
    if (!wf.methods_agree)
        r.notes.push_back("mu-sum method differs: " + wf.mu_sum.str());
    if (wf.oracle == OracleVerdict::Disagrees)
        r.notes.push_back("springer oracle disagrees with closed form");
    return r;
}

namespace {

Part tri(Part m) { return m * (m + 1) / 2; }

struct PieceType {
    Part k, m1, m2;
    Part w() const { return k * (tri(m1) + tri(m2)); }
};

std::vector<PieceType> piece_universe(Part budget) {
    std::vector<PieceType> out;
    for (Part k = 1; k <= budget; ++k)
        for (Part m1 = 0; k * tri(m1) <= budget; ++m1)
            for (Part m2 = (m1 == 0 ? 1 : 0); k * (tri(m1) + tri(m2)) <= budget; ++m2)
                out.push_back({k, m1, m2});
    return out;
}

void enum_pieces(const std::vector<PieceType>& uni, size_t idx, Part budget,
                 std::vector<UnitaryPiece>& cur,
                 const std::function<void(const std::vector<UnitaryPiece>&)>& sink) {
    if (idx == uni.size()) {
        sink(cur);
        return;
    }
    enum_pieces(uni, idx + 1, budget, cur, sink);
    const PieceType& t = uni[idx];
    Part w = t.w();
    for (Part c = 1; c * w <= budget; ++c) {
        cur.push_back({t.k, t.m1, t.m2, c});
        enum_pieces(uni, idx + 1, budget - c * w, cur, sink);
        cur.pop_back();
    }
}

// Degree-one fillings (m_plus, m_minus, rank contribution) with
// contribution <= cap, for one factor kind.
std::vector<std::array<Part, 3>> factor_fills(FactorKind kind, int an, Part cap) {
    std::vector<std::array<Part, 3>> out;
    for (Part a = 0;; ++a) {
        Part base = kind == FactorKind::SpFinite    ? a * a + a
                    : kind == FactorKind::SOoddFinite ? a * a + a
                                                      : a * a - an / 2;
        if (base > cap && a > 0) break;
        for (Part c = 0;; ++c) {
            Part f = base;
            switch (kind) {
                case FactorKind::SpFinite: f += c * c; break;
                case FactorKind::SOoddFinite: f += c * c + c; break;
                case FactorKind::SOevenFinite: f += c * c; break;
            }
            if (f > cap && c > 0) break;
            if (f <= cap) out.push_back({a, c, f});
            if (c > cap + 2) break;
        }
        if (a > cap + 2) break;
    }
    return out;
}

Part factor_one_rank(const SupercuspidalDatum& d) {
    Part u1 = 0;
    for (const UnitaryPiece& p : d.unitary) u1 += p.count * p.k * tri(p.m1);
    if (!d.factors.empty()) u1 += degree_one_rank(d.factors[0]);
    return u1;
}

SupercuspidalDatum swapped(const SupercuspidalDatum& d) {
    SupercuspidalDatum s = d;
    if (s.factors.size() == 2) std::swap(s.factors[0], s.factors[1]);
    for (UnitaryPiece& p : s.unitary) std::swap(p.m1, p.m2);
    std::sort(s.unitary.begin(), s.unitary.end(), [](auto& x, auto& y) {
        return std::tie(x.k, x.m1, x.m2) < std::tie(y.k, y.m1, y.m2);
    });
    return s;
}

std::string datum_key(const SupercuspidalDatum& d) { return d.to_json_text(); }

// Canonical orientation under the factor swap: the heavier factor (and on
// ties, the lexicographically smaller serialization) sits first, so the
// hyperspecial representative of each swap class is the one emitted.
bool swap_canonical(const SupercuspidalDatum& d) {
    SupercuspidalDatum s = swapped(d);
    Part n1 = factor_one_rank(d), n1s = factor_one_rank(s);
    if (n1 != n1s) return n1 > n1s;
    return datum_key(d) <= datum_key(s);
}

}  // namespace

void enumerate_data(GroupKind group, Part max_rank,
                    const std::function<void(const SupercuspidalDatum&)>& sink) {
    if (max_rank < 0) throw std::invalid_argument("enumerate_data: negative rank bound");
    if (max_rank > 24) throw std::invalid_argument("enumerate_data: rank bound exceeds 24");

    // (an1, an2) configurations per group kind; Sp uses a single dummy.
    std::vector<std::pair<int, int>> ans;
    switch (group) {
        case GroupKind::Sp:
        case GroupKind::UUnramified: ans = {{0, 0}}; break;
        case GroupKind::SOodd: ans = {{1, 0}, {0, 1}, {1, 2}, {2, 1}}; break;
        case GroupKind::SOeven: ans = {{0, 0}, {0, 2}, {2, 0}, {2, 2}, {1, 1}}; break;
        case GroupKind::URamified: ans = {{0, 0}, {0, 1}, {0, 2}}; break;
    }
    auto kind_of = [](int an) {
        return an == 1 ? FactorKind::SOoddFinite : FactorKind::SOevenFinite;
    };

    std::vector<PieceType> uni = piece_universe(max_rank);
    std::vector<UnitaryPiece> cur;
    for (Part n = 0; n <= max_rank; ++n) {
        for (auto [an1, an2] : ans) {
            // Factor-rank total S = n1 + n2 for this configuration.
            Part S;
            SupercuspidalDatum base;
            base.group = group;
            switch (group) {
                case GroupKind::Sp:
                    S = n;
                    base.n = n;
                    base.factors = {{FactorKind::SpFinite, 0, 0, 0},
                                    {FactorKind::SpFinite, 0, 0, 0}};
                    break;
                case GroupKind::SOodd:
                    if ((2 * n + 1 - an1 - an2) % 2 != 0) continue;
                    S = (2 * n + 1 - an1 - an2) / 2;
                    base.n = n;
                    base.factors = {{kind_of(an1), 0, 0, an1}, {kind_of(an2), 0, 0, an2}};
                    break;
                case GroupKind::SOeven:
                    S = n - (an1 + an2) / 2;
                    base.n = n;
                    base.factors = {{kind_of(an1), 0, 0, an1}, {kind_of(an2), 0, 0, an2}};
                    break;
                case GroupKind::URamified:
                    // max_rank bounds n1 + n2 here; n is the matrix size N.
                    S = n;
                    base.n = 2 * n + an2;
                    base.factors = {{FactorKind::SpFinite, 0, 0, 0},
                                    {kind_of(an2), 0, 0, an2}};
                    break;
                case GroupKind::UUnramified:
                    S = n;
                    base.n = 2 * n;
                    break;
            }
            if (S < 0) continue;
            enum_pieces(uni, 0, S + 2, cur, [&](const std::vector<UnitaryPiece>& ps) {
                Part u1 = 0, u2 = 0;
                for (const UnitaryPiece& p : ps) {
                    u1 += p.count * p.k * tri(p.m1);
                    u2 += p.count * p.k * tri(p.m2);
                }
                if (base.factors.empty()) {
                    if (u1 + u2 != S) return;
                    SupercuspidalDatum d = base;
                    d.unitary = ps;
                    std::sort(d.unitary.begin(), d.unitary.end(), [](auto& x, auto& y) {
                        return std::tie(x.k, x.m1, x.m2) < std::tie(y.k, y.m1, y.m2);
                    });
                    if (swap_canonical(d)) sink(d);
                    return;
                }
                Part R = S - u1 - u2;
                auto fills1 = factor_fills(base.factors[0].kind, an1, R + 1);
                for (auto [a1, c1, f1] : fills1) {
                    if (u1 + f1 < 0) continue;
                    auto fills2 = factor_fills(base.factors[1].kind, an2, R - f1);
                    for (auto [a2, c2, f2] : fills2) {
                        if (f1 + f2 != R || u2 + f2 < 0) continue;
                        SupercuspidalDatum d = base;
                        d.unitary = ps;
                        std::sort(d.unitary.begin(), d.unitary.end(),
                                  [](auto& x, auto& y) {
                                      return std::tie(x.k, x.m1, x.m2) <
                                             std::tie(y.k, y.m1, y.m2);
                                  });
                        d.factors[0].m_plus = a1;
                        d.factors[0].m_minus = c1;
                        d.factors[1].m_plus = a2;
                        d.factors[1].m_minus = c2;
                        if (group == GroupKind::Sp && !swap_canonical(d))
                            continue;  // factor-swap canonical form only
                        sink(d);
                    }
                }
            });
        }
    }
}

VerifySummary run_verification(GroupKind group, Part max_rank, VerifyOptions opt) {
    VerifySummary s;
    enumerate_data(group, max_rank, [&](const SupercuspidalDatum& d) {
        ConjectureReport r = check_datum(d, {opt.run_oracle});
        if (opt.hyperspecial_only && !r.hyperspecial) return;
        ++s.count;
        if (r.equality) ++s.equality_count;
        if (r.hyperspecial) {
            ++s.hyperspecial_count;
            if (r.equality) ++s.hyperspecial_equality_count;
        }
        if (!r.dominance_holds) s.dominance_failures.push_back(r);
        for (const std::string& note : r.notes) {
            if (note.rfind("mu-sum", 0) == 0) ++s.mu_sum_divergences;
            if (note.rfind("springer", 0) == 0) ++s.oracle_divergences;
        }
    });
    return s;
}

}  // namespace orbits
