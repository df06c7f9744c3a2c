#include "orbits/wavefront.hpp"

#include <cmath>
#include <stdexcept>

namespace orbits {

// (2mk, 2(m-1)k, ..., 2k), empty for m = 0.
static Partition unitary_wf(Part k, Part m) {
    return scale(string_interval(2 * m), k);
}

static Partition degree_one_wf(const CuspidalFactorDatum& f) {
    Part a = f.m_plus, c = f.m_minus;
    switch (f.kind) {
        case FactorKind::SpFinite:
            return concat(string_interval(2 * (a + c)),
                          a >= c ? string_interval(2 * (a - c))
                                 : string_interval(2 * (c - a - 1)));
        case FactorKind::SOoddFinite:
            return concat(string_interval(2 * (a + c) + 1),
                          string_interval(2 * std::abs(a - c) - 1));
        case FactorKind::SOevenFinite:
            return concat(string_interval(2 * (a + c) - 1),
                          string_interval(2 * std::abs(a - c) - 1));
    }
    throw std::logic_error("bad factor kind");
}

static Partition unitary_part(const std::vector<UnitaryPiece>& pieces, int which) {
    Partition acc;
    for (const UnitaryPiece& p : pieces)
        acc = sum(acc, scale(unitary_wf(p.k, which == 0 ? p.m1 : p.m2), p.count));
    return acc;
}

Partition wf_factor(const CuspidalFactorDatum* f,
                    const std::vector<UnitaryPiece>& pieces, int which) {
    Partition total = unitary_part(pieces, which);
    if (!f) return total;  // unitary-group factor, gl ambient
    total = sum(total, degree_one_wf(*f));
    Family fam = f->kind == FactorKind::SpFinite    ? Family::C
                 : f->kind == FactorKind::SOoddFinite ? Family::B
                                                      : Family::D;
    OrbitKind kind{fam, fam == Family::B ? (total.size() - 1) / 2 : total.size() / 2};
    return collapse(kind, total);
}

Partition wf_factor_oracle(const CuspidalFactorDatum* f,
                           const std::vector<UnitaryPiece>& pieces, int which) {
    std::vector<StaircasePiece> sp;
    for (const UnitaryPiece& p : pieces) {
        Part m = which == 0 ? p.m1 : p.m2;
        if (m > 0)
            for (Part c = 0; c < p.count; ++c) sp.push_back(unitary_piece(p.k, m));
    }
    WeylFamily fam = WeylFamily::C;
    if (f) {
        switch (f->kind) {
            case FactorKind::SpFinite:
                fam = WeylFamily::C;
                sp.push_back(b_pair(f->m_plus));
                sp.push_back(d_pair(f->m_minus));
                break;
            case FactorKind::SOoddFinite:
                fam = WeylFamily::B;
                sp.push_back(b_pair(f->m_plus));
                sp.push_back(b_pair(f->m_minus));
                break;
            case FactorKind::SOevenFinite:
                fam = WeylFamily::D;
                sp.push_back(d_pair(f->m_plus));
                sp.push_back(d_pair(f->m_minus));
                break;
        }
    }
    return oracle_wavefront_factor(sp, fam);
}

WavefrontResult wf_total(const ValidatedDatum& v, bool run_oracle) {
    const SupercuspidalDatum& d = v.datum;
    WavefrontResult r;
    bool has_factors = !d.factors.empty();
    for (int i = 0; i < 2; ++i)
        r.per_factor.push_back(
            wf_factor(has_factors ? &d.factors[i] : nullptr, d.unitary, i));
    r.combined = concat(r.per_factor[0], r.per_factor[1]);

    Partition mu_pm, mu_uni;
    for (int i = 0; i < 2; ++i) {
        if (has_factors) mu_pm = concat(mu_pm, degree_one_wf(d.factors[i]));
        mu_uni = concat(mu_uni, unitary_part(d.unitary, i));
    }
    r.mu_sum = sum(mu_pm, mu_uni);
    r.methods_agree = r.combined == r.mu_sum;

    if (run_oracle) {
        bool ok = true;
        for (int i = 0; i < 2; ++i)
            ok = ok && r.per_factor[i] ==
                           wf_factor_oracle(has_factors ? &d.factors[i] : nullptr,
                                            d.unitary, i);
        r.oracle = ok ? OracleVerdict::Agrees : OracleVerdict::Disagrees;
    }
    return r;
}

}  // namespace orbits
