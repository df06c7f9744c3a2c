#include "orbits/langlands.hpp"

#include <json.hpp>

#include <cmath>
#include <stdexcept>

namespace orbits {

using nlohmann::json;

const char* to_string(GroupKind g) {
    switch (g) {
        case GroupKind::Sp: return "Sp";
        case GroupKind::SOodd: return "SOodd";
        case GroupKind::SOeven: return "SOeven";
        case GroupKind::UUnramified: return "UUnramified";
        case GroupKind::URamified: return "URamified";
    }
    return "?";
}

const char* to_string(FactorKind f) {
    switch (f) {
        case FactorKind::SpFinite: return "SpFinite";
        case FactorKind::SOoddFinite: return "SOoddFinite";
        case FactorKind::SOevenFinite: return "SOevenFinite";
    }
    return "?";
}

static GroupKind group_from_string(const std::string& s) {
    if (s == "Sp") return GroupKind::Sp;
    if (s == "SOodd") return GroupKind::SOodd;
    if (s == "SOeven") return GroupKind::SOeven;
    if (s == "UUnramified") return GroupKind::UUnramified;
    if (s == "URamified") return GroupKind::URamified;
    throw std::invalid_argument("unknown group kind: " + s);
}

static FactorKind factor_from_string(const std::string& s) {
    if (s == "SpFinite") return FactorKind::SpFinite;
    if (s == "SOoddFinite") return FactorKind::SOoddFinite;
    if (s == "SOevenFinite") return FactorKind::SOevenFinite;
    throw std::invalid_argument("unknown factor kind: " + s);
}

SupercuspidalDatum SupercuspidalDatum::from_json_text(const std::string& text) {
    json j = json::parse(text);
    SupercuspidalDatum d;
    d.group = group_from_string(j.at("group").at("kind").get<std::string>());
    d.n = j.at("group").at("n").get<Part>();
    if (j.contains("factors")) {
        for (const json& jf : j.at("factors")) {
            CuspidalFactorDatum f;
            f.kind = factor_from_string(jf.at("kind").get<std::string>());
            f.m_plus = jf.value("m_plus", Part{0});
            f.m_minus = jf.value("m_minus", Part{0});
            f.an = jf.value("an", f.kind == FactorKind::SOoddFinite ? 1 : 0);
            d.factors.push_back(f);
        }
    }
    if (j.contains("unitary")) {
        for (const json& jp : j.at("unitary")) {
            UnitaryPiece p;
            p.k = jp.value("k", Part{1});
            p.m1 = jp.value("m1", Part{0});
            p.m2 = jp.value("m2", Part{0});
            p.count = jp.value("count", Part{1});
            d.unitary.push_back(p);
        }
    }
    return d;
}

std::string SupercuspidalDatum::to_json_text() const {
    json j;
    j["group"] = {{"kind", to_string(group)}, {"n", n}};
    j["factors"] = json::array();
    for (const CuspidalFactorDatum& f : factors) {
        json jf = {{"kind", to_string(f.kind)},
                   {"m_plus", f.m_plus},
                   {"m_minus", f.m_minus}};
        if (f.kind != FactorKind::SpFinite) jf["an"] = f.an;
        j["factors"].push_back(jf);
    }
    j["unitary"] = json::array();
    for (const UnitaryPiece& p : unitary)
        j["unitary"].push_back({{"k", p.k}, {"m1", p.m1}, {"m2", p.m2},
                                {"count", p.count}});
    return j.dump();
}

static Part tri(Part m) { return m * (m + 1) / 2; }

Part degree_one_rank(const CuspidalFactorDatum& f) {
    switch (f.kind) {
        case FactorKind::SpFinite:
            return f.m_plus * f.m_plus + f.m_plus + f.m_minus * f.m_minus;
        case FactorKind::SOoddFinite:
            return f.m_plus * f.m_plus + f.m_plus + f.m_minus * f.m_minus + f.m_minus;
        case FactorKind::SOevenFinite:
            return f.m_plus * f.m_plus + f.m_minus * f.m_minus - f.an / 2;
    }
    throw std::logic_error("bad factor kind");
}

static void check_factor(const CuspidalFactorDatum& f) {
    if (f.m_plus < 0 || f.m_minus < 0)
        throw std::invalid_argument("factor: negative triangular parameter");
    bool odd = f.kind == FactorKind::SOoddFinite;
    if (odd && f.an != 1)
        throw std::invalid_argument("SOoddFinite requires an = 1");
    if (f.kind == FactorKind::SOevenFinite && f.an != 0 && f.an != 2)
        throw std::invalid_argument("SOevenFinite requires an in {0,2}");
}

ValidatedDatum validate_datum(const SupercuspidalDatum& d) {
    SupercuspidalDatum w = d;
    for (const UnitaryPiece& p : w.unitary) {
        if (p.k < 1 || p.count < 1 || p.m1 < 0 || p.m2 < 0)
            throw std::invalid_argument("unitary piece: k,count >= 1 and m1,m2 >= 0 required");
        if (p.m1 + p.m2 < 1)
            throw std::invalid_argument("unitary piece: m1 + m2 >= 1 required");
    }
    bool unitary_group =
        w.group == GroupKind::UUnramified;
    if (unitary_group) {
        if (!w.factors.empty())
            throw std::invalid_argument("UUnramified datum carries no degree-one factors");
    } else {
        if (w.factors.size() != 2)
            throw std::invalid_argument("datum requires exactly two parahoric factors");
        for (const CuspidalFactorDatum& f : w.factors) check_factor(f);
    }
    if (w.group == GroupKind::URamified) {
        // Normalize the Sp factor into role (1).
        bool sp1 = w.factors[0].kind == FactorKind::SpFinite;
        bool sp2 = w.factors[1].kind == FactorKind::SpFinite;
        if (sp1 == sp2)
            throw std::invalid_argument(
                "URamified requires one SpFinite and one orthogonal factor");
        if (!sp1) {
            std::swap(w.factors[0], w.factors[1]);
            for (UnitaryPiece& p : w.unitary) std::swap(p.m1, p.m2);
        }
    } else if (!unitary_group) {
        if (w.group == GroupKind::Sp) {
            if (w.factors[0].kind != FactorKind::SpFinite ||
                w.factors[1].kind != FactorKind::SpFinite)
                throw std::invalid_argument("Sp datum requires two SpFinite factors");
        } else {
            for (const CuspidalFactorDatum& f : w.factors)
                if (f.kind == FactorKind::SpFinite)
                    throw std::invalid_argument("SO datum requires orthogonal factors");
        }
    }

    Part u1 = 0, u2 = 0;
    for (const UnitaryPiece& p : w.unitary) {
        u1 += p.count * p.k * tri(p.m1);
        u2 += p.count * p.k * tri(p.m2);
    }
    ValidatedDatum v;
    v.n1 = u1;
    v.n2 = u2;
    if (!unitary_group) {
        v.n1 += degree_one_rank(w.factors[0]);
        v.n2 += degree_one_rank(w.factors[1]);
    }
    if (v.n1 < 0 || v.n2 < 0)
        throw std::invalid_argument("factor rank equation yields a negative rank");

    Part an1 = unitary_group ? 0 : (w.factors[0].kind == FactorKind::SpFinite ? 0 : w.factors[0].an);
    Part an2 = unitary_group ? 0 : (w.factors[1].kind == FactorKind::SpFinite ? 0 : w.factors[1].an);
    switch (w.group) {
        case GroupKind::Sp:
            if (v.n1 + v.n2 != w.n)
                throw std::invalid_argument("rank equation n1 + n2 = n violated");
            break;
        case GroupKind::SOodd:
            if ((an1 + an2) % 2 != 1)
                throw std::invalid_argument("SOodd: anisotropic dimensions must sum odd");
            if (2 * (v.n1 + v.n2) + an1 + an2 != 2 * w.n + 1)
                throw std::invalid_argument("SOodd: dimension identity 2(n1+n2)+an = 2n+1 violated");
            break;
        case GroupKind::SOeven:
            if ((an1 + an2) % 2 != 0)
                throw std::invalid_argument("SOeven: anisotropic dimensions must sum even");
            if (2 * (v.n1 + v.n2) + an1 + an2 != 2 * w.n)
                throw std::invalid_argument("SOeven: dimension identity 2(n1+n2)+an = 2n violated");
            break;
        case GroupKind::URamified:
            if (2 * (v.n1 + v.n2) + an2 != w.n)
                throw std::invalid_argument("URamified: dimension identity 2(n1+n2)+an2 = N violated");
            break;
        case GroupKind::UUnramified:
            if (2 * (v.n1 + v.n2) != w.n)
                throw std::invalid_argument("UUnramified: dimension identity 2(n1+n2) = N violated");
            break;
    }
    v.datum = std::move(w);
    return v;
}

static void append_string(Partition& acc, Part alpha) {
    acc = concat(acc, string_interval(alpha));
}

// SO-type degree-one strings; x1/x2 stand for the m+ (or m-) parameters
// of the two factors; the (even,1) configuration reuses the (1,even)
// bullet with the roles swapped.
static void append_so_strings(Partition& acc, Part x1, Part x2, int an1, int an2) {
    if (an1 == 1 && an2 == 1) {
        append_string(acc, 2 * (x1 + x2) + 1);
        append_string(acc, std::abs(2 * (x1 - x2)) - 1);
    } else if (an1 == 1) {
        append_string(acc, 2 * (x1 + x2));
        append_string(acc, std::abs(2 * (x1 - x2) + 1) - 1);
    } else if (an2 == 1) {
        append_string(acc, 2 * (x2 + x1));
        append_string(acc, std::abs(2 * (x2 - x1) + 1) - 1);
    } else {
        append_string(acc, 2 * (x1 + x2) - 1);
        append_string(acc, std::abs(2 * (x1 - x2)) - 1);
    }
}

NilpotentOrbit build_param(const SupercuspidalDatum& d) {
    ValidatedDatum v = validate_datum(d);
    const SupercuspidalDatum& w = v.datum;
    Partition p;
    for (const UnitaryPiece& pc : w.unitary)
        for (Part c = 0; c < pc.count * 2 * pc.k; ++c) {
            append_string(p, pc.m1 + pc.m2);
            append_string(p, std::abs(pc.m1 - pc.m2) - 1);
        }

    auto a = [&](int i) { return w.factors[i].m_plus; };
    auto c = [&](int i) { return w.factors[i].m_minus; };
    OrbitKind target = type_a(0);
    switch (w.group) {
        case GroupKind::Sp:
            append_string(p, 2 * (a(0) + a(1)) + 1);
            append_string(p, 2 * std::abs(a(0) - a(1)) - 1);
            append_string(p, 2 * (c(0) + c(1)) - 1);
            append_string(p, 2 * std::abs(c(0) - c(1)) - 1);
            target = type_b(w.n);
            break;
        case GroupKind::SOodd:
        case GroupKind::SOeven: {
            int an1 = w.factors[0].an, an2 = w.factors[1].an;
            append_so_strings(p, a(0), a(1), an1, an2);
            append_so_strings(p, c(0), c(1), an1, an2);
            target = w.group == GroupKind::SOodd ? type_c(w.n) : type_d(w.n);
            break;
        }
        case GroupKind::URamified:
            if (w.factors[1].an == 1) {
                append_string(p, 2 * (a(0) + a(1)) + 1);
                append_string(p, 2 * std::abs(a(0) - a(1)) - 1);
                append_string(p, 2 * (c(0) + c(1)));
                append_string(p, std::abs(2 * (c(0) - c(1) - 1)) - 1);
            } else {
                append_string(p, 2 * (a(0) + a(1)));
                append_string(p, std::abs(2 * (a(0) - a(1) + 1)) - 1);
                append_string(p, 2 * (c(0) + c(1)) - 1);
                append_string(p, 2 * std::abs(c(0) - c(1)) - 1);
            }
            target = type_a(p.size());
            break;
        case GroupKind::UUnramified:
            target = type_a(w.n);
            break;
    }
    if (!is_valid(target, p))
        throw std::invalid_argument("build_param: " + p.str() +
                                    " is not a valid type " +
                                    std::string(to_string(target.family)) +
                                    " orbit of rank " + std::to_string(target.rank));
    return {target, p};
}

Partition dual_of_param(const ValidatedDatum& v, const NilpotentOrbit& param) {
    if (v.datum.group != GroupKind::URamified)
        return dual(param.kind, param.partition).partition;
    Part an2 = v.datum.factors[1].an;
    Part N = 2 * (v.n1 + v.n2) + an2;
    std::vector<Part> t = transpose(param.partition).parts();
    Part r = param.partition.size() - N;
    for (; r > 0; --r) {  // shed excess boxes from the bottom
        if (t.empty()) throw std::invalid_argument("dual_of_param: cannot shrink");
        if (--t.back() == 0) t.pop_back();
    }
    if (r < 0) {
        if (t.empty()) t.push_back(0);
        t.front() -= r;
    }
    return Partition(std::move(t));
}

}  // namespace orbits
