#include "orbits/g2.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <stdexcept>

#include "g2_data.hpp"

namespace orbits {

using nlohmann::json;

const char* to_string(G2Orbit o) {
    switch (o) {
        case G2Orbit::One: return "One";
        case G2Orbit::A1: return "A1";
        case G2Orbit::A1tilde: return "A1tilde";
        case G2Orbit::G2a1: return "G2a1";
        case G2Orbit::G2reg: return "G2reg";
    }
    throw std::logic_error("bad G2 orbit");
}

G2Orbit g2_orbit_from_string(const std::string& s) {
    for (G2Orbit o : {G2Orbit::One, G2Orbit::A1, G2Orbit::A1tilde, G2Orbit::G2a1,
                      G2Orbit::G2reg})
        if (s == to_string(o)) return o;
    throw std::invalid_argument("unknown G2 orbit label: " + s);
}

G2Orbit g2_dual(G2Orbit o) {
    switch (o) {
        case G2Orbit::One: return G2Orbit::G2reg;
        case G2Orbit::G2reg: return G2Orbit::One;
        default: return G2Orbit::G2a1;
    }
}

namespace {

G2Orbit orb(const json& j, const std::string& where) {
    if (!j.is_string()) throw std::invalid_argument("non-string orbit in " + where);
    return g2_orbit_from_string(j.get<std::string>());
}

}  // namespace

G2Tables parse_g2_tables(const std::string& text) {
    json j = json::parse(text);
    G2Tables t;
    for (const json& r : j.at("tempered_rows")) {
        G2Row row;
        row.pi_label = r.at("pi").get<std::string>();
        const std::string& where = row.pi_label;
        row.packet_id = r.at("packet").get<std::string>();
        row.dual_param = orb(r.at("dual_param"), where);
        row.az_label = r.at("az").get<std::string>();
        for (const json& w : r.at("wf_of_az")) row.wf_of_az.push_back(orb(w, where));
        if (row.wf_of_az.empty())
            throw std::invalid_argument("empty wavefront cell in row " + where);
        row.is_generic = r.at("generic").get<bool>();
        row.is_trivial = r.at("trivial").get<bool>();
        t.rows.push_back(std::move(row));
    }
    for (const json& p : j.at("packets")) {
        G2Packet pk;
        pk.id = p.at("id").get<std::string>();
        pk.dual_param = orb(p.at("dual_param"), pk.id);
        pk.frobenius = p.at("frobenius").get<std::string>();
        for (const json& m : p.at("members")) pk.members.push_back(m.get<std::string>());
        std::string att = p.at("attained_by").get<std::string>();
        if (att != "all" && att != "some")
            throw std::invalid_argument("bad attained_by in packet " + pk.id);
        pk.attained_by_all = att == "all";
        t.packets.push_back(std::move(pk));
    }
    for (const json& r : j.at("supercuspidal_rows")) {
        G2SupercuspidalRow row;
        row.id = r.at("id").get<std::string>();
        row.dual_param = orb(r.at("dual_param"), row.id);
        row.printed_dual = orb(r.at("printed_dual"), row.id);
        row.kwf_orbit = orb(r.at("kwf_orbit"), row.id);
        row.kwf_class = r.at("kwf_class").get<std::string>();
        row.ds_value = orb(r.at("ds"), row.id);
        row.verdict = r.at("verdict").get<std::string>();
        if (row.verdict != "equal" && row.verdict != "less" && row.verdict != "greater")
            throw std::invalid_argument("bad verdict in row " + row.id);
        t.supercuspidals.push_back(std::move(row));
    }
    return t;
}

const std::string& bundled_g2_json() {
    static const std::string text = kG2TablesJson;
    return text;
}

const G2Tables& bundled_g2_tables() {
    static const G2Tables t = parse_g2_tables(bundled_g2_json());
    return t;
}

std::vector<G2CheckResult> verify_g2(const G2Tables& t) {
    std::vector<G2CheckResult> out;
    auto add = [&](const std::string& name, bool ok, std::string detail) {
        out.push_back({name, ok, std::move(detail)});
    };

    std::map<std::string, const G2Row*> by_label;
    bool unique = true;
    std::string dup;
    for (const G2Row& r : t.rows)
        if (!by_label.emplace(r.pi_label, &r).second) {
            unique = false;
            dup = r.pi_label;
        }

    // (a) AZ is an involution on row labels.
    bool inv = unique;
    std::string inv_detail = unique ? "" : "duplicate row label " + dup;
    if (unique)
        for (const G2Row& r : t.rows) {
            auto it = by_label.find(r.az_label);
            if (it == by_label.end()) {
                inv = false;
                inv_detail = r.pi_label + ": AZ-dual " + r.az_label + " is not a row";
                break;
            }
            if (it->second->az_label != r.pi_label) {
                inv = false;
                inv_detail = r.pi_label + ": AZ does not square to the identity";
                break;
            }
        }
    add("az-involution", inv, inv_detail);

    // (b) every wavefront value is bounded by the dual of the parameter.
    bool bound = true;
    std::string bound_detail;
    for (const G2Row& r : t.rows)
        for (G2Orbit w : r.wf_of_az)
            if (w > g2_dual(r.dual_param)) {
                bound = false;
                bound_detail = r.pi_label;
            }
    add("wavefront-bound", bound, bound_detail);

    // (c) equality is attained in every packet.
    bool attain = true;
    std::string attain_detail;
    for (const G2Packet& p : t.packets) {
        G2Orbit target = g2_dual(p.dual_param);
        bool any = false, all = true;
        for (const std::string& m : p.members) {
            auto it = by_label.find(m);
            if (it == by_label.end()) {
                attain = false;
                attain_detail = p.id + ": unknown member " + m;
                break;
            }
            const G2Row& r = *it->second;
            if (r.dual_param != p.dual_param) {
                attain = false;
                attain_detail = p.id + ": member " + m + " carries a different parameter";
                break;
            }
            bool hit = std::find(r.wf_of_az.begin(), r.wf_of_az.end(), target) !=
                       r.wf_of_az.end();
            any = any || hit;
            all = all && hit && r.wf_of_az.size() == 1;
        }
        if (!attain) break;
        if (p.attained_by_all ? !all : !any) {
            attain = false;
            attain_detail = p.id + ": equality not attained";
            break;
        }
    }
    add("packet-equality", attain, attain_detail);

    // (d) wavefronts lie in {top, subregular, bottom}; the bottom occurs
    // exactly where the AZ-dual is the trivial representation.
    bool spec_orbits = true;
    std::string spec_detail;
    for (const G2Row& r : t.rows) {
        auto az_it = by_label.find(r.az_label);
        bool az_trivial = az_it != by_label.end() && az_it->second->is_trivial;
        for (G2Orbit w : r.wf_of_az) {
            if (w == G2Orbit::A1 || w == G2Orbit::A1tilde) {
                spec_orbits = false;
                spec_detail = r.pi_label + ": minimal-type wavefront";
            }
            if ((w == G2Orbit::One) != az_trivial) {
                spec_orbits = false;
                spec_detail = r.pi_label + ": bottom wavefront mismatch";
            }
        }
    }
    add("wavefront-orbits", spec_orbits, spec_detail);

    // (e) the supercuspidal table: printed duals, the bound, and the
    // three-way comparison column.
    bool sc = true;
    std::string sc_detail;
    for (const G2SupercuspidalRow& r : t.supercuspidals) {
        std::string v = r.ds_value == r.dual_param ? "equal"
                        : r.ds_value < r.dual_param ? "less"
                                                    : "greater";
        if (r.printed_dual != g2_dual(r.dual_param) || r.kwf_orbit > r.printed_dual ||
            v != r.verdict) {
            sc = false;
            sc_detail = r.id;
            break;
        }
    }
    if (sc) {
        auto verdict_of = [&](const std::string& id) -> std::string {
            for (const G2SupercuspidalRow& r : t.supercuspidals)
                if (r.id == id) return r.verdict;
            return "missing";
        };
        if (verdict_of("mu2-singular") != "less" || verdict_of("mu3-singular") != "less" ||
            verdict_of("A1-param-singular") != "greater") {
            sc = false;
            sc_detail = "three-way comparison rows";
        }
    }
    add("supercuspidal-table", sc, sc_detail);

    return out;
}

}  // namespace orbits
