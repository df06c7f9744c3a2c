#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "orbits/g2.hpp"
#include "orbits/orbit.hpp"
#include "orbits/partition.hpp"
#include "orbits/selftest.hpp"
#include "orbits/verifier.hpp"

using namespace orbits;

namespace {

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

SupercuspidalDatum load_datum(const std::string& path) {
    return SupercuspidalDatum::from_json_text(slurp(path));
}

GroupKind group_from_string(const std::string& s) {
    for (GroupKind g : {GroupKind::Sp, GroupKind::SOodd, GroupKind::SOeven,
                        GroupKind::UUnramified, GroupKind::URamified})
        if (s == to_string(g)) return g;
    throw std::invalid_argument("unknown group kind: " + s);
}

OrbitKind kind_from(const std::string& fam, Part rank) {
    return {family_from_string(fam), rank};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact combinatorics of nilpotent orbits, Springer data, and "
                 "depth-zero wavefront sets"};
    app.require_subcommand(1);

    std::string p_text, q_text, fam = "C", datum_path = "-", group_name = "Sp";
    std::string method = "per-factor";
    Part rank = 0, alpha = 0, max_rank = 4;
    bool use_oracle = false, as_json = false, hyperspecial_only = false;
    bool g2_verify = false, g2_dump = false;
    std::uint64_t seed = 20240817;

    auto* c_transpose = app.add_subcommand("transpose", "conjugate Young diagram");
    c_transpose->add_option("partition", p_text)->required();

    auto* c_sum = app.add_subcommand("sum", "componentwise sum");
    c_sum->add_option("a", p_text)->required();
    c_sum->add_option("b", q_text)->required();

    auto* c_concat = app.add_subcommand("concat", "multiset union of parts");
    c_concat->add_option("a", p_text)->required();
    c_concat->add_option("b", q_text)->required();

    auto* c_collapse = app.add_subcommand("collapse", "parity collapse");
    c_collapse->add_option("--kind", fam, "family A|B|C|D")->required();
    c_collapse->add_option("--rank", rank)->required();
    c_collapse->add_option("partition", p_text)->required();

    auto* c_dual = app.add_subcommand("dual", "order-reversing duality");
    c_dual->add_option("--from", fam, "source family A|B|C|D")->required();
    c_dual->add_option("--rank", rank)->required();
    c_dual->add_option("partition", p_text)->required();

    auto* c_orbits = app.add_subcommand("orbits", "all valid partitions of a kind");
    c_orbits->add_option("--kind", fam)->required();
    c_orbits->add_option("--rank", rank)->required();

    auto* c_string = app.add_subcommand("string", "the string [a] = (a, a-2, ...)");
    c_string->add_option("alpha", alpha)->required();

    auto* c_param = app.add_subcommand("param", "nilpotent Langlands parameter");
    c_param->add_option("--datum,datum", datum_path, "datum JSON path or -");
    c_param->add_flag("--json", as_json);

    auto* c_wf = app.add_subcommand("wavefront", "wavefront set of a datum");
    c_wf->add_option("--datum,datum", datum_path);
    c_wf->add_option("--method", method, "per-factor|mu-sum");
    c_wf->add_flag("--oracle", use_oracle);
    c_wf->add_flag("--json", as_json);

    auto* c_check = app.add_subcommand("check", "full conjecture report");
    c_check->add_option("--datum,datum", datum_path);
    c_check->add_flag("--oracle", use_oracle);

    auto* c_enum = app.add_subcommand("enumerate", "verify over all data of a group");
    c_enum->add_option("--group", group_name, "Sp|SOodd|SOeven|UUnramified|URamified");
    c_enum->add_option("--max-rank", max_rank);
    c_enum->add_flag("--hyperspecial-only", hyperspecial_only);
    c_enum->add_flag("--oracle", use_oracle);
    c_enum->add_flag("--json", as_json, "emit one report per line");

    auto* c_oracle = app.add_subcommand("oracle", "Springer-pipeline wavefront");
    c_oracle->add_option("--datum,datum", datum_path);

    auto* c_g2 = app.add_subcommand("g2", "exceptional-group tables");
    c_g2->add_flag("--verify", g2_verify);
    c_g2->add_flag("--dump", g2_dump);

    auto* c_self = app.add_subcommand("selftest", "acceptance suite");
    c_self->add_option("--seed", seed);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return 2;
    }

    try {
        if (*c_transpose) {
            std::cout << transpose(Partition::parse(p_text)).str() << "\n";
        } else if (*c_sum) {
            std::cout << sum(Partition::parse(p_text), Partition::parse(q_text)).str()
                      << "\n";
        } else if (*c_concat) {
            std::cout << concat(Partition::parse(p_text), Partition::parse(q_text)).str()
                      << "\n";
        } else if (*c_collapse) {
            std::cout << collapse(kind_from(fam, rank), Partition::parse(p_text)).str()
                      << "\n";
        } else if (*c_dual) {
            std::cout << dual(kind_from(fam, rank), Partition::parse(p_text))
                             .partition.str()
                      << "\n";
        } else if (*c_orbits) {
            PartitionSet all = enumerate_orbits(kind_from(fam, rank));
            for (const Partition& p : all.elements()) std::cout << p.str() << "\n";
        } else if (*c_string) {
            std::cout << string_interval(alpha).str() << "\n";
        } else if (*c_param) {
            NilpotentOrbit o = build_param(load_datum(datum_path));
            if (as_json) {
                nlohmann::json j{{"family", to_string(o.kind.family)},
                                 {"rank", o.kind.rank},
                                 {"partition", o.partition.str()}};
                std::cout << j.dump() << "\n";
            } else {
                std::cout << o.partition.str() << "\n";
            }
        } else if (*c_wf) {
            ValidatedDatum v = validate_datum(load_datum(datum_path));
            WavefrontResult r = wf_total(v, use_oracle);
            const Partition& out = method == "mu-sum" ? r.mu_sum : r.combined;
            if (method != "mu-sum" && method != "per-factor")
                throw std::invalid_argument("unknown method: " + method);
            if (as_json) {
                nlohmann::json j{{"wavefront", out.str()},
                                 {"methods_agree", r.methods_agree}};
                if (r.oracle != OracleVerdict::NotRun)
                    j["oracle_agrees"] = r.oracle == OracleVerdict::Agrees;
                std::cout << j.dump() << "\n";
            } else {
                std::cout << out.str() << "\n";
            }
            if (r.oracle == OracleVerdict::Disagrees) return 1;
        } else if (*c_check) {
            ConjectureReport r = check_datum(load_datum(datum_path), {use_oracle});
            std::cout << r.to_json_text() << "\n";
            if (!r.dominance_holds) return 1;
        } else if (*c_enum) {
            GroupKind g = group_from_string(group_name);
            if (as_json) {
                bool ok = true;
                enumerate_data(g, max_rank, [&](const SupercuspidalDatum& d) {
                    ConjectureReport r = check_datum(d, {use_oracle});
                    if (hyperspecial_only && !r.hyperspecial) return;
                    std::cout << r.to_json_text() << "\n";
                    ok = ok && r.dominance_holds;
                });
                if (!ok) return 1;
            } else {
                VerifySummary s =
                    run_verification(g, max_rank, {hyperspecial_only, use_oracle});
                std::cout << "data checked:       " << s.count << "\n"
                          << "equalities:         " << s.equality_count << "\n"
                          << "hyperspecial:       " << s.hyperspecial_count << " ("
                          << s.hyperspecial_equality_count << " equalities)\n"
                          << "dominance failures: " << s.dominance_failures.size()
                          << "\n";
                for (const ConjectureReport& r : s.dominance_failures)
                    std::cout << "  " << r.to_json_text() << "\n";
                if (!s.dominance_failures.empty()) return 1;
            }
        } else if (*c_oracle) {
            SupercuspidalDatum d = load_datum(datum_path);
            validate_datum(d);
            bool has = !d.factors.empty();
            bool agree = true;
            for (int i = 0; i < 2; ++i) {
                Partition closed = wf_factor(has ? &d.factors[i] : nullptr, d.unitary, i);
                Partition oracle =
                    wf_factor_oracle(has ? &d.factors[i] : nullptr, d.unitary, i);
                std::cout << "factor " << i + 1 << ": closed " << closed.str()
                          << ", oracle " << oracle.str() << "\n";
                agree = agree && closed == oracle;
            }
            if (!agree) return 1;
        } else if (*c_g2) {
            if (g2_dump) std::cout << bundled_g2_json();
            if (g2_verify || !g2_dump) {
                bool all = true;
                for (const G2CheckResult& c : verify_g2(bundled_g2_tables())) {
                    std::cout << c.name << ": " << (c.passed ? "pass" : "fail");
                    if (!c.detail.empty() && !c.passed) std::cout << " (" << c.detail << ")";
                    std::cout << "\n";
                    all = all && c.passed;
                }
                if (!all) return 1;
            }
        } else if (*c_self) {
            if (!print_acceptance(run_acceptance(seed))) return 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
