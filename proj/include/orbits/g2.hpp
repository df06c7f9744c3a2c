#ifndef ORBITS_G2_HPP
#define ORBITS_G2_HPP

#include <string>
#include <vector>

namespace orbits {

// The five nilpotent orbits of the exceptional group of rank 2, totally
// ordered by closure.
enum class G2Orbit { One, A1, A1tilde, G2a1, G2reg };

const char* to_string(G2Orbit o);
G2Orbit g2_orbit_from_string(const std::string& s);

// Duality: top and bottom swap, the middle three all map to the
// subregular orbit.
G2Orbit g2_dual(G2Orbit o);

struct G2Row {
    std::string pi_label;
    std::string packet_id;
    G2Orbit dual_param;
    std::string az_label;
    std::vector<G2Orbit> wf_of_az;  // one entry except on the ambiguous row
    bool is_generic = false;
    bool is_trivial = false;
};

struct G2Packet {
    std::string id;
    G2Orbit dual_param;
    std::string frobenius;
    std::vector<std::string> members;  // pi_labels
    bool attained_by_all = false;
};

struct G2SupercuspidalRow {
    std::string id;
    G2Orbit dual_param;
    G2Orbit printed_dual;
    G2Orbit kwf_orbit;
    std::string kwf_class;
    G2Orbit ds_value;
    std::string verdict;  // "equal" | "less" | "greater"
};

struct G2Tables {
    std::vector<G2Row> rows;
    std::vector<G2Packet> packets;
    std::vector<G2SupercuspidalRow> supercuspidals;
};

// The bundled transcription; throws on malformed input, naming the row.
G2Tables parse_g2_tables(const std::string& json_text);
const std::string& bundled_g2_json();
const G2Tables& bundled_g2_tables();

struct G2CheckResult {
    std::string name;
    bool passed;
    std::string detail;
};

/* (a) the AZ column is an involution on row labels,
 * (b) wavefront of the AZ-dual is bounded by the dual of the parameter,
 * (c) every packet attains the bound (all members where asserted),
 * (d) wavefronts avoid the middle orbits; the bottom occurs only on the
 *     trivial representation,
 * (e) the supercuspidal table: printed duals, bound, and the
 *     three-way comparison verdicts. */
std::vector<G2CheckResult> verify_g2(const G2Tables& t);

}  // namespace orbits

#endif
