#include "orbits/springer.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace orbits {

Part StaircasePiece::rank() const {
    switch (flavor) {
        case Flavor::Unitary: return k * m * (m + 1) / 2;
        case Flavor::BPair: return m * m + m;
        case Flavor::DPair: return m * m;
    }
    throw std::logic_error("bad flavor");
}

static Bipartition canonical(Bipartition b) {
    if (b.family == WeylFamily::D && b.left < b.right) std::swap(b.left, b.right);
    return b;
}

Bipartition j_induce(const std::vector<StaircasePiece>& pieces, WeylFamily family,
                     Part rank) {
    Part total = 0;
    Partition left, right;
    for (const StaircasePiece& pc : pieces) {
        total += pc.rank();
        switch (pc.flavor) {
            case StaircasePiece::Flavor::Unitary:
                left = sum(left, scale(string_interval(pc.m), pc.k));
                right = sum(right, scale(string_interval(pc.m - 1), pc.k));
                break;
            case StaircasePiece::Flavor::BPair:
                left = sum(left, staircase(pc.m));
                right = sum(right, staircase(pc.m));
                break;
            case StaircasePiece::Flavor::DPair:
                left = sum(left, staircase(pc.m));
                right = sum(right, staircase(pc.m - 1));
                break;
        }
    }
    if (total != rank)
        throw std::invalid_argument("j_induce: piece ranks sum to " +
                                    std::to_string(total) + ", expected " +
                                    std::to_string(rank));
    return canonical({std::move(left), std::move(right), family});
}

// Increasing beta-set style symbol entries for one side.
static std::vector<Part> side_entries(const Partition& side, size_t rows, bool odd) {
    std::vector<Part> inc(rows, 0);
    const auto& v = side.parts();
    if (v.size() > rows) throw std::logic_error("side too long for symbol");
    for (size_t i = 0; i < v.size(); ++i) inc[rows - 1 - i] = v[i];
    std::vector<Part> out(rows);
    for (size_t i = 0; i < rows; ++i) {
        Part b = inc[i] + static_cast<Part>(i);
        out[i] = odd ? 2 * b + 1 : 2 * b;
    }
    return out;
}

static Partition orbit_from_entries(std::vector<Part> entries) {
    std::sort(entries.begin(), entries.end());
    std::vector<Part> lam(entries.size());
    for (size_t i = 0; i < entries.size(); ++i)
        lam[i] = entries[i] - static_cast<Part>(i);
    return Partition(std::move(lam));
}

Bipartition springer_bipartition(const NilpotentOrbit& o) {
    WeylFamily fam;
    size_t mod2;  // symbol length parity: B uses odd, C/D even
    switch (o.kind.family) {
        case Family::B: fam = WeylFamily::B; mod2 = 1; break;
        case Family::C: fam = WeylFamily::C; mod2 = 0; break;
        case Family::D: fam = WeylFamily::D; mod2 = 0; break;
        default: throw std::invalid_argument("springer_bipartition: type A unsupported");
    }
    if (!is_valid(o.kind, o.partition))
        throw std::invalid_argument("springer_bipartition: invalid orbit " +
                                    o.partition.str());
    std::vector<Part> inc = o.partition.parts();
    std::reverse(inc.begin(), inc.end());
    if (inc.size() % 2 != mod2) inc.insert(inc.begin(), 0);
    std::vector<Part> odds, evens;
    for (size_t i = 0; i < inc.size(); ++i) {
        Part star = inc[i] + static_cast<Part>(i);
        (star % 2 ? odds : evens).push_back(star);
    }
    size_t k = inc.size() / 2;
    size_t want_odds = (fam == WeylFamily::B) ? k + 1 : k;
    if (odds.size() != want_odds)
        throw std::logic_error("symbol entry count off for " + o.partition.str());
    std::vector<Part> lv, rv;
    for (size_t i = 0; i < odds.size(); ++i)
        lv.push_back((odds[i] - 1) / 2 - static_cast<Part>(i));
    for (size_t i = 0; i < evens.size(); ++i)
        rv.push_back(evens[i] / 2 - static_cast<Part>(i));
    return canonical({Partition(std::move(lv)), Partition(std::move(rv)), fam});
}

static NilpotentOrbit try_orbit(const Partition& left, const Partition& right,
                                WeylFamily fam) {
    size_t k = std::max(left.length(), right.length()) + 1;
    size_t lrows = (fam == WeylFamily::B) ? k + 1 : k;
    std::vector<Part> entries = side_entries(left, lrows, /*odd=*/true);
    std::vector<Part> ev = side_entries(right, k, /*odd=*/false);
    entries.insert(entries.end(), ev.begin(), ev.end());
    Partition p = orbit_from_entries(std::move(entries));
    OrbitKind kind{Family::B, 0};
    switch (fam) {
        case WeylFamily::B: kind = type_b((p.size() - 1) / 2); break;
        case WeylFamily::C: kind = type_c(p.size() / 2); break;
        case WeylFamily::D: kind = type_d(p.size() / 2); break;
    }
    if (!is_valid(kind, p)) return {kind, Partition{}};
    NilpotentOrbit o{kind, p};
    Bipartition back = springer_bipartition(o);
    bool match = back.left == left && back.right == right;
    if (fam == WeylFamily::D)  // unordered pair
        match = match || (back.left == right && back.right == left);
    if (match) return o;
    return {kind, Partition{}};
}

static bool found(const NilpotentOrbit& o) {
    return !o.partition.empty() || o.kind.boxes() == 0;
}

NilpotentOrbit springer_orbit(const Bipartition& b) {
    NilpotentOrbit o = try_orbit(b.left, b.right, b.family);
    if (b.family == WeylFamily::D && !(b.left == b.right)) {
        NilpotentOrbit o2 = try_orbit(b.right, b.left, b.family);
        if (found(o) && found(o2) && !(o == o2))
            throw std::logic_error("springer_orbit: ambiguous type D pair " +
                                   b.left.str() + "x" + b.right.str());
        if (!found(o)) o = o2;
    }
    if (!found(o))
        throw std::invalid_argument(
            "springer_orbit: " + b.left.str() + "x" + b.right.str() +
            " is not a trivial-local-system Springer representation");
    return o;
}

Partition oracle_wavefront_factor(const std::vector<StaircasePiece>& pieces,
                                  WeylFamily family) {
    Part rank = 0;
    for (const StaircasePiece& pc : pieces) rank += pc.rank();
    return springer_orbit(j_induce(pieces, family, rank)).partition;
}

}  // namespace orbits
