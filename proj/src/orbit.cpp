#include "orbits/orbit.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace orbits {

Part OrbitKind::boxes() const {
    switch (family) {
        case Family::A: return rank;
        case Family::B: return 2 * rank + 1;
        case Family::C: return 2 * rank;
        case Family::D: return 2 * rank;
    }
    throw std::logic_error("bad family");
}

const char* to_string(Family f) {
    switch (f) {
        case Family::A: return "A";
        case Family::B: return "B";
        case Family::C: return "C";
        case Family::D: return "D";
    }
    return "?";
}

Family family_from_string(std::string_view s) {
    if (s == "A" || s == "a") return Family::A;
    if (s == "B" || s == "b") return Family::B;
    if (s == "C" || s == "c") return Family::C;
    if (s == "D" || s == "d") return Family::D;
    throw std::invalid_argument("unknown family: " + std::string(s));
}

// For B/D the bad parity is even, for C odd; A has no constraint.
static bool parity_ok(Family fam, const Partition& p) {
    if (fam == Family::A) return true;
    int bad = (fam == Family::C) ? 1 : 0;
    const auto& v = p.parts();
    for (size_t i = 0; i < v.size();) {
        size_t j = i;
        while (j < v.size() && v[j] == v[i]) ++j;
        if (v[i] % 2 == bad && (j - i) % 2 == 1) return false;
        i = j;
    }
    return true;
}

bool is_valid(OrbitKind kind, const Partition& p) {
    return p.size() == kind.boxes() && parity_ok(kind.family, p);
}

Partition collapse(OrbitKind kind, const Partition& p) {
    if (kind.family == Family::A)
        throw std::invalid_argument("collapse: type A has no collapse");
    if (p.size() != kind.boxes())
        throw std::invalid_argument("collapse: size " + std::to_string(p.size()) +
                                    " != boxes " + std::to_string(kind.boxes()));
    int bad = (kind.family == Family::C) ? 1 : 0;
    std::vector<Part> v = p.parts();
    for (;;) {
        // Largest part value with the wrong parity and odd multiplicity.
        size_t i = 0, off = v.size();
        while (i < v.size()) {
            size_t j = i;
            while (j < v.size() && v[j] == v[i]) ++j;
            if (v[i] % 2 == bad && (j - i) % 2 == 1) { off = j - 1; break; }
            i = j;
        }
        if (off == v.size()) break;
        // Move one box from the offending row to the highest legal lower row.
        --v[off];
        size_t j = off + 1;
        while (j < v.size() && v[j] + 1 > v[j - 1]) ++j;
        if (j < v.size())
            ++v[j];
        else
            v.push_back(1);
        std::sort(v.begin(), v.end(), std::greater<>());
        while (!v.empty() && v.back() == 0) v.pop_back();
    }
    return Partition(std::move(v));
}

static void enumerate_rec(Part remaining, Part max_part, std::vector<Part>& cur,
                          Family fam, std::vector<Partition>& out) {
    if (remaining == 0) {
        Partition p{std::vector<Part>(cur)};
        if (parity_ok(fam, p)) out.push_back(std::move(p));
        return;
    }
    for (Part v = std::min(remaining, max_part); v >= 1; --v) {
        cur.push_back(v);
        enumerate_rec(remaining - v, v, cur, fam, out);
        cur.pop_back();
    }
}

PartitionSet enumerate_orbits(OrbitKind kind, Part max_boxes) {
    Part boxes = kind.boxes();
    if (boxes > max_boxes)
        throw std::invalid_argument("enumerate_orbits: " + std::to_string(boxes) +
                                    " boxes exceeds bound " + std::to_string(max_boxes));
    std::vector<Partition> out;
    std::vector<Part> cur;
    if (boxes == 0)
        out.emplace_back();
    else
        enumerate_rec(boxes, boxes, cur, kind.family, out);
    return PartitionSet(std::move(out));
}

static Partition drop_box_smallest(const Partition& p) {
    std::vector<Part> v = p.parts();
    if (v.empty()) throw std::invalid_argument("cannot remove a box from the empty partition");
    --v.back();
    return Partition(std::move(v));
}

static Partition add_box_largest(const Partition& p) {
    std::vector<Part> v = p.parts();
    if (v.empty())
        v.push_back(1);
    else
        ++v.front();
    return Partition(std::move(v));
}

NilpotentOrbit dual(OrbitKind source, const Partition& p) {
    if (!is_valid(source, p))
        throw std::invalid_argument("dual: " + p.str() + " is not a valid type " +
                                    std::string(to_string(source.family)) + " orbit");
    switch (source.family) {
        case Family::A:
            return {source, transpose(p)};
        case Family::B:
            return {type_c(source.rank),
                    collapse(type_c(source.rank), drop_box_smallest(transpose(p)))};
        case Family::C:
            return {type_b(source.rank),
                    collapse(type_b(source.rank), add_box_largest(transpose(p)))};
        case Family::D:
            return {source, collapse(source, transpose(p))};
    }
    throw std::logic_error("bad family");
}

Partition dual_b_to_c_alt(const Partition& p) {
    Part n = (p.size() - 1) / 2;
    return transpose(collapse(type_c(n), drop_box_smallest(p)));
}

Partition induce_gl_sp(const Partition& s, const Partition& q, Part n) {
    Part m2 = q.size();
    if (m2 % 2 != 0 || !is_valid(type_c(m2 / 2), q))
        throw std::invalid_argument("induce_gl_sp: " + q.str() + " is not symplectic");
    if (s.size() + m2 / 2 != n)
        throw std::invalid_argument("induce_gl_sp: |s| + m != n");
    return collapse(type_c(n), sum(sum(s, s), q));
}

}  // namespace orbits
