#include "orbits/partition.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace orbits {

static void normalize(std::vector<Part>& v) {
    std::sort(v.begin(), v.end(), std::greater<>());
    while (!v.empty() && v.back() == 0) v.pop_back();
    for (Part p : v)
        if (p < 0) throw std::invalid_argument("negative part in partition");
}

Partition::Partition(std::vector<Part> parts) : parts_(std::move(parts)) {
    normalize(parts_);
    size_ = std::accumulate(parts_.begin(), parts_.end(), Part{0});
}

Partition::Partition(std::initializer_list<Part> parts)
    : Partition(std::vector<Part>(parts)) {}

Partition Partition::parse(std::string_view text) {
    auto fail = [&] {
        throw std::invalid_argument("bad partition literal: " + std::string(text));
    };
    size_t a = text.find_first_not_of(" \t\r\n");
    size_t b = text.find_last_not_of(" \t\r\n");
    if (a == std::string_view::npos) fail();
    text = text.substr(a, b - a + 1);
    if (text.size() < 2 || text.front() != '[' || text.back() != ']') fail();
    std::string_view body = text.substr(1, text.size() - 2);
    std::vector<Part> parts;
    size_t pos = 0;
    while (pos < body.size()) {
        size_t comma = body.find(',', pos);
        std::string_view tok = body.substr(pos, comma == std::string_view::npos
                                                    ? std::string_view::npos
                                                    : comma - pos);
        size_t ta = tok.find_first_not_of(" \t");
        if (ta == std::string_view::npos) fail();
        size_t tb = tok.find_last_not_of(" \t");
        tok = tok.substr(ta, tb - ta + 1);
        Part value = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc{} || ptr != tok.data() + tok.size()) fail();
        parts.push_back(value);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
        if (pos == body.size()) fail();  // trailing comma
    }
    return Partition(std::move(parts));
}

std::string Partition::str() const {
    std::string out = "[";
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    out += ']';
    return out;
}

std::strong_ordering Partition::operator<=>(const Partition& o) const {
    return std::lexicographical_compare_three_way(
        parts_.begin(), parts_.end(), o.parts_.begin(), o.parts_.end());
}

Partition transpose(const Partition& p) {
    std::vector<Part> out;
    if (!p.empty()) {
        out.resize(static_cast<size_t>(p.parts()[0]));
        for (Part row : p.parts())
            for (Part j = 0; j < row; ++j) ++out[static_cast<size_t>(j)];
    }
    return Partition(std::move(out));
}

Partition sum(const Partition& a, const Partition& b) {
    size_t n = std::max(a.length(), b.length());
    std::vector<Part> out(n);
    for (size_t i = 0; i < n; ++i) out[i] = a.at(i) + b.at(i);
    return Partition(std::move(out));
}

Partition concat(const Partition& a, const Partition& b) {
    std::vector<Part> out = a.parts();
    out.insert(out.end(), b.parts().begin(), b.parts().end());
    return Partition(std::move(out));
}

Partition string_interval(long long alpha) {
    std::vector<Part> out;
    for (long long v = alpha; v > 0; v -= 2) out.push_back(v);
    return Partition(std::move(out));
}

Partition staircase(long long m) {
    std::vector<Part> out;
    for (long long v = m; v > 0; --v) out.push_back(v);
    return Partition(std::move(out));
}

Partition scale(const Partition& p, Part k) {
    if (k < 0) throw std::invalid_argument("scale: negative factor");
    if (k == 0) return Partition{};
    std::vector<Part> out = p.parts();
    for (Part& v : out) v *= k;
    return Partition(std::move(out));
}

Dominance dominates(const Partition& a, const Partition& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("dominance: sizes differ (" + a.str() +
                                    " vs " + b.str() + ")");
    size_t n = std::max(a.length(), b.length());
    Part pa = 0, pb = 0;
    bool a_ge = true, b_ge = true;
    for (size_t i = 0; i < n; ++i) {
        pa += a.at(i);
        pb += b.at(i);
        if (pa < pb) a_ge = false;
        if (pb < pa) b_ge = false;
    }
    if (a_ge && b_ge) return Dominance::Equal;
    if (a_ge) return Dominance::Above;
    if (b_ge) return Dominance::Below;
    return Dominance::Incomparable;
}

bool dom_leq(const Partition& a, const Partition& b) {
    Dominance d = dominates(a, b);
    return d == Dominance::Below || d == Dominance::Equal;
}

bool dom_geq(const Partition& a, const Partition& b) {
    Dominance d = dominates(a, b);
    return d == Dominance::Above || d == Dominance::Equal;
}

const char* to_string(Dominance v) {
    switch (v) {
        case Dominance::Below: return "below";
        case Dominance::Above: return "above";
        case Dominance::Equal: return "equal";
        case Dominance::Incomparable: return "incomparable";
    }
    return "?";
}

PartitionSet::PartitionSet(std::vector<Partition> elems) : elems_(std::move(elems)) {
    for (const Partition& p : elems_)
        if (p.size() != elems_.front().size())
            throw std::invalid_argument("partition set: mixed sizes");
    std::sort(elems_.begin(), elems_.end(), std::greater<>());
    elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
}

bool PartitionSet::contains(const Partition& p) const {
    return std::binary_search(elems_.begin(), elems_.end(), p, std::greater<>());
}

bool set_leq(const PartitionSet& s1, const PartitionSet& s2) {
    for (const Partition& p : s1.elements()) {
        bool ok = false;
        for (const Partition& q : s2.elements())
            if (dom_leq(p, q)) { ok = true; break; }
        if (!ok) return false;
    }
    return true;
}

}  // namespace orbits
