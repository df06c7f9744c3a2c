#ifndef ORBITS_PARTITION_HPP
#define ORBITS_PARTITION_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace orbits {

using Part = long long;

/* Integer partition: weakly decreasing list of positive parts.
 * Zero parts are stripped on construction; the empty partition is the
 * unique partition of 0. All operations are pure. */
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<Part> parts);
    Partition(std::initializer_list<Part> parts);

    // Parses the bracket text format, e.g. "[5,3,1]" or "[]".
    static Partition parse(std::string_view text);

    const std::vector<Part>& parts() const { return parts_; }
    std::size_t length() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }
    Part size() const { return size_; }

    // Zero-padded access, i in [0, inf).
    Part at(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

    std::string str() const;

    bool operator==(const Partition&) const = default;
    // Lexicographic on the part lists; used for canonical set ordering.
    std::strong_ordering operator<=>(const Partition& o) const;

private:
    std::vector<Part> parts_;
    Part size_ = 0;
};

// Conjugate Young diagram: result_j = #{i : p_i >= j}.
Partition transpose(const Partition& p);

// Componentwise addition after zero-padding the shorter argument.
Partition sum(const Partition& a, const Partition& b);

// Multiset union of parts, re-sorted.
Partition concat(const Partition& a, const Partition& b);

// The string [alpha] = (alpha, alpha-2, ..., 1 or 2); empty for alpha <= 0.
Partition string_interval(long long alpha);

// Staircase (m, m-1, ..., 1); empty for m <= 0.
Partition staircase(long long m);

// Every part multiplied by k (k >= 0).
Partition scale(const Partition& p, Part k);

enum class Dominance { Below, Above, Equal, Incomparable };

// Dominance (closure) order by prefix sums. Requires size(a) == size(b);
// comparing orbits of different groups is a modeling error, not "false".
Dominance dominates(const Partition& a, const Partition& b);

bool dom_leq(const Partition& a, const Partition& b);
bool dom_geq(const Partition& a, const Partition& b);

const char* to_string(Dominance v);

/* Finite set of partitions of equal size, kept in canonical
 * (lexicographically descending) order with duplicates removed. */
class PartitionSet {
public:
    PartitionSet() = default;
    explicit PartitionSet(std::vector<Partition> elems);

    const std::vector<Partition>& elements() const { return elems_; }
    std::size_t count() const { return elems_.size(); }
    bool contains(const Partition& p) const;

    bool operator==(const PartitionSet&) const = default;

private:
    std::vector<Partition> elems_;
};

// True iff every element of s1 is dominated by some element of s2.
bool set_leq(const PartitionSet& s1, const PartitionSet& s2);

}  // namespace orbits

#endif
