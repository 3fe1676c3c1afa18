#ifndef IDLAB_PARTITION_HPP
#define IDLAB_PARTITION_HPP

#include <vector>

#include "idlab/checked.hpp"

namespace idlab {

/* An integer partition as a finite multiset of positive parts, stored as a
 * sparse list of (part, multiplicity) entries sorted by part. No zero
 * multiplicities are ever stored; the empty list is the empty partition.
 *
 * weight = sum part*mult, degree = sum mult. Parts stay small (bounded by
 * the ring rank) while multiplicities grow with the chain level, so the
 * sparse form is uniformly cheap.
 */
class Partition {
public:
    struct Entry {
        int part;
        i64 mult;
        bool operator==(const Entry&) const = default;
    };

    Partition() = default;

    static Partition single(int part, i64 mult);

    i64 mult_of(int part) const;

    // Adjusts the multiplicity of `part` by `delta` (may be negative).
    // Going below zero is a logic error; hitting zero removes the entry.
    void add(int part, i64 delta);

    i64 weight() const;
    i64 degree() const;
    int max_part() const; // 0 for the empty partition
    bool empty() const { return entries_.empty(); }

    const std::vector<Entry>& entries() const { return entries_; }

    bool operator==(const Partition&) const = default;

    // Canonical order: ascending weight, ties broken on the multiplicity
    // vector (m_1, m_2, ...) with the larger multiplicity at the first
    // differing part coming first. So for weight 3: (1,1,1) < (2,1) < (3).
    bool operator<(const Partition& other) const;

private:
    std::vector<Entry> entries_; // ascending by part
};

struct CountTriple {
    std::vector<i64> a; // partition counts
    std::vector<i64> b; // partial sums of a
    std::vector<i64> c; // partial sums of b
};

// All partitions with every part <= max_part and weight <= max_weight, each
// exactly once, in canonical order (weight-major, then the tie-break above).
// Includes the empty partition.
std::vector<Partition> enumerate_partitions(int max_part, i64 max_weight);

// a_0..a_max_n by exact dynamic programming, with b and c the cumulative
// sums b_n = sum_{i<=n} a_i and c_n = sum_{i<=n} b_i.
CountTriple partition_counts(int max_n);

} // namespace idlab

#endif
