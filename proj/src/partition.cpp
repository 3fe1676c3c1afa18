#include "idlab/partition.hpp"

#include <algorithm>
#include <stdexcept>

namespace idlab {

Partition Partition::single(int part, i64 mult) {
    Partition p;
    p.add(part, mult);
    return p;
}

i64 Partition::mult_of(int part) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), part,
                               [](const Entry& e, int p) { return e.part < p; });
    return (it != entries_.end() && it->part == part) ? it->mult : 0;
}

void Partition::add(int part, i64 delta) {
    if (part < 1)
        throw std::invalid_argument("partition parts must be >= 1");
    if (delta == 0)
        return;
    auto it = std::lower_bound(entries_.begin(), entries_.end(), part,
                               [](const Entry& e, int p) { return e.part < p; });
    if (it != entries_.end() && it->part == part) {
        it->mult = checked_add(it->mult, delta);
        if (it->mult < 0)
            throw std::logic_error("partition multiplicity went negative");
        if (it->mult == 0)
            entries_.erase(it);
    } else {
        if (delta < 0)
            throw std::logic_error("partition multiplicity went negative");
        entries_.insert(it, Entry{part, delta});
    }
}

i64 Partition::weight() const {
    i64 w = 0;
    for (const Entry& e : entries_)
        w = checked_add(w, checked_mul(e.part, e.mult));
    return w;
}

i64 Partition::degree() const {
    i64 d = 0;
    for (const Entry& e : entries_)
        d = checked_add(d, e.mult);
    return d;
}

int Partition::max_part() const {
    return entries_.empty() ? 0 : entries_.back().part;
}

bool Partition::operator<(const Partition& other) const {
    i64 wa = weight(), wb = other.weight();
    if (wa != wb)
        return wa < wb;
    // walk both entry lists by part; a missing part has multiplicity 0
    auto ia = entries_.begin(), ib = other.entries_.begin();
    while (ia != entries_.end() && ib != other.entries_.end()) {
        if (ia->part == ib->part) {
            if (ia->mult != ib->mult)
                return ia->mult > ib->mult;
            ++ia;
            ++ib;
        } else if (ia->part < ib->part) {
            return true; // this has a positive mult where other has 0
        } else {
            return false;
        }
    }
    // equal weight and one is a prefix of the other: only possible when both
    // ended (equal partitions)
    return false;
}

std::vector<Partition> enumerate_partitions(int max_part, i64 max_weight) {
    if (max_part < 0 || max_weight < 0)
        throw std::invalid_argument("enumerate_partitions: bounds must be >= 0");
    std::vector<Partition> out;
    Partition cur;
    // Within one weight class, recursing with the multiplicity of part p
    // descending yields exactly the canonical tie-break order.
    auto rec = [&](auto&& self, int part, i64 remaining) -> void {
        if (remaining == 0) {
            out.push_back(cur);
            return;
        }
        if (part > max_part)
            return;
        for (i64 m = remaining / part; m >= 0; --m) {
            if (m > 0)
                cur.add(part, m);
            self(self, part + 1, remaining - m * part);
            if (m > 0)
                cur.add(part, -m);
        }
    };
    for (i64 w = 0; w <= max_weight; ++w)
        rec(rec, 1, w);
    return out;
}

CountTriple partition_counts(int max_n) {
    if (max_n < 0)
        throw std::invalid_argument("partition_counts: max_n must be >= 0");
    CountTriple t;
    t.a.assign(static_cast<size_t>(max_n) + 1, 0);
    t.a[0] = 1;
    for (int part = 1; part <= max_n; ++part)
        for (int w = part; w <= max_n; ++w)
            t.a[w] = checked_add(t.a[w], t.a[w - part]);
    t.b.resize(t.a.size());
    t.c.resize(t.a.size());
    i64 sb = 0, sc = 0;
    for (size_t i = 0; i < t.a.size(); ++i) {
        sb = checked_add(sb, t.a[i]);
        t.b[i] = sb;
        sc = checked_add(sc, sb);
        t.c[i] = sc;
    }
    return t;
}

} // namespace idlab
