#include "idlab/grading.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <string>

namespace idlab {

LevelIndex decompose(int n, i64 i) {
    if (n < 3)
        throw std::invalid_argument("decompose: rank n must be >= 3");
    if (i < -1)
        throw std::invalid_argument("decompose: level index must be >= -1");
    i64 h = floor_div(i - 1, n - 1) + 1;
    i64 r = i - (h - 1) * (n - 1);
    assert(1 <= r && r <= n - 1);
    return LevelIndex{i, h, r};
}

i64 wd(const RingContext& ctx, const BasisElement& e) {
    validate(ctx, e);
    return e.partition.weight() - e.partition.degree() + ctx.n - e.direction;
}

i64 lev(const RingContext& ctx, i64 i, const BasisElement& e) {
    i64 h = decompose(ctx.n, i).h;
    return checked_add(checked_mul(h, wd(ctx, e)), e.partition.degree() - 1);
}

static EntryResult entry_index_impl(const RingContext& ctx, const BasisElement& e,
                                    i64 cap, bool has_cap) {
    const i64 n = ctx.n;
    const i64 w = wd(ctx, e);
    if (w >= n)
        return {EntryStatus::never, 0};
    if (w == n - 1) {
        // the only chain member with WD = n-1 is d_1
        if (e.partition.empty() && e.direction == 1)
            return {EntryStatus::entered, -1};
        return {EntryStatus::never, 0};
    }
    const i64 deg = e.partition.degree();
    // lev_{h(n-1)} - h(n-1) = deg - 1 - h(n-1-WD), so membership is certain
    // by h* = ceil((deg-1)/(n-1-WD)) full periods
    const i64 hstar = deg > 0 ? ceil_div_nonneg(deg - 1, n - 1 - w) : 0;
    const i64 analytic_stop = (n - 1) * (hstar + 2);
    const i64 stop = has_cap ? std::min(cap, analytic_stop) : analytic_stop;
    for (i64 i = -1; i <= stop; ++i)
        if (lev(ctx, i, e) <= i)
            return {EntryStatus::entered, i};
    if (has_cap && cap < analytic_stop)
        return {EntryStatus::cap_reached, 0};
    throw std::logic_error("entry_index: analytic scan bound crossed without a decision");
}

EntryResult entry_index(const RingContext& ctx, const BasisElement& e, i64 cap) {
    if (cap < 0)
        throw std::invalid_argument("entry_index: cap must be >= 0");
    return entry_index_impl(ctx, e, cap, true);
}

EntryResult entry_index(const RingContext& ctx, const BasisElement& e) {
    return entry_index_impl(ctx, e, 0, false);
}

i64 LayerSet::total() const {
    i64 t = 0;
    for (const auto& [k, v] : by_direction)
        t += static_cast<i64>(v.size());
    return t;
}

std::set<BasisElement> LayerSet::as_set() const {
    std::set<BasisElement> out;
    for (const auto& [k, v] : by_direction)
        out.insert(v.begin(), v.end());
    return out;
}

LayerSet enumerate_layer(const RingContext& ctx, i64 i) {
    if (i < 0)
        throw std::invalid_argument("enumerate_layer: level index must be >= 0");
    const int n = ctx.n;
    const LevelIndex li = decompose(n, i);
    LayerSet out{i, {}};
    const int k_min = std::max<i64>(2, n - li.r + 1);
    for (int k = k_min; k <= n; ++k) {
        const i64 tail_bound = li.r + k - n - 1;
        if (tail_bound < 0)
            continue;
        std::vector<BasisElement> elems;
        for (const Partition& tail : enumerate_partitions(static_cast<int>(tail_bound),
                                                          tail_bound)) {
            // condition (a) already forces tail parts <= k-2; keep the guard
            assert(tail.max_part() <= k - 2);
            const i64 wd_val = tail.weight() + n - k;
            const i64 lambda1 = i + 1 - checked_mul(li.h, wd_val) - tail.degree();
            if (lambda1 < 0)
                continue;
            Partition lam;
            lam.add(1, lambda1);
            for (const auto& entry : tail.entries())
                lam.add(entry.part + 1, entry.mult);
            elems.push_back(BasisElement{std::move(lam), k});
        }
        if (elems.empty())
            continue;
        std::sort(elems.begin(), elems.end());
        out.by_direction.emplace(k, std::move(elems));
    }
    return out;
}

std::set<BasisElement> enumerate_chain_set(const RingContext& ctx, i64 i) {
    if (i < -1)
        throw std::invalid_argument("enumerate_chain_set: level index must be >= -1");
    std::set<BasisElement> out;
    for (int k = 1; k <= ctx.n; ++k)
        out.insert(derivation(k));
    for (i64 j = 0; j <= i; ++j)
        for (const auto& [k, v] : enumerate_layer(ctx, j).by_direction)
            out.insert(v.begin(), v.end());
    return out;
}

BasisElement period_map(const RingContext& ctx, const BasisElement& e) {
    const i64 w = wd(ctx, e);
    if (w > ctx.n - 1)
        throw std::domain_error("period_map: WD(e) = " + std::to_string(w) +
                                " exceeds n-1 = " + std::to_string(ctx.n - 1));
    BasisElement out = e;
    out.partition.add(1, ctx.n - 1 - w);
    return out;
}

i64 periodicity_threshold(int n) {
    if (n < 3)
        throw std::invalid_argument("periodicity_threshold: rank n must be >= 3");
    return static_cast<i64>(n - 4) * (n - 1);
}

PredictedSizes predicted_sizes(int n, i64 i) {
    const i64 threshold = periodicity_threshold(n);
    if (i <= threshold)
        throw std::domain_error("predicted_sizes: level " + std::to_string(i) +
                                " is not above the threshold " + std::to_string(threshold));
    const LevelIndex li = decompose(n, i);
    const CountTriple counts = partition_counts(n - 2);
    PredictedSizes out{{}, counts.c[static_cast<size_t>(li.r - 1)]};
    for (int k = 2; k <= n; ++k) {
        const i64 idx = li.r + k - n - 1;
        if (idx >= 0)
            out.by_direction.emplace(k, counts.b[static_cast<size_t>(idx)]);
    }
    return out;
}

} // namespace idlab
