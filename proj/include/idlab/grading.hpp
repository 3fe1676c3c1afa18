#ifndef IDLAB_GRADING_HPP
#define IDLAB_GRADING_HPP

#include <map>
#include <set>
#include <vector>

#include "idlab/lie_ring.hpp"

namespace idlab {

/* The index decomposition i = (h_i - 1)(n - 1) + r_i with 1 <= r_i <= n - 1,
 * the weight-degree and level functions, and the layer/chain-set machinery
 * built on them.
 *
 *   WD(x^L d_k)    = wt(L) - deg(L) + n - k
 *   lev_i(x^L d_k) = h_i * WD + deg(L) - 1
 *
 * A basis element enters the chain at the least i >= -1 with lev_i <= i
 * (equality holds there for i >= 0); the derivations d_1..d_n enter at -1.
 */

struct LevelIndex {
    i64 i;
    i64 h;
    i64 r;
};

// h = floor((i-1)/(n-1)) + 1 with floor toward -infinity, so h_{-1} = h_0 = 0.
LevelIndex decompose(int n, i64 i);

i64 wd(const RingContext& ctx, const BasisElement& e);
i64 lev(const RingContext& ctx, i64 i, const BasisElement& e);

enum class EntryStatus {
    entered,     // index holds the least i with lev_i(e) <= i
    never,       // provably in no chain level (WD >= n, or WD = n-1 and e != d_1)
    cap_reached, // undecided within the caller's scan cap
};

struct EntryResult {
    EntryStatus status;
    i64 index = 0;

    bool entered_by(i64 i) const { return status == EntryStatus::entered && index <= i; }
};

// Scans i = -1, 0, 1, ... with early exit. For WD <= n-2 termination is
// guaranteed no later than i = ceil((deg-1)/(n-1-WD)) * (n-1); crossing that
// bound without a decision is an internal error. A caller cap smaller than
// the bound yields cap_reached instead.
EntryResult entry_index(const RingContext& ctx, const BasisElement& e, i64 cap);
EntryResult entry_index(const RingContext& ctx, const BasisElement& e);

struct LayerSet {
    i64 i;
    std::map<int, std::vector<BasisElement>> by_direction; // canonical order, no duplicates

    i64 total() const;
    std::set<BasisElement> as_set() const;
};

// The layer L_i (elements entering exactly at level i), built from the
// characterization: for each direction k with n - r_i + 1 <= k <= n,
// enumerate tail partitions T (t_u = l_{u+1}) with sum u*t_u <= r_i + k - n - 1,
// set WD = sum u*t_u + n - k and l_1 = i + 1 - h_i*WD - deg(T), and keep the
// element iff l_1 >= 0. Valid for every i >= 0; below the periodicity
// threshold the l_1 >= 0 filter prunes.
LayerSet enumerate_layer(const RingContext& ctx, i64 i);

// N_i = {d_1..d_n} union L_0 union ... union L_i (i >= -1).
std::set<BasisElement> enumerate_chain_set(const RingContext& ctx, i64 i);

// per(x^L d_k) = x_1^(n-1-WD) x^L d_k; requires WD(e) <= n-1 (domain_error
// otherwise). Preserves WD and shifts the entry level by n-1.
BasisElement period_map(const RingContext& ctx, const BasisElement& e);

// The threshold (n-4)(n-1) above which layer sizes are given by the partial
// sum sequences.
i64 periodicity_threshold(int n);

struct PredictedSizes {
    std::map<int, i64> by_direction; // |L_i ∩ B_k| = b_{r_i + k - n - 1}
    i64 total;                       // |L_i| = c_{r_i - 1}
};

// Only defined for i > periodicity_threshold(n); throws domain_error at or
// below it. Negative b-indices contribute 0 (those k are absent).
PredictedSizes predicted_sizes(int n, i64 i);

} // namespace idlab

#endif
