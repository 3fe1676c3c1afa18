#ifndef IDLAB_ORACLE_HPP
#define IDLAB_ORACLE_HPP

#include <string>
#include <vector>

#include "idlab/grading.hpp"
#include "idlab/lie_ring.hpp"

namespace idlab {

/* Definition-level brute force for the idealizer chain: N_{-1} is spanned by
 * d_1..d_n, and each next level is the set of basis elements whose bracket
 * with every element of the previous level lands back in its span. By the
 * homogeneity of idealizers this basis-level test determines the full module
 * idealizer, so these sets are ground truth for the analytic chain.
 *
 * Candidate generation is truncated at weight n + i (+ margin): members of
 * level i satisfy WD <= n - 1 and deg <= i + 1, hence weight <= n + i - 1.
 * The margin exists to test that the truncation is not binding. The
 * acceptance test per candidate is exact regardless of the cap.
 */

struct OracleConfig {
    i64 weight_cap_margin = 0;
    // pure mode checks every weight-bounded basis element; pruned mode
    // pre-filters with WD <= n-1 and deg <= i+1 for speed. An oracle that
    // reuses the graded theory proves nothing, so pure is the default.
    bool pure_mode = true;
};

// One idealizer step: every basis element b of weight <= weight_cap with
// [b, h] zero or in h for all h in H. Candidate checks run in parallel;
// IDEALIZER_LAB_THREADS caps the thread count.
std::set<BasisElement> idealizer_step(const RingContext& ctx,
                                      const std::set<BasisElement>& h,
                                      i64 weight_cap);

struct OracleChain {
    i64 i_max;
    // levels_[t] holds S_{t-1}, t = 0 .. i_max+1
    std::vector<std::set<BasisElement>> levels_;

    const std::set<BasisElement>& at(i64 i) const { return levels_.at(static_cast<size_t>(i + 1)); }
};

// S_{-1} = {d_1..d_n}; S_i = idealizer_step(S_{i-1}, n+i+margin). Throws
// logic_error if the computed chain fails to be ascending.
OracleChain oracle_chain(const RingContext& ctx, i64 i_max, const OracleConfig& cfg = {});

struct ChainDiff {
    i64 i;
    std::vector<BasisElement> missing; // analytic but not oracle
    std::vector<BasisElement> extra;   // oracle but not analytic

    bool equal() const { return missing.empty() && extra.empty(); }
};

// Per-level diff between the brute-force chain and enumerate_chain_set.
std::vector<ChainDiff> compare_chain(const RingContext& ctx, i64 i_max,
                                     const OracleConfig& cfg = {});

struct HomogeneityReport {
    i64 trials = 0;
    i64 closure_failures = 0;    // [v, h] escaped span(H) for v in the idealizer
    i64 separation_failures = 0; // no witness found for a perturbed v'
    i64 separation_trials = 0;   // 0 when no rejected candidates exist
    std::vector<std::string> witnesses;

    bool pass() const { return closure_failures == 0 && separation_failures == 0; }
    std::string summary() const;
};

// Randomized spot check that span-level idealizing matches the basis-level
// test: random combinations of accepted elements idealize span(H); adding a
// nonzero multiple of a rejected candidate always breaks it. Deterministic
// for a fixed seed.
HomogeneityReport verify_homogeneity(const RingContext& ctx,
                                     const std::set<BasisElement>& h,
                                     i64 trials, u64 seed);

// True iff every bracket of an N_i element with an N_j element is zero or an
// integer multiple of a single N_{j-1} basis element. Requires -1 <= i < j.
bool commutator_containment(const RingContext& ctx, i64 i, i64 j);

} // namespace idlab

#endif
