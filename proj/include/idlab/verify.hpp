#ifndef IDLAB_VERIFY_HPP
#define IDLAB_VERIFY_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "idlab/oracle.hpp"

namespace idlab {

/* The all-in-one verification suite: every structural claim the library
 * rests on, checked against independent routes (brute-force enumeration,
 * the definition-level idealizer oracle, frozen sequence fixtures).
 */

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string witness; // first failing case, empty when pass
    std::string info;    // deterministic one-line summary
};

// The bracket under test is injectable so the suite's sensitivity can be
// demonstrated against a tampered implementation.
using BracketFn = std::function<std::optional<std::pair<i64, BasisElement>>(
    const RingContext&, const BasisElement&, const BasisElement&)>;

CheckResult check_antisymmetry(const RingContext& ctx, i64 max_weight,
                               const BracketFn& fn = {});
CheckResult check_jacobi(const RingContext& ctx, i64 trials, i64 max_weight, u64 seed,
                         const BracketFn& fn = {});
CheckResult check_level_shift(const RingContext& ctx);
CheckResult check_bracket_grading(const RingContext& ctx);
CheckResult check_wd_lower_bound(const RingContext& ctx);
CheckResult check_level_reduction(const RingContext& ctx);
CheckResult check_step_periodicity(const RingContext& ctx);
CheckResult check_layer_characterization(const RingContext& ctx, i64 i_max);
CheckResult check_pure_x1_uniqueness(const RingContext& ctx, i64 i_max);
CheckResult check_remark_elements(const RingContext& ctx);
CheckResult check_predicted_sizes(const RingContext& ctx, i64 i_max);
CheckResult check_period_map(const RingContext& ctx, i64 i_max);
CheckResult check_commutator_containment(const RingContext& ctx, i64 j_max);
CheckResult check_oracle_equivalence(const RingContext& ctx, i64 i_max, i64 margin = 0);
CheckResult check_homogeneity(const RingContext& ctx, i64 i_max, i64 trials, u64 seed);
CheckResult check_non_membership(const RingContext& ctx, i64 i_max);
CheckResult check_table1_discrepancy();

struct VerifyOptions {
    int n = 5;
    i64 i_max = 8;
    u64 seed = 12345;
    i64 trials = 200;
};

struct VerifyReport {
    VerifyOptions opts;
    std::vector<CheckResult> checks;

    bool all_pass() const;
};

VerifyReport run_verify(const VerifyOptions& opts);

} // namespace idlab

#endif
