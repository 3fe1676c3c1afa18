#ifndef IDLAB_LIE_RING_HPP
#define IDLAB_LIE_RING_HPP

#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "idlab/partition.hpp"

namespace idlab {

/* The ring Lie(n): the free Z-module on basis elements x^L d_k where L is a
 * partition with maximal part <= k-1 and 1 <= k <= n, with the Lie bracket
 *
 *   [x^L d_k, x^T d_j] =  l_j * x^(L - e_j + T) d_k   if j < k
 *                      = -t_k * x^(L + T - e_k) d_j   if j > k
 *                      =  0                           if j = k
 *
 * where l_j (resp. t_k) is the multiplicity of part j in L (part k in T),
 * and an absent part makes the bracket zero.
 */

struct RingContext {
    int n;
    explicit RingContext(int rank) : n(rank) {
        if (rank < 3)
            throw std::invalid_argument("RingContext: rank n must be >= 3");
    }
};

struct BasisElement {
    Partition partition;
    int direction = 1; // the k of x^L d_k

    bool operator==(const BasisElement&) const = default;
    bool operator<(const BasisElement& other) const {
        if (direction != other.direction)
            return direction < other.direction;
        return partition < other.partition;
    }
};

inline BasisElement derivation(int k) { return BasisElement{Partition{}, k}; }

// Throws std::invalid_argument if e does not satisfy the basis invariants
// for ctx (1 <= direction <= n, max part <= direction - 1).
void validate(const RingContext& ctx, const BasisElement& e);

/* A finite integer combination of basis elements, kept canonical: no zero
 * coefficients, terms ordered by (direction, partition). The zero element is
 * the empty map. */
class RingElement {
public:
    RingElement() = default;

    static RingElement from(const BasisElement& e, i64 coeff = 1);

    // coefficient arithmetic is checked; collecting to zero drops the term
    void add_term(const BasisElement& e, i64 coeff);
    void add(const RingElement& other);

    RingElement negated() const;
    RingElement scaled(i64 factor) const;

    bool is_zero() const { return terms_.empty(); }
    i64 coeff_of(const BasisElement& e) const;
    const std::map<BasisElement, i64>& terms() const { return terms_; }

    bool operator==(const RingElement&) const = default;

private:
    std::map<BasisElement, i64> terms_;
};

// All basis elements with weight(L) <= max_weight, in canonical order
// (ascending direction, then partition order).
std::vector<BasisElement> basis_enumerate(const RingContext& ctx, i64 max_weight);

// The bracket of two basis elements: nullopt when it vanishes, otherwise the
// (nonzero coefficient, basis element) pair. The result always satisfies the
// basis invariants.
std::optional<std::pair<i64, BasisElement>>
bracket_basis(const RingContext& ctx, const BasisElement& left, const BasisElement& right);

// Bilinear extension with like-term collection.
RingElement bracket(const RingContext& ctx, const RingElement& x, const RingElement& y);

// True iff the support of x is contained in h (the zero element is in every
// span).
bool in_span(const RingElement& x, const std::set<BasisElement>& h);

} // namespace idlab

#endif
